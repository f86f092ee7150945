#include <algorithm>
#include <string>

#include "trimobius/error.hpp"
#include "trimobius/kernels.hpp"
#include "trimobius/mobius.hpp"

namespace trimobius {
namespace {

// Entries below 2^52 keep every row operation over <= 1000 rows below 2^62.
constexpr std::int64_t kEntryBound = std::int64_t{1} << 52;

void check_dim(std::size_t dim, std::size_t cells) {
  if (dim == 0 || dim > kMaxMatrixDimension) {
    throw StructuralError("matrix dimension " + std::to_string(dim) + " outside 1.." +
                          std::to_string(kMaxMatrixDimension));
  }
  if (cells != dim * dim) throw StructuralError("matrix storage does not match dimension");
}

void check_cell(std::size_t dim, std::size_t i, std::size_t j) {
  if (i == 0 || j == 0 || i > dim || j > dim) {
    throw IndexOutOfRange("cell (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") outside a " + std::to_string(dim) + "x" + std::to_string(dim) +
                          " matrix");
  }
}

template <typename T, typename Out>
std::vector<Out> flatten(const std::vector<std::vector<T>>& rows) {
  std::vector<Out> cells;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw StructuralError("matrix rows must be square");
    for (T v : r) cells.push_back(static_cast<Out>(v));
  }
  return cells;
}

}  // namespace

ZetaMatrix::ZetaMatrix(std::size_t dim, std::vector<std::uint8_t> row_major)
    : dim_(dim), cells_(std::move(row_major)) {
  check_dim(dim_, cells_.size());
  if (std::any_of(cells_.begin(), cells_.end(), [](std::uint8_t c) { return c > 1; })) {
    throw StructuralError("zeta matrix entries must be 0 or 1");
  }
}

ZetaMatrix ZetaMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  for (const auto& r : rows)
    for (int v : r)
      if (v != 0 && v != 1) throw StructuralError("zeta matrix entries must be 0 or 1");
  return ZetaMatrix(rows.size(), flatten<int, std::uint8_t>(rows));
}

ZetaMatrix ZetaMatrix::identity(std::size_t dim) {
  std::vector<std::uint8_t> cells(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) cells[i * dim + i] = 1;
  return ZetaMatrix(dim, std::move(cells));
}

std::uint8_t ZetaMatrix::at(std::size_t i, std::size_t j) const {
  check_cell(dim_, i, j);
  return cells_[(i - 1) * dim_ + (j - 1)];
}

std::span<const std::uint8_t> ZetaMatrix::row(std::size_t i) const {
  check_cell(dim_, i, 1);
  return std::span<const std::uint8_t>(cells_).subspan((i - 1) * dim_, dim_);
}

MobiusMatrix::MobiusMatrix(std::size_t dim, std::vector<std::int64_t> row_major)
    : dim_(dim), cells_(std::move(row_major)) {
  check_dim(dim_, cells_.size());
}

MobiusMatrix MobiusMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  return MobiusMatrix(rows.size(), flatten<std::int64_t, std::int64_t>(rows));
}

std::int64_t MobiusMatrix::at(std::size_t i, std::size_t j) const {
  check_cell(dim_, i, j);
  return cells_[(i - 1) * dim_ + (j - 1)];
}

std::span<const std::int64_t> MobiusMatrix::row(std::size_t i) const {
  check_cell(dim_, i, 1);
  return std::span<const std::int64_t>(cells_).subspan((i - 1) * dim_, dim_);
}

std::vector<std::int64_t> MobiusMatrix::first_column() const {
  std::vector<std::int64_t> col(dim_);
  for (std::size_t i = 0; i < dim_; ++i) col[i] = cells_[i * dim_];
  return col;
}

ZetaMatrix zeta_matrix(const DivisibilityPoset& poset, std::size_t n) {
  if (n == 0 || n > poset.max_index() || n > kMaxMatrixDimension) {
    throw IndexOutOfRange("zeta matrix dimension " + std::to_string(n) + " outside 1.." +
                          std::to_string(std::min<std::uint64_t>(poset.max_index(),
                                                                 kMaxMatrixDimension)));
  }
  std::vector<std::uint64_t> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = poset.value(i + 1);
  std::vector<std::uint8_t> cells(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) cells[i * n + j] = values[i] % values[j] == 0;
  return ZetaMatrix(n, std::move(cells));
}

MobiusMatrix invert_zeta(const ZetaMatrix& zeta) {
  const std::size_t n = zeta.dim();
  for (std::size_t i = 1; i <= n; ++i) {
    const auto row = zeta.row(i);
    if (row[i - 1] != 1) throw StructuralError("zeta matrix diagonal must be all ones");
    if (std::any_of(row.begin() + static_cast<std::ptrdiff_t>(i), row.end(),
                    [](std::uint8_t c) { return c != 0; })) {
      throw StructuralError("zeta matrix must be lower triangular");
    }
  }

  std::vector<std::int64_t> cells(n * n, 0);
  std::span<std::int64_t> all(cells);
  for (std::size_t i = 0; i < n; ++i) {
    auto target = all.subspan(i * n, n);
    target[i] = 1;
    const auto zrow = zeta.row(i + 1);
    // Row j of M is zero past column j, so only its first j+1 entries matter.
    for (std::size_t j = 0; j < i; ++j) {
      if (zrow[j]) kernels::row_subtract(target.first(j + 1), all.subspan(j * n, j + 1));
    }
    if (kernels::max_abs(target.first(i + 1)) >= kEntryBound) {
      throw OverflowError("Mobius matrix entry magnitude exceeds 2^52 in row " +
                          std::to_string(i + 1));
    }
  }
  MobiusMatrix mobius(n, std::move(cells));
  if (!verify_inverse(zeta, mobius)) throw StructuralError("forward substitution produced M*Z != I");
  return mobius;
}

bool verify_inverse(const ZetaMatrix& zeta, const MobiusMatrix& mobius) {
  const std::size_t n = zeta.dim();
  if (mobius.dim() != n) {
    throw StructuralError("dimension mismatch: " + std::to_string(mobius.dim()) + " vs " +
                          std::to_string(n));
  }
  std::vector<std::int64_t> acc(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto mrow = mobius.row(i);
    if (kernels::max_abs(mrow) >= kEntryBound) {
      throw OverflowError("Mobius matrix entry magnitude exceeds 2^52 in row " + std::to_string(i));
    }
    std::fill(acc.begin(), acc.end(), 0);
    // Row i of M*Z = sum_j M[i][j] * (row j of Z).
    for (std::size_t j = 1; j <= n; ++j) {
      if (mrow[j - 1] != 0) kernels::masked_accumulate(acc, mrow[j - 1], zeta.row(j));
    }
    for (std::size_t k = 0; k < n; ++k)
      if (acc[k] != (k + 1 == i ? 1 : 0)) return false;
  }
  return true;
}

bool verify_inverse(const ZetaMatrix& zeta, const ZetaMatrix& other) {
  std::vector<std::int64_t> cells;
  cells.reserve(other.dim() * other.dim());
  for (std::size_t i = 1; i <= other.dim(); ++i)
    for (std::uint8_t c : other.row(i)) cells.push_back(c);
  return verify_inverse(zeta, MobiusMatrix(other.dim(), std::move(cells)));
}

MobiusMatrix mobius_matrix_by_recursion(const DivisibilityPoset& poset, std::size_t n) {
  if (n == 0 || n > poset.max_index() || n > kMaxMatrixDimension) {
    throw IndexOutOfRange("Mobius matrix dimension " + std::to_string(n) + " out of range");
  }
  const PredecessorTable table(poset, n);
  const TwoVariableMobius mu(poset);
  std::vector<std::int64_t> cells(n * n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    cells[(i - 1) * n + (i - 1)] = 1;
    for (std::uint32_t j : table.predecessors(i)) cells[(i - 1) * n + (j - 1)] = mu(j, i);
  }
  return MobiusMatrix(n, std::move(cells));
}

}  // namespace trimobius
