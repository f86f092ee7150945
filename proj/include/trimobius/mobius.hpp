#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "trimobius/poset.hpp"

namespace trimobius {

// mu_P(1, n) for n = 1..N.
class MobiusVector {
 public:
  MobiusVector(SequenceKind kind, std::vector<std::int64_t> values);

  SequenceKind kind() const noexcept { return kind_; }
  std::uint64_t size() const noexcept { return buffer_.size() - 1; }
  std::int64_t at(std::uint64_t n) const;
  // Entries for n = 1..N (element 0 is mu(1, 1)).
  std::span<const std::int64_t> values() const noexcept {
    return std::span<const std::int64_t>(buffer_).subspan(1);
  }

 private:
  friend MobiusVector mobius_one_var(const PredecessorTable& table);
  MobiusVector(SequenceKind kind, std::size_t n);

  SequenceKind kind_;
  std::vector<std::int64_t> buffer_;  // buffer_[0] unused, so 1-based indices address it
};

// Increasing-n recursion over cached predecessor lists:
//   mu(1, 1) = 1,  mu(1, n) = -sum_{d in pred(n)} mu(1, d).
// Throws OverflowError instead of wrapping.
MobiusVector mobius_one_var(const PredecessorTable& table);
MobiusVector mobius_one_var(const DivisibilityPoset& poset, std::uint64_t n);

// On-demand mu_P(m, n) through the interval recursion, memoized by (m, n).
// The memo is mutex-guarded, so one instance can serve concurrent callers.
class TwoVariableMobius {
 public:
  explicit TwoVariableMobius(const DivisibilityPoset& poset) : poset_(poset) {}

  std::int64_t operator()(std::uint64_t m, std::uint64_t n) const;
  std::size_t cached_entries() const;

 private:
  DivisibilityPoset poset_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::uint64_t, std::uint64_t>, std::int64_t> memo_;
};

std::int64_t mobius_two_var(const DivisibilityPoset& poset, std::uint64_t m, std::uint64_t n);

// Dense matrices are only materialized up to this dimension.
inline constexpr std::size_t kMaxMatrixDimension = 1000;

// Z[i][j] = 1 iff j <=_P i (1-based).  Any 0/1 content is representable so
// that invert_zeta can reject non-unitriangular input.
class ZetaMatrix {
 public:
  ZetaMatrix(std::size_t dim, std::vector<std::uint8_t> row_major);
  static ZetaMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static ZetaMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::uint8_t at(std::size_t i, std::size_t j) const;
  std::span<const std::uint8_t> row(std::size_t i) const;

  bool operator==(const ZetaMatrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<std::uint8_t> cells_;
};

// M[i][j] = mu_P(j, i) (1-based).
class MobiusMatrix {
 public:
  MobiusMatrix(std::size_t dim, std::vector<std::int64_t> row_major);
  static MobiusMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t at(std::size_t i, std::size_t j) const;
  std::span<const std::int64_t> row(std::size_t i) const;
  std::vector<std::int64_t> first_column() const;

  bool operator==(const MobiusMatrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<std::int64_t> cells_;
};

ZetaMatrix zeta_matrix(const DivisibilityPoset& poset, std::size_t n);

// Exact inverse by forward substitution (row i = e_i - sum of rows j < i
// with Z[i][j] = 1).  Throws StructuralError unless Z is lower
// unitriangular; the result is checked with verify_inverse before return.
MobiusMatrix invert_zeta(const ZetaMatrix& zeta);

// True iff M * Z is exactly the identity.  Throws StructuralError on a
// dimension mismatch.
bool verify_inverse(const ZetaMatrix& zeta, const MobiusMatrix& mobius);
bool verify_inverse(const ZetaMatrix& zeta, const ZetaMatrix& other);

// Same matrix as invert_zeta(zeta_matrix(poset, n)), entry by entry from
// the two-variable recursion.
MobiusMatrix mobius_matrix_by_recursion(const DivisibilityPoset& poset, std::size_t n);

}  // namespace trimobius
