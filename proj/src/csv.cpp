#include <cstdio>
#include <ostream>

#include "trimobius/io.hpp"

namespace trimobius::io {
namespace {

template <typename Matrix>
void write_rows(std::ostream& out, const Matrix& m) {
  std::string buf;
  for (std::size_t i = 1; i <= m.dim(); ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) buf += ',';
      buf += std::to_string(static_cast<std::int64_t>(row[j]));
    }
    buf += '\n';
  }
  out << buf;
}

}  // namespace

void write_matrix_csv(std::ostream& out, const ZetaMatrix& zeta) { write_rows(out, zeta); }

void write_matrix_csv(std::ostream& out, const MobiusMatrix& mobius) { write_rows(out, mobius); }

void write_series_csv(std::ostream& out, const SeriesReport& series) {
  std::string buf;
  char num[32];
  for (std::size_t k = 0; k < series.size(); ++k) {
    buf += std::to_string(k + 1);
    buf += ',';
    if (series.value_kind == SeriesValues::Integer) {
      buf += std::to_string(series.integer_ys[k]);
    } else {
      std::snprintf(num, sizeof num, "%.17g", series.ys[k]);
      buf += num;
    }
    buf += '\n';
  }
  out << buf;
}

}  // namespace trimobius::io
