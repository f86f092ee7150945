#include <algorithm>

#include "trimobius/error.hpp"
#include "trimobius/io.hpp"

namespace trimobius::io {

OeisDiffReport oeis_diff(const BFile& local, std::span<const std::int64_t> computed) {
  OeisDiffReport report;
  const std::int64_t local_last = local.offset + static_cast<std::int64_t>(local.values.size()) - 1;
  report.overlap_first = std::max<std::int64_t>(local.offset, 1);
  report.overlap_last = std::min<std::int64_t>(local_last, static_cast<std::int64_t>(computed.size()));
  if (local.values.empty() || report.overlap_last < report.overlap_first) {
    throw FormatError("b-file and computed series share no index; nothing to compare");
  }
  for (std::int64_t n = report.overlap_first; n <= report.overlap_last; ++n) {
    const std::int64_t mine = computed[static_cast<std::size_t>(n - 1)];
    const std::int64_t theirs = local.values[static_cast<std::size_t>(n - local.offset)];
    if (mine != theirs) {
      report.first_mismatch = n;
      report.local_value = theirs;
      report.computed_value = mine;
      break;
    }
  }
  return report;
}

}  // namespace trimobius::io
