#include "trimobius/kernels.hpp"

#include <cassert>

namespace trimobius::kernels::scalar {

std::int64_t gather_sum(std::span<const std::int64_t> values,
                        std::span<const std::uint32_t> indices) {
  std::int64_t sum = 0;
  for (std::uint32_t idx : indices) sum += values[idx];
  return sum;
}

void row_subtract(std::span<std::int64_t> acc, std::span<const std::int64_t> row) {
  assert(acc.size() == row.size());
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] -= row[k];
}

void masked_accumulate(std::span<std::int64_t> acc, std::int64_t scale,
                       std::span<const std::uint8_t> mask) {
  assert(acc.size() == mask.size());
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += scale * mask[k];
}

std::int64_t max_abs(std::span<const std::int64_t> xs) {
  std::int64_t best = 0;
  for (std::int64_t x : xs) {
    const std::int64_t a = x < 0 ? -x : x;
    if (a > best) best = a;
  }
  return best;
}

void inclusive_scan(std::span<const std::int64_t> in, std::span<std::int64_t> out) {
  assert(in.size() == out.size());
  std::int64_t running = 0;
  for (std::size_t k = 0; k < in.size(); ++k) {
    running += in[k];
    out[k] = running;
  }
}

void inclusive_scan_abs(std::span<const std::int64_t> in, std::span<std::int64_t> out) {
  assert(in.size() == out.size());
  std::int64_t running = 0;
  for (std::size_t k = 0; k < in.size(); ++k) {
    running += in[k] < 0 ? -in[k] : in[k];
    out[k] = running;
  }
}

}  // namespace trimobius::kernels::scalar
