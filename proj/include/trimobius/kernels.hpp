#pragma once

// Dense integer kernels with a scalar reference and SIMD variants.
//
// Every function in `scalar::` is the reference; `avx2::` must produce
// bit-identical results.  The unqualified functions dispatch to the best
// variant the running CPU supports (or the one forced with set_isa).
//
// None of these kernels check for signed overflow.  Callers bound the
// magnitudes of their inputs first (see mobius.cpp / matrix.cpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace trimobius::kernels {

enum class Isa { Scalar, Avx2 };

bool isa_supported(Isa isa) noexcept;
Isa best_isa() noexcept;
Isa active_isa() noexcept;
// Throws std::invalid_argument when the CPU (or build) lacks `isa`.
void set_isa(Isa isa);
std::string_view isa_name(Isa isa) noexcept;

// Sum of values[idx] for idx in indices.  Every idx must be < 2^31.
std::int64_t gather_sum(std::span<const std::int64_t> values,
                        std::span<const std::uint32_t> indices);
// acc[k] -= row[k]; sizes must match.
void row_subtract(std::span<std::int64_t> acc, std::span<const std::int64_t> row);
// acc[k] += scale * mask[k] where every mask[k] is 0 or 1.
void masked_accumulate(std::span<std::int64_t> acc, std::int64_t scale,
                       std::span<const std::uint8_t> mask);
// max |x|; input must not contain INT64_MIN.
std::int64_t max_abs(std::span<const std::int64_t> xs);
void inclusive_scan(std::span<const std::int64_t> in, std::span<std::int64_t> out);
void inclusive_scan_abs(std::span<const std::int64_t> in, std::span<std::int64_t> out);

namespace scalar {
std::int64_t gather_sum(std::span<const std::int64_t> values,
                        std::span<const std::uint32_t> indices);
void row_subtract(std::span<std::int64_t> acc, std::span<const std::int64_t> row);
void masked_accumulate(std::span<std::int64_t> acc, std::int64_t scale,
                       std::span<const std::uint8_t> mask);
std::int64_t max_abs(std::span<const std::int64_t> xs);
void inclusive_scan(std::span<const std::int64_t> in, std::span<std::int64_t> out);
void inclusive_scan_abs(std::span<const std::int64_t> in, std::span<std::int64_t> out);
}  // namespace scalar

#if defined(TRIMOBIUS_HAVE_AVX2)
namespace avx2 {
std::int64_t gather_sum(std::span<const std::int64_t> values,
                        std::span<const std::uint32_t> indices);
void row_subtract(std::span<std::int64_t> acc, std::span<const std::int64_t> row);
void masked_accumulate(std::span<std::int64_t> acc, std::int64_t scale,
                       std::span<const std::uint8_t> mask);
std::int64_t max_abs(std::span<const std::int64_t> xs);
void inclusive_scan(std::span<const std::int64_t> in, std::span<std::int64_t> out);
void inclusive_scan_abs(std::span<const std::int64_t> in, std::span<std::int64_t> out);
}  // namespace avx2
#endif

}  // namespace trimobius::kernels
