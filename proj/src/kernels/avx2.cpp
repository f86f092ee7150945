// Compiled with -mavx2; only reached through dispatch after a CPUID check.
#include "trimobius/kernels.hpp"

#include <immintrin.h>

#include <cassert>
#include <cstring>

namespace trimobius::kernels::avx2 {
namespace {

inline std::int64_t hsum(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i s = _mm_add_epi64(lo, hi);
  return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

inline __m256i abs64(__m256i x) {
  const __m256i sign = _mm256_cmpgt_epi64(_mm256_setzero_si256(), x);
  return _mm256_sub_epi64(_mm256_xor_si256(x, sign), sign);
}

// In-register inclusive prefix over the four 64-bit lanes.
inline __m256i lane_scan(__m256i x) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i shifted = _mm256_permute4x64_epi64(x, _MM_SHUFFLE(2, 1, 0, 0));
  x = _mm256_add_epi64(x, _mm256_blend_epi32(shifted, zero, 0x03));
  shifted = _mm256_permute4x64_epi64(x, _MM_SHUFFLE(1, 0, 0, 0));
  return _mm256_add_epi64(x, _mm256_blend_epi32(shifted, zero, 0x0F));
}

template <bool Abs>
void scan_impl(std::span<const std::int64_t> in, std::span<std::int64_t> out) {
  assert(in.size() == out.size());
  const std::size_t n = in.size();
  __m256i carry = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + k));
    if constexpr (Abs) x = abs64(x);
    x = _mm256_add_epi64(lane_scan(x), carry);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), x);
    carry = _mm256_permute4x64_epi64(x, _MM_SHUFFLE(3, 3, 3, 3));
  }
  std::int64_t running = _mm256_extract_epi64(carry, 0);
  for (; k < n; ++k) {
    const std::int64_t v = in[k];
    running += Abs ? (v < 0 ? -v : v) : v;
    out[k] = running;
  }
}

}  // namespace

std::int64_t gather_sum(std::span<const std::int64_t> values,
                        std::span<const std::uint32_t> indices) {
  const std::size_t n = indices.size();
  const auto* base = reinterpret_cast<const long long*>(values.data());
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(indices.data() + k));
    acc = _mm256_add_epi64(acc, _mm256_i32gather_epi64(base, idx, 8));
  }
  std::int64_t sum = hsum(acc);
  for (; k < n; ++k) sum += values[indices[k]];
  return sum;
}

void row_subtract(std::span<std::int64_t> acc, std::span<const std::int64_t> row) {
  assert(acc.size() == row.size());
  const std::size_t n = acc.size();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    auto* dst = reinterpret_cast<__m256i*>(acc.data() + k);
    const __m256i a = _mm256_loadu_si256(dst);
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + k));
    _mm256_storeu_si256(dst, _mm256_sub_epi64(a, b));
  }
  for (; k < n; ++k) acc[k] -= row[k];
}

void masked_accumulate(std::span<std::int64_t> acc, std::int64_t scale,
                       std::span<const std::uint8_t> mask) {
  assert(acc.size() == mask.size());
  const std::size_t n = acc.size();
  const __m256i vscale = _mm256_set1_epi64x(scale);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    std::int32_t packed;
    std::memcpy(&packed, mask.data() + k, sizeof(packed));
    // 0/1 bytes widen to 0/1 lanes; negating gives all-zero/all-one masks.
    const __m256i bits = _mm256_sub_epi64(zero, _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(packed)));
    auto* dst = reinterpret_cast<__m256i*>(acc.data() + k);
    _mm256_storeu_si256(dst, _mm256_add_epi64(_mm256_loadu_si256(dst),
                                              _mm256_and_si256(bits, vscale)));
  }
  for (; k < n; ++k) acc[k] += scale * mask[k];
}

std::int64_t max_abs(std::span<const std::int64_t> xs) {
  const std::size_t n = xs.size();
  __m256i best = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i a = abs64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs.data() + k)));
    best = _mm256_blendv_epi8(best, a, _mm256_cmpgt_epi64(a, best));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
  std::int64_t out = 0;
  for (std::int64_t v : lanes) out = v > out ? v : out;
  for (; k < n; ++k) {
    const std::int64_t a = xs[k] < 0 ? -xs[k] : xs[k];
    out = a > out ? a : out;
  }
  return out;
}

void inclusive_scan(std::span<const std::int64_t> in, std::span<std::int64_t> out) {
  scan_impl<false>(in, out);
}

void inclusive_scan_abs(std::span<const std::int64_t> in, std::span<std::int64_t> out) {
  scan_impl<true>(in, out);
}

}  // namespace trimobius::kernels::avx2
