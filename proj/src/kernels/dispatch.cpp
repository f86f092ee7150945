#include <atomic>
#include <stdexcept>
#include <string>

#include "trimobius/kernels.hpp"

namespace trimobius::kernels {
namespace {

struct KernelTable {
  std::int64_t (*gather_sum)(std::span<const std::int64_t>, std::span<const std::uint32_t>);
  void (*row_subtract)(std::span<std::int64_t>, std::span<const std::int64_t>);
  void (*masked_accumulate)(std::span<std::int64_t>, std::int64_t, std::span<const std::uint8_t>);
  std::int64_t (*max_abs)(std::span<const std::int64_t>);
  void (*inclusive_scan)(std::span<const std::int64_t>, std::span<std::int64_t>);
  void (*inclusive_scan_abs)(std::span<const std::int64_t>, std::span<std::int64_t>);
};

constexpr KernelTable kScalarTable{
    scalar::gather_sum,     scalar::row_subtract,   scalar::masked_accumulate,
    scalar::max_abs,        scalar::inclusive_scan, scalar::inclusive_scan_abs,
};

#if defined(TRIMOBIUS_HAVE_AVX2)
constexpr KernelTable kAvx2Table{
    avx2::gather_sum,     avx2::row_subtract,   avx2::masked_accumulate,
    avx2::max_abs,        avx2::inclusive_scan, avx2::inclusive_scan_abs,
};
#endif

const KernelTable& table_for(Isa isa) noexcept {
#if defined(TRIMOBIUS_HAVE_AVX2)
  if (isa == Isa::Avx2) return kAvx2Table;
#endif
  (void)isa;
  return kScalarTable;
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{best_isa()};
  return isa;
}

const KernelTable& current() noexcept { return table_for(active().load(std::memory_order_relaxed)); }

}  // namespace

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(TRIMOBIUS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() noexcept { return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("instruction set not supported here: " + std::string(isa_name(isa)));
  }
  active().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

std::int64_t gather_sum(std::span<const std::int64_t> values,
                        std::span<const std::uint32_t> indices) {
  return current().gather_sum(values, indices);
}
void row_subtract(std::span<std::int64_t> acc, std::span<const std::int64_t> row) {
  current().row_subtract(acc, row);
}
void masked_accumulate(std::span<std::int64_t> acc, std::int64_t scale,
                       std::span<const std::uint8_t> mask) {
  current().masked_accumulate(acc, scale, mask);
}
std::int64_t max_abs(std::span<const std::int64_t> xs) { return current().max_abs(xs); }
void inclusive_scan(std::span<const std::int64_t> in, std::span<std::int64_t> out) {
  current().inclusive_scan(in, out);
}
void inclusive_scan_abs(std::span<const std::int64_t> in, std::span<std::int64_t> out) {
  current().inclusive_scan_abs(in, out);
}

}  // namespace trimobius::kernels
