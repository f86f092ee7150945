#pragma once

// Executable forms of two divisibility facts about triangular numbers:
//   T(n) | T(n(n+1))            for every n, with ratio n(n+1) + 1;
//   T(n) | T(T(n))  iff  n = 1, 2 (mod 4), with ratio (n(n+1) + 2) / 4.
// Both are decided by direct 128-bit division; the closed forms are only
// compared against the quotient, never used to decide.

#include <cstdint>
#include <optional>

#include "trimobius/int128.hpp"

namespace trimobius {

struct PropositionVerdict {
  std::uint64_t n = 0;
  bool holds = false;
  // Quotient dividend / T(n) when the division is exact.
  std::optional<uint128_t> witness_ratio;
  // The closed-form ratio (when defined) equals the computed quotient.
  bool closed_form_agrees = false;
};

// n(n+1) must fit in 64 bits (n <= 4294967295).
inline constexpr std::uint64_t kProp1MaxN = 4'294'967'295;
// T(n) must fit in 64 bits.
inline constexpr std::uint64_t kProp2MaxN = 6'074'000'999;

// Throws OverflowError past the caps and std::invalid_argument for n == 0.
PropositionVerdict prop1_check(std::uint64_t n);
PropositionVerdict prop2_check(std::uint64_t n);

struct PropositionSummary {
  std::uint64_t limit = 0;
  std::uint64_t prop1_holds = 0;
  std::optional<std::uint64_t> prop1_first_failure;
  // n where (divides) != (n mod 4 in {1, 2}), or the quotient mismatches.
  std::uint64_t prop2_holds = 0;
  std::optional<std::uint64_t> prop2_first_failure;
  bool ok() const noexcept { return !prop1_first_failure && !prop2_first_failure; }
};

PropositionSummary verify_propositions(std::uint64_t limit);

}  // namespace trimobius
