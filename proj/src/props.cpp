#include "trimobius/props.hpp"

#include <stdexcept>
#include <string>

#include "trimobius/error.hpp"

namespace trimobius {
namespace {

// x(x+1)/2 for x < 2^64; the product is at most 2^128 - 2^64.
uint128_t triangular128(uint128_t x) {
  return (x % 2 == 0) ? (x / 2) * (x + 1) : x * ((x + 1) / 2);
}

void check_n(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw std::invalid_argument("proposition index must be >= 1");
  if (n > cap) throw OverflowError("proposition index " + std::to_string(n) + " exceeds " +
                                   std::to_string(cap));
}

PropositionVerdict divide(std::uint64_t n, uint128_t dividend_index) {
  PropositionVerdict v;
  v.n = n;
  const uint128_t tn = triangular128(n);
  const uint128_t dividend = triangular128(dividend_index);
  v.holds = dividend % tn == 0;
  if (v.holds) v.witness_ratio = dividend / tn;
  return v;
}

}  // namespace

PropositionVerdict prop1_check(std::uint64_t n) {
  check_n(n, kProp1MaxN);
  const uint128_t m = uint128_t{n} * (n + 1);
  PropositionVerdict v = divide(n, m);
  v.closed_form_agrees = v.witness_ratio && *v.witness_ratio == m + 1;
  return v;
}

PropositionVerdict prop2_check(std::uint64_t n) {
  check_n(n, kProp2MaxN);
  const uint128_t m = uint128_t{n} * (n + 1);
  PropositionVerdict v = divide(n, m / 2);
  if (v.holds) {
    v.closed_form_agrees = (m + 2) % 4 == 0 && *v.witness_ratio == (m + 2) / 4;
  } else {
    v.closed_form_agrees = (m + 2) % 4 != 0;
  }
  return v;
}

PropositionSummary verify_propositions(std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("proposition range needs limit >= 1");
  PropositionSummary s;
  s.limit = limit;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const auto p1 = prop1_check(n);
    if (p1.holds && p1.closed_form_agrees) {
      ++s.prop1_holds;
    } else if (!s.prop1_first_failure) {
      s.prop1_first_failure = n;
    }
    const auto p2 = prop2_check(n);
    if (p2.holds) ++s.prop2_holds;
    const bool predicted = n % 4 == 1 || n % 4 == 2;
    if ((p2.holds != predicted || !p2.closed_form_agrees) && !s.prop2_first_failure) {
      s.prop2_first_failure = n;
    }
  }
  return s;
}

}  // namespace trimobius
