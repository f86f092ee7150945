#include "trimobius/poset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trimobius/error.hpp"
#include "trimobius/int128.hpp"

namespace trimobius {

std::uint64_t isqrt(uint128_t v) {
  // The long double estimate can round up to 2^64, whose square wraps.
  constexpr uint128_t kMax = UINT64_MAX;
  uint128_t r = std::min(static_cast<uint128_t>(std::sqrt(static_cast<long double>(v))), kMax);
  while (r * r > v) --r;
  while (r < kMax && (r + 1) * (r + 1) <= v) ++r;
  return static_cast<std::uint64_t>(r);
}

std::string_view to_string(SequenceKind kind) noexcept {
  return kind == SequenceKind::Triangular ? "triangular" : "identity";
}

std::optional<SequenceKind> parse_sequence_kind(std::string_view text) noexcept {
  if (text == "triangular") return SequenceKind::Triangular;
  if (text == "identity") return SequenceKind::Identity;
  return std::nullopt;
}

std::uint64_t sequence_value(SequenceKind kind, std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("sequence index must be >= 1");
  if (kind == SequenceKind::Identity) return i;
  if (i > kMaxIndex) {
    throw OverflowError("T(" + std::to_string(i) + ") exceeds the 64-bit range");
  }
  // One of i, i+1 is even; halve it first so the product cannot wrap.
  return (i % 2 == 0) ? (i / 2) * (i + 1) : i * ((i + 1) / 2);
}

std::optional<std::uint64_t> triangular_index(std::uint64_t v) noexcept {
  if (v == 0) return std::nullopt;
  const uint128_t s = uint128_t{8} * v + 1;
  const std::uint64_t r = isqrt(s);
  if (uint128_t{r} * r != s) return std::nullopt;
  return (r - 1) / 2;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t v) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  if (v < 2) return out;
  unsigned twos = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++twos;
  }
  if (twos) out.emplace_back(2, twos);
  for (std::uint64_t d = 3; d <= v / d; d += 2) {
    if (v % d != 0) continue;
    unsigned e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

std::vector<std::uint64_t> divisors_from_factorization(
    std::span<const std::pair<std::uint64_t, unsigned>> factors) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (unsigned k = 0; k < e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

DivisibilityPoset::DivisibilityPoset(SequenceKind kind, std::uint64_t max_index)
    : kind_(kind), max_index_(max_index) {
  if (max_index == 0) throw std::invalid_argument("poset needs at least one element");
  if (max_index > kMaxIndex) {
    throw OverflowError("max_index " + std::to_string(max_index) +
                        " exceeds the cap " + std::to_string(kMaxIndex));
  }
}

void DivisibilityPoset::check_index(std::uint64_t i) const {
  if (i == 0 || i > max_index_) {
    throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." +
                          std::to_string(max_index_));
  }
}

std::uint64_t DivisibilityPoset::value(std::uint64_t i) const {
  check_index(i);
  return sequence_value(kind_, i);
}

bool DivisibilityPoset::leq(std::uint64_t i, std::uint64_t j) const {
  return value(j) % value(i) == 0;
}

std::vector<std::uint64_t> DivisibilityPoset::strict_predecessors(std::uint64_t n) const {
  check_index(n);
  std::vector<std::uint64_t> out;
  if (kind_ == SequenceKind::Identity) {
    const auto factors = factorize(n);
    for (std::uint64_t d : divisors_from_factorization(factors))
      if (d < n) out.push_back(d);
    return out;
  }
  // T(n) = n(n+1)/2 with gcd(n, n+1) = 1: merge both factorizations and
  // drop a single factor of two.
  auto factors = factorize(n);
  const auto upper = factorize(n + 1);
  factors.insert(factors.end(), upper.begin(), upper.end());
  std::sort(factors.begin(), factors.end());
  if (factors.front().second == 1) {
    factors.erase(factors.begin());
  } else {
    --factors.front().second;
  }
  for (std::uint64_t d : divisors_from_factorization(factors)) {
    if (const auto k = triangular_index(d); k && *k < n) out.push_back(*k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> DivisibilityPoset::strict_predecessors_by_scan(std::uint64_t n) const {
  check_index(n);
  std::vector<std::uint64_t> out;
  const std::uint64_t vn = value(n);
  for (std::uint64_t d = 1; d < n; ++d)
    if (vn % value(d) == 0) out.push_back(d);
  return out;
}

bool DivisibilityPoset::covers(std::uint64_t i, std::uint64_t j) const {
  check_index(i);
  check_index(j);
  if (i == j || !leq(i, j)) return false;
  const std::uint64_t vi = value(i);
  // Any intermediate element is a strict predecessor of j lying above i.
  for (std::uint64_t z : strict_predecessors(j)) {
    if (z > i && value(z) % vi == 0) return false;
  }
  return true;
}

HasseGraph hasse_edges(const DivisibilityPoset& poset, std::uint64_t n) {
  if (n == 0 || n > poset.max_index()) {
    throw IndexOutOfRange("hasse prefix " + std::to_string(n) + " outside 1.." +
                          std::to_string(poset.max_index()));
  }
  const PredecessorTable table(poset, n);
  HasseGraph graph;
  graph.n_elements = n;
  for (std::uint64_t y = 2; y <= n; ++y) {
    const auto preds = table.predecessors(y);
    // Covers of y are the maximal elements of its strict down-set.
    for (std::size_t a = 0; a < preds.size(); ++a) {
      const std::uint64_t vx = sequence_value(poset.kind(), preds[a]);
      bool maximal = true;
      for (std::size_t b = a + 1; b < preds.size() && maximal; ++b) {
        maximal = sequence_value(poset.kind(), preds[b]) % vx != 0;
      }
      if (maximal) graph.edges.push_back({preds[a], y});
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

}  // namespace trimobius
