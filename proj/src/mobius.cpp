#include "trimobius/mobius.hpp"

#include <algorithm>
#include <string>

#include "trimobius/error.hpp"
#include "trimobius/kernels.hpp"

namespace trimobius {
namespace {

// A gather over k terms each bounded by `bound` cannot wrap while k * bound <= 2^62.
constexpr std::int64_t kSafeMagnitude = std::int64_t{1} << 62;

std::int64_t checked_gather_sum(std::span<const std::int64_t> values,
                                std::span<const std::uint32_t> indices, std::uint64_t n) {
  std::int64_t sum = 0;
  for (std::uint32_t idx : indices) {
    if (__builtin_add_overflow(sum, values[idx], &sum)) {
      throw OverflowError("Mobius predecessor sum overflows at n = " + std::to_string(n));
    }
  }
  return sum;
}

std::int64_t checked_negate(std::int64_t v, std::uint64_t n) {
  if (v == INT64_MIN) throw OverflowError("Mobius value overflows at n = " + std::to_string(n));
  return -v;
}

}  // namespace

MobiusVector::MobiusVector(SequenceKind kind, std::size_t n) : kind_(kind), buffer_(n + 1, 0) {}

MobiusVector::MobiusVector(SequenceKind kind, std::vector<std::int64_t> values) : kind_(kind) {
  if (values.empty()) throw std::invalid_argument("MobiusVector needs at least one value");
  buffer_.reserve(values.size() + 1);
  buffer_.push_back(0);
  buffer_.insert(buffer_.end(), values.begin(), values.end());
}

std::int64_t MobiusVector::at(std::uint64_t n) const {
  if (n == 0 || n > size()) {
    throw IndexOutOfRange("index " + std::to_string(n) + " outside 1.." + std::to_string(size()));
  }
  return buffer_[n];
}

MobiusVector mobius_one_var(const PredecessorTable& table) {
  const std::uint64_t n_max = table.size();
  MobiusVector mu(table.kind(), n_max);
  auto& buf = mu.buffer_;
  buf[1] = 1;
  std::int64_t bound = 1;  // max |mu| so far
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const auto preds = table.predecessors(n);
    const auto k = static_cast<std::int64_t>(preds.size());
    const std::int64_t sum = (k == 0 || bound <= kSafeMagnitude / k)
                                 ? kernels::gather_sum(buf, preds)
                                 : checked_gather_sum(buf, preds, n);
    const std::int64_t value = checked_negate(sum, n);
    buf[n] = value;
    bound = std::max(bound, value < 0 ? -value : value);
  }
  return mu;
}

MobiusVector mobius_one_var(const DivisibilityPoset& poset, std::uint64_t n) {
  return mobius_one_var(PredecessorTable(poset, n));
}

std::int64_t TwoVariableMobius::operator()(std::uint64_t m, std::uint64_t n) const {
  if (!poset_.leq(m, n)) return 0;
  if (m == n) return 1;

  std::lock_guard lock(mutex_);
  if (auto it = memo_.find({m, n}); it != memo_.end()) return it->second;

  // Interval [m, n]: strict predecessors of n lying above m, then n itself.
  const std::uint64_t vm = poset_.value(m);
  std::vector<std::uint64_t> interval;
  for (std::uint64_t z : poset_.strict_predecessors(n))
    if (z >= m && poset_.value(z) % vm == 0) interval.push_back(z);
  interval.push_back(n);

  std::vector<std::int64_t> mu(interval.size(), 0);
  mu[0] = 1;  // interval[0] == m
  for (std::size_t a = 1; a < interval.size(); ++a) {
    const std::uint64_t z = interval[a];
    if (auto it = memo_.find({m, z}); it != memo_.end()) {
      mu[a] = it->second;
      continue;
    }
    const std::uint64_t vz = poset_.value(z);
    std::int64_t sum = 0;
    for (std::size_t b = 0; b < a; ++b) {
      if (vz % poset_.value(interval[b]) != 0) continue;
      if (__builtin_add_overflow(sum, mu[b], &sum)) {
        throw OverflowError("two-variable Mobius sum overflows at (" + std::to_string(m) + ", " +
                            std::to_string(z) + ")");
      }
    }
    mu[a] = checked_negate(sum, z);
    memo_.emplace(std::pair{m, z}, mu[a]);
  }
  return mu.back();
}

std::size_t TwoVariableMobius::cached_entries() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

std::int64_t mobius_two_var(const DivisibilityPoset& poset, std::uint64_t m, std::uint64_t n) {
  return TwoVariableMobius(poset)(m, n);
}

}  // namespace trimobius
