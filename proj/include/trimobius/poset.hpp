#pragma once

// Divisibility posets induced by a strictly increasing integer sequence:
// i <= j iff seq(i) divides seq(j).  Two sequences are built in: the
// triangular numbers T(i) = i(i+1)/2 and the identity (classical divisibility).

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace trimobius {

enum class SequenceKind { Triangular, Identity };

std::string_view to_string(SequenceKind kind) noexcept;
std::optional<SequenceKind> parse_sequence_kind(std::string_view text) noexcept;

// Largest i with i(i+1)/2 < 2^64.  Both kinds share this index cap.
inline constexpr std::uint64_t kMaxIndex = 6'074'000'999;

// T(i) or i.  Throws OverflowError past kMaxIndex (Triangular) and
// std::invalid_argument for i == 0.
std::uint64_t sequence_value(SequenceKind kind, std::uint64_t i);

// k with T(k) == v, if v is triangular (8v + 1 a perfect square).
std::optional<std::uint64_t> triangular_index(std::uint64_t v) noexcept;

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t v);

// All divisors of the number with the given factorization, ascending.
std::vector<std::uint64_t> divisors_from_factorization(
    std::span<const std::pair<std::uint64_t, unsigned>> factors);

class DivisibilityPoset {
 public:
  // Throws OverflowError if max_index > kMaxIndex and std::invalid_argument if 0.
  DivisibilityPoset(SequenceKind kind, std::uint64_t max_index);

  SequenceKind kind() const noexcept { return kind_; }
  std::uint64_t max_index() const noexcept { return max_index_; }

  std::uint64_t value(std::uint64_t i) const;
  bool leq(std::uint64_t i, std::uint64_t j) const;
  bool covers(std::uint64_t i, std::uint64_t j) const;

  // All d < n with leq(d, n), ascending.  Enumerates divisors of value(n)
  // (from the factorizations of n and n + 1 for the triangular kind) and
  // keeps those that are sequence values.
  std::vector<std::uint64_t> strict_predecessors(std::uint64_t n) const;

  // Same contract, trial loop over d = 1..n-1.  O(n); used as an oracle.
  std::vector<std::uint64_t> strict_predecessors_by_scan(std::uint64_t n) const;

 private:
  void check_index(std::uint64_t i) const;

  SequenceKind kind_;
  std::uint64_t max_index_;
};

struct HasseEdge {
  std::uint64_t lower;
  std::uint64_t upper;
  auto operator<=>(const HasseEdge&) const = default;
};

struct HasseGraph {
  std::uint64_t n_elements = 0;
  std::vector<HasseEdge> edges;  // sorted, unique
};

// Covering pairs among 1..n.
HasseGraph hasse_edges(const DivisibilityPoset& poset, std::uint64_t n);

// Cached strict-predecessor lists for the prefix 1..n, in CSR layout.
//
// Built once (in parallel over n, collected in index order) and immutable
// afterwards.  Indices are 1-based and stored as uint32, which caps the
// prefix at kMaxTableIndex.
class PredecessorTable {
 public:
  static constexpr std::uint64_t kMaxTableIndex = (std::uint64_t{1} << 31) - 2;

  // threads == 0 picks std::thread::hardware_concurrency().
  PredecessorTable(const DivisibilityPoset& poset, std::uint64_t n, unsigned threads = 0);

  SequenceKind kind() const noexcept { return kind_; }
  std::uint64_t size() const noexcept { return offsets_.size() - 1; }
  std::span<const std::uint32_t> predecessors(std::uint64_t n) const;
  std::size_t total_pairs() const noexcept { return flat_.size(); }

 private:
  SequenceKind kind_;
  std::vector<std::size_t> offsets_;  // offsets_[n-1] .. offsets_[n]
  std::vector<std::uint32_t> flat_;
};

}  // namespace trimobius
