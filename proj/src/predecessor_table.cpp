#include <algorithm>
#include <array>
#include <string>
#include <thread>

#include "trimobius/error.hpp"
#include "trimobius/poset.hpp"

namespace trimobius {
namespace {

// Smallest prime factor for every v <= limit.
std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t limit) {
  std::vector<std::uint32_t> spf(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t v = 2; v <= limit; ++v) {
    if (spf[v] == 0) {
      spf[v] = static_cast<std::uint32_t>(v);
      primes.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[v] || v * p > limit) break;
      spf[v * p] = p;
    }
  }
  return spf;
}

struct Factor {
  std::uint64_t prime;
  unsigned exponent;
};

// Appends the factorization of v (v <= spf.size() - 1) to `out`.
void factor_with_sieve(std::uint64_t v, const std::vector<std::uint32_t>& spf,
                       std::vector<Factor>& out) {
  while (v > 1) {
    const std::uint32_t p = spf[v];
    unsigned e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    out.push_back({p, e});
  }
}

class ChunkBuilder {
 public:
  ChunkBuilder(SequenceKind kind, const std::vector<std::uint32_t>& spf) : kind_(kind), spf_(spf) {}

  void build(std::uint64_t first, std::uint64_t last, std::vector<std::uint32_t>& flat,
             std::vector<std::uint32_t>& counts) {
    for (std::uint64_t n = first; n <= last; ++n) {
      const std::size_t before = flat.size();
      append_predecessors(n, flat);
      std::sort(flat.begin() + static_cast<std::ptrdiff_t>(before), flat.end());
      counts.push_back(static_cast<std::uint32_t>(flat.size() - before));
    }
  }

 private:
  void append_predecessors(std::uint64_t n, std::vector<std::uint32_t>& flat) {
    factors_.clear();
    factor_with_sieve(n, spf_, factors_);
    if (kind_ == SequenceKind::Triangular) {
      factor_with_sieve(n + 1, spf_, factors_);
      auto two = std::find_if(factors_.begin(), factors_.end(),
                              [](const Factor& f) { return f.prime == 2; });
      if (--two->exponent == 0) factors_.erase(two);
    }
    divisors_.assign(1, 1);
    for (const Factor& f : factors_) {
      const std::size_t base = divisors_.size();
      std::uint64_t pk = 1;
      for (unsigned k = 0; k < f.exponent; ++k) {
        pk *= f.prime;
        for (std::size_t i = 0; i < base; ++i) divisors_.push_back(divisors_[i] * pk);
      }
    }
    for (std::uint64_t d : divisors_) {
      if (kind_ == SequenceKind::Identity) {
        if (d < n) flat.push_back(static_cast<std::uint32_t>(d));
      } else if (const auto k = triangular_index(d); k && *k < n) {
        flat.push_back(static_cast<std::uint32_t>(*k));
      }
    }
  }

  SequenceKind kind_;
  const std::vector<std::uint32_t>& spf_;
  std::vector<Factor> factors_;
  std::vector<std::uint64_t> divisors_;
};

}  // namespace

PredecessorTable::PredecessorTable(const DivisibilityPoset& poset, std::uint64_t n,
                                   unsigned threads)
    : kind_(poset.kind()) {
  if (n == 0 || n > poset.max_index()) {
    throw IndexOutOfRange("table prefix " + std::to_string(n) + " outside 1.." +
                          std::to_string(poset.max_index()));
  }
  if (n > kMaxTableIndex) {
    throw OverflowError("table prefix " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxTableIndex));
  }
  const auto spf = smallest_prime_factors(n + 1);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t chunks = std::min<std::uint64_t>(threads, (n + 1023) / 1024);
  std::vector<std::vector<std::uint32_t>> flats(chunks), counts(chunks);
  auto bounds = [&](std::uint64_t c) {
    return std::pair{1 + n * c / chunks, n * (c + 1) / chunks};
  };
  if (chunks <= 1) {
    ChunkBuilder(kind_, spf).build(1, n, flats[0], counts[0]);
  } else {
    std::vector<std::jthread> workers;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        const auto [first, last] = bounds(c);
        ChunkBuilder(kind_, spf).build(first, last, flats[c], counts[c]);
      });
    }
  }

  offsets_.reserve(n + 1);
  offsets_.push_back(0);
  std::size_t total = 0;
  for (const auto& f : flats) total += f.size();
  flat_.reserve(total);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    flat_.insert(flat_.end(), flats[c].begin(), flats[c].end());
    for (std::uint32_t count : counts[c]) offsets_.push_back(offsets_.back() + count);
  }
}

std::span<const std::uint32_t> PredecessorTable::predecessors(std::uint64_t n) const {
  if (n == 0 || n > size()) {
    throw IndexOutOfRange("index " + std::to_string(n) + " outside 1.." + std::to_string(size()));
  }
  return std::span<const std::uint32_t>(flat_).subspan(offsets_[n - 1],
                                                        offsets_[n] - offsets_[n - 1]);
}

}  // namespace trimobius
