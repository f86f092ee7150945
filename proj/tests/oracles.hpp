#pragma once

// Test-only reference computations.  Nothing here calls into the library's
// divisor enumeration, predecessor tables, kernels, or sieve.

#include <cstdint>
#include <vector>

namespace oracle {

inline std::uint64_t seq(bool triangular, std::uint64_t i) {
  return triangular ? i * (i + 1) / 2 : i;
}

inline bool divides(bool triangular, std::uint64_t i, std::uint64_t j) {
  return seq(triangular, j) % seq(triangular, i) == 0;
}

// mu(1, n) by the defining recursion with a full trial loop: O(N^2).
inline std::vector<std::int64_t> mobius_vector(bool triangular, std::uint64_t n_max) {
  std::vector<std::int64_t> mu(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (n == 1) {
      mu[1] = 1;
      continue;
    }
    std::int64_t s = 0;
    for (std::uint64_t d = 1; d < n; ++d)
      if (divides(triangular, d, n)) s += mu[d];
    mu[n] = -s;
  }
  return {mu.begin() + 1, mu.end()};
}

// mu(m, n) from mu(m, m) = 1 and the interval zero-sum, with a trial scan over every z in [m, n].
inline std::int64_t two_var(bool triangular, std::uint64_t m, std::uint64_t n) {
  if (!divides(triangular, m, n)) return 0;
  std::vector<std::int64_t> mu(n + 1, 0);
  mu[m] = 1;
  for (std::uint64_t z = m + 1; z <= n; ++z) {
    if (!divides(triangular, m, z) || !divides(triangular, z, n)) continue;
    std::int64_t s = 0;
    for (std::uint64_t w = m; w < z; ++w)
      if (divides(triangular, m, w) && divides(triangular, w, z)) s += mu[w];
    mu[z] = -s;
  }
  return mu[n];
}

// Classical mu by trial factorization.
inline int classical_mu(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// Reference matrices for the first ten triangular numbers.
inline const std::vector<std::vector<int>> kZeta10{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 1, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 1, 0, 0, 0}, {1, 1, 1, 0, 0, 0, 0, 1, 0, 0},
    {1, 1, 0, 0, 1, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

inline const std::vector<std::vector<std::int64_t>> kMobius10{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},   {-1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -1, 1, 0, 0, 0, 0, 0, 0, 0},  {-1, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, -1, 0, 0, 1, 0, 0, 0, 0, 0},  {0, -1, 0, 0, 0, 1, 0, 0, 0, 0},
    {-1, 0, 0, 0, 0, 0, 1, 0, 0, 0},  {0, 0, -1, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, -1, 0, 0, 0, 1, 0},  {-1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

}  // namespace oracle
