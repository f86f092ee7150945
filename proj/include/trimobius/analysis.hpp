#pragma once

// Partial-sum series over Mobius vectors, magnitude records, the Mertens
// constant estimate, and the classical Mobius sieve used as a baseline.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trimobius/mobius.hpp"

namespace trimobius {

using Rational = mpq_class;

// Exact decimal rendering, rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& q, unsigned digits);

enum class SeriesValues { Integer, Rational };

struct SeriesReport {
  std::string name;
  SeriesValues value_kind = SeriesValues::Integer;
  // ys[k] is the partial sum through index k + 1 (x = 1..N).
  std::vector<std::int64_t> integer_ys;  // Integer series only
  std::vector<double> ys;                // always populated; rounded for Rational series
  Rational final_value;                  // exact y_N
  Rational endpoint_slope;               // (y_N - y_1) / (N - 0)
  Rational average;                      // y_N / N
  double least_squares_slope = 0.0;

  std::size_t size() const noexcept { return ys.size(); }

  // Builds a report (with slopes) from precomputed integer partial sums.
  static SeriesReport from_integers(std::string name, std::vector<std::int64_t> partial_sums);
};

SeriesReport mertens_tri(const MobiusVector& mu);
SeriesReport abs_sums(const MobiusVector& mu);

// Exact rational accumulation through kExactRatioLimit terms; beyond that a
// Neumaier-compensated double continues from the exact prefix, and
// a from-scratch compensated sum is cross-checked at the overlap.
inline constexpr std::uint64_t kExactRatioLimit = 10'000;
enum class RatioMode { Auto, Exact, Compensated };

// sum mu(i) / i
SeriesReport ratio_sums_index(const MobiusVector& mu, RatioMode mode = RatioMode::Auto);
// sum mu(i) / T(i)
SeriesReport ratio_sums_triangular(const MobiusVector& mu, RatioMode mode = RatioMode::Auto);

// |ys[N] - ys[from]| for 1 <= from <= N, in double.
double tail_drift(const SeriesReport& series, std::uint64_t from);

struct MagnitudeRecord {
  std::int64_t magnitude;
  std::uint64_t first_geq;                // first n with value >= M
  std::optional<std::uint64_t> first_eq;  // first n with value == M, if realized
};

struct MagnitudeRecordTable {
  std::vector<MagnitudeRecord> rows;  // M = 1, 2, ..., max
  const MagnitudeRecord* find(std::int64_t magnitude) const noexcept;
};

// Records of |mu(n)|.
MagnitudeRecordTable magnitude_records(const MobiusVector& mu);
// Records of the signed value mu(n) (positive magnitudes only).
MagnitudeRecordTable signed_records(const MobiusVector& mu);

// min over n in [tail_start, N] of -ys[n] / n for an Integer series.
// Positive means sum <= -C n held over the whole window.
Rational estimate_C(const SeriesReport& mertens, std::uint64_t tail_start);

class ClassicalMobiusSieve {
 public:
  explicit ClassicalMobiusSieve(std::uint64_t n);

  std::uint64_t size() const noexcept { return values_.size(); }
  int at(std::uint64_t n) const;
  std::span<const std::int8_t> values() const noexcept { return values_; }

 private:
  std::vector<std::int8_t> values_;  // values_[k] = mu(k + 1)
};

ClassicalMobiusSieve classical_mobius(std::uint64_t n);
SeriesReport classical_mertens(const ClassicalMobiusSieve& sieve);
SeriesReport classical_abs_sums(const ClassicalMobiusSieve& sieve);

}  // namespace trimobius
