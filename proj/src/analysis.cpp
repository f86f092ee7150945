#include "trimobius/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trimobius/error.hpp"
#include "trimobius/kernels.hpp"

namespace trimobius {
namespace {

mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(v));
  return z;
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

std::string label(SequenceKind kind) { return kind == SequenceKind::Triangular ? "mu_T" : "mu"; }

double least_squares_integer(std::span<const std::int64_t> ys) {
  const auto n = static_cast<std::uint64_t>(ys.size());
  if (n < 2) return 0.0;
  mpz_class sum_y = 0, sum_xy = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    const mpz_class y = to_mpz(ys[k]);
    sum_y += y;
    sum_xy += y * to_mpz(k + 1);
  }
  const mpz_class nn = to_mpz(n);
  const mpz_class sum_x = nn * (nn + 1) / 2;
  const mpz_class sum_xx = nn * (nn + 1) * (2 * nn + 1) / 6;
  const mpq_class slope(nn * sum_xy - sum_x * sum_y, nn * sum_xx - sum_x * sum_x);
  return mpq_class(slope).get_d();
}

double least_squares_real(std::span<const double> ys) {
  const std::size_t n = ys.size();
  if (n < 2) return 0.0;
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const long double x = static_cast<long double>(k + 1);
    sx += x;
    sy += ys[k];
    sxx += x * x;
    sxy += x * ys[k];
  }
  const long double nn = static_cast<long double>(n);
  return static_cast<double>((nn * sxy - sx * sy) / (nn * sxx - sx * sx));
}

void fill_slopes(SeriesReport& r, const Rational& first, const Rational& last) {
  const auto n = static_cast<std::uint64_t>(r.size());
  r.final_value = last;
  r.endpoint_slope = Rational(last - first) / Rational(to_mpz(n));
  r.endpoint_slope.canonicalize();
  r.average = last / Rational(to_mpz(n));
  r.average.canonicalize();
}

std::vector<std::int64_t> scan_checked(std::span<const std::int64_t> values, bool absolute) {
  std::vector<std::int64_t> out(values.size());
  if (values.empty()) return out;
  const std::int64_t bound = kernels::max_abs(values);
  const auto n = static_cast<std::int64_t>(values.size());
  if (bound <= (std::int64_t{1} << 62) / n) {
    absolute ? kernels::inclusive_scan_abs(values, out) : kernels::inclusive_scan(values, out);
    return out;
  }
  std::int64_t running = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const std::int64_t v = absolute ? std::abs(values[k]) : values[k];
    if (__builtin_add_overflow(running, v, &running)) throw OverflowError("partial sum overflows");
    out[k] = running;
  }
  return out;
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  explicit CompensatedSum(double start = 0.0) : sum_(start) {}
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_;
  double comp_ = 0.0;
};

template <typename Denominator>
SeriesReport ratio_sums(const MobiusVector& mu, RatioMode mode, std::string name, Denominator den) {
  const auto values = mu.values();
  const std::uint64_t n = values.size();
  const std::uint64_t exact_end =
      mode == RatioMode::Exact ? n : mode == RatioMode::Compensated ? 0 : std::min(n, kExactRatioLimit);

  SeriesReport r;
  r.name = std::move(name);
  r.value_kind = SeriesValues::Rational;
  r.ys.reserve(n);

  Rational exact = 0;
  Rational first;
  for (std::uint64_t i = 1; i <= exact_end; ++i) {
    if (values[i - 1] != 0) {
      exact += Rational(to_mpz(values[i - 1]), to_mpz(den(i)));
    }
    if (i == 1) first = exact;
    r.ys.push_back(exact.get_d());
  }
  if (exact_end == n) {
    fill_slopes(r, first, exact);
  } else {
    CompensatedSum acc(exact_end == 0 ? 0.0 : exact.get_d());
    for (std::uint64_t i = exact_end + 1; i <= n; ++i) {
      acc.add(static_cast<double>(values[i - 1]) / static_cast<double>(den(i)));
      r.ys.push_back(acc.value());
    }
    if (exact_end > 0) {
      CompensatedSum check;
      for (std::uint64_t i = 1; i <= exact_end; ++i)
        check.add(static_cast<double>(values[i - 1]) / static_cast<double>(den(i)));
      if (std::abs(check.value() - exact.get_d()) > 1e-9) {
        throw Error("compensated and exact ratio sums disagree at n = " + std::to_string(exact_end));
      }
    }
    if (exact_end == 0) first = Rational(r.ys.front());
    fill_slopes(r, first, Rational(r.ys.back()));
  }
  r.least_squares_slope = least_squares_real(r.ys);
  return r;
}

}  // namespace

std::string to_decimal(const Rational& q, unsigned digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const mpz_class num = abs(q.get_num()) * scale;
  const mpz_class den = q.get_den();
  const mpz_class rounded = (2 * num + den) / (2 * den);
  std::string text = rounded.get_str();
  if (digits > 0) {
    if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
    text.insert(text.size() - digits, ".");
  }
  if (q < 0 && rounded != 0) text.insert(0, "-");
  return text;
}

SeriesReport SeriesReport::from_integers(std::string name, std::vector<std::int64_t> partial_sums) {
  if (partial_sums.empty()) throw std::invalid_argument("series must be nonempty");
  SeriesReport r;
  r.name = std::move(name);
  r.value_kind = SeriesValues::Integer;
  r.ys.assign(partial_sums.begin(), partial_sums.end());
  r.least_squares_slope = least_squares_integer(partial_sums);
  fill_slopes(r, Rational(to_mpz(partial_sums.front())), Rational(to_mpz(partial_sums.back())));
  r.integer_ys = std::move(partial_sums);
  return r;
}

SeriesReport mertens_tri(const MobiusVector& mu) {
  return SeriesReport::from_integers("sum " + label(mu.kind()) + "(i)",
                                     scan_checked(mu.values(), false));
}

SeriesReport abs_sums(const MobiusVector& mu) {
  return SeriesReport::from_integers("sum |" + label(mu.kind()) + "(i)|",
                                     scan_checked(mu.values(), true));
}

SeriesReport ratio_sums_index(const MobiusVector& mu, RatioMode mode) {
  return ratio_sums(mu, mode, "sum " + label(mu.kind()) + "(i)/i",
                    [](std::uint64_t i) { return i; });
}

SeriesReport ratio_sums_triangular(const MobiusVector& mu, RatioMode mode) {
  return ratio_sums(mu, mode, "sum " + label(mu.kind()) + "(i)/T(i)", [](std::uint64_t i) {
    return sequence_value(SequenceKind::Triangular, i);
  });
}

double tail_drift(const SeriesReport& series, std::uint64_t from) {
  if (from == 0 || from > series.size()) throw IndexOutOfRange("drift start out of range");
  return std::abs(series.ys.back() - series.ys[from - 1]);
}

const MagnitudeRecord* MagnitudeRecordTable::find(std::int64_t magnitude) const noexcept {
  if (magnitude < 1 || magnitude > static_cast<std::int64_t>(rows.size())) return nullptr;
  return &rows[static_cast<std::size_t>(magnitude - 1)];
}

namespace {

template <typename Transform>
MagnitudeRecordTable records(const MobiusVector& mu, Transform transform) {
  MagnitudeRecordTable table;
  std::int64_t reached = 0;
  std::uint64_t n = 0;
  std::vector<std::optional<std::uint64_t>> first_eq;
  for (std::int64_t raw : mu.values()) {
    ++n;
    const std::int64_t v = transform(raw);
    if (v < 1) continue;
    if (static_cast<std::size_t>(v) > first_eq.size()) first_eq.resize(static_cast<std::size_t>(v));
    if (!first_eq[static_cast<std::size_t>(v - 1)]) first_eq[static_cast<std::size_t>(v - 1)] = n;
    for (; reached < v; ++reached) table.rows.push_back({reached + 1, n, std::nullopt});
  }
  for (auto& row : table.rows) row.first_eq = first_eq[static_cast<std::size_t>(row.magnitude - 1)];
  return table;
}

}  // namespace

MagnitudeRecordTable magnitude_records(const MobiusVector& mu) {
  return records(mu, [](std::int64_t v) { return v < 0 ? -v : v; });
}

MagnitudeRecordTable signed_records(const MobiusVector& mu) {
  return records(mu, [](std::int64_t v) { return v; });
}

Rational estimate_C(const SeriesReport& mertens, std::uint64_t tail_start) {
  if (mertens.value_kind != SeriesValues::Integer) {
    throw std::invalid_argument("estimate_C needs an integer partial-sum series");
  }
  const std::uint64_t n = mertens.integer_ys.size();
  if (tail_start == 0 || tail_start >= n) {
    throw std::invalid_argument("tail window empty: tail_start " + std::to_string(tail_start) +
                                " with N = " + std::to_string(n));
  }
  Rational best = Rational(to_mpz(-mertens.integer_ys[tail_start - 1]), to_mpz(tail_start));
  best.canonicalize();
  for (std::uint64_t k = tail_start + 1; k <= n; ++k) {
    Rational c(to_mpz(-mertens.integer_ys[k - 1]), to_mpz(k));
    c.canonicalize();
    if (c < best) best = c;
  }
  return best;
}

ClassicalMobiusSieve::ClassicalMobiusSieve(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("classical sieve needs N >= 1");
  // Linear sieve: every composite is struck once, by its smallest prime.
  values_.assign(n, 0);
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> primes;
  values_[0] = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      values_[i - 1] = -1;
    }
    for (std::uint64_t p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        values_[i * p - 1] = 0;
        break;
      }
      values_[i * p - 1] = static_cast<std::int8_t>(-values_[i - 1]);
    }
  }
}

int ClassicalMobiusSieve::at(std::uint64_t n) const {
  if (n == 0 || n > size()) throw IndexOutOfRange("sieve index out of range");
  return values_[n - 1];
}

ClassicalMobiusSieve classical_mobius(std::uint64_t n) { return ClassicalMobiusSieve(n); }

SeriesReport classical_mertens(const ClassicalMobiusSieve& sieve) {
  std::vector<std::int64_t> widened(sieve.values().begin(), sieve.values().end());
  return SeriesReport::from_integers("classical Mertens M(n)", scan_checked(widened, false));
}

SeriesReport classical_abs_sums(const ClassicalMobiusSieve& sieve) {
  std::vector<std::int64_t> widened(sieve.values().begin(), sieve.values().end());
  return SeriesReport::from_integers("sum |mu(i)|", scan_checked(widened, true));
}

}  // namespace trimobius
