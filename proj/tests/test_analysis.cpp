#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "oracles.hpp"
#include "trimobius/analysis.hpp"

using namespace trimobius;

namespace {

const DivisibilityPoset kTri(SequenceKind::Triangular, 20000);
const MobiusVector& mu10k() {
  static const MobiusVector mu = mobius_one_var(kTri, 10000);
  return mu;
}
MobiusVector prefix(std::uint64_t n) {
  const auto v = mu10k().values().first(n);
  return MobiusVector(SequenceKind::Triangular, {v.begin(), v.end()});
}

}  // namespace

TEST_CASE("to_decimal rounds exactly") {
  CHECK(to_decimal(Rational(1, 3), 3) == "0.333");
  CHECK(to_decimal(Rational(-2, 3), 3) == "-0.667");
  CHECK(to_decimal(Rational(0), 3) == "0.000");
  CHECK(to_decimal(Rational(1, 2000), 3) == "0.001");
  CHECK(to_decimal(Rational(-1, 2000), 3) == "-0.001");
  CHECK(to_decimal(Rational(-1, 3000), 3) == "0.000");
  CHECK(to_decimal(Rational(-316), 0) == "-316");
}

TEST_CASE("mertens_tri") {
  CHECK(mertens_tri(prefix(10)).integer_ys.back() == -3);
  CHECK(mertens_tri(prefix(1)).integer_ys == std::vector<std::int64_t>{1});
  CHECK(mertens_tri(prefix(3)).integer_ys == std::vector<std::int64_t>{1, 0, 0});

  // Frozen from an independent brute-force recomputation.
  const auto s = mertens_tri(mu10k());
  CHECK(s.integer_ys[99] == -7);
  CHECK(s.integer_ys[999] == -27);
  CHECK(s.integer_ys[4999] == -142);
  CHECK(s.final_value == -316);
  // Not strictly negative from n = 100: the sum returns to 0 or +1 up to
  // n = 345, and stays negative afterwards.
  std::uint64_t last_nonnegative = 0;
  for (std::uint64_t n = 100; n <= 10000; ++n)
    if (s.integer_ys[n - 1] >= 0) last_nonnegative = n;
  CHECK(last_nonnegative == 345);
  CHECK(s.integer_ys[287] == 1);  // n = 288
}

TEST_CASE("partial-sum series invariants at N = 10000") {
  const auto& mu = mu10k();
  const auto sums = mertens_tri(mu);
  const auto abs = abs_sums(mu);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const std::int64_t prev = n == 1 ? 0 : sums.integer_ys[n - 2];
    const std::int64_t prev_abs = n == 1 ? 0 : abs.integer_ys[n - 2];
    REQUIRE(sums.integer_ys[n - 1] - prev == mu.at(n));
    REQUIRE(abs.integer_ys[n - 1] - prev_abs == std::abs(mu.at(n)));
    REQUIRE(abs.integer_ys[n - 1] >= std::abs(sums.integer_ys[n - 1]));
    REQUIRE(abs.integer_ys[n - 1] >= prev_abs);
    REQUIRE(sums.ys[n - 1] == static_cast<double>(sums.integer_ys[n - 1]));
  }
}

TEST_CASE("abs_sums and slope estimates") {
  const auto a10 = abs_sums(prefix(10));
  CHECK(a10.integer_ys.back() == 5);
  CHECK(a10.average == Rational(1, 2));
  CHECK(a10.endpoint_slope == Rational(2, 5));  // (5 - 1) / (10 - 0)
  CHECK(abs_sums(prefix(1)).integer_ys.back() == 1);
  CHECK(abs_sums(prefix(1)).endpoint_slope == 0);

  const auto a = abs_sums(mu10k());
  CHECK(a.final_value == 4842);
  CHECK(a.average == Rational(2421, 5000));
  CHECK(a.average.get_d() >= 0.45);
  CHECK(a.average.get_d() <= 0.55);
  CHECK(abs_sums(prefix(1000)).final_value == 471);
}

TEST_CASE("least-squares slope recovers an exact line") {
  std::vector<std::int64_t> ys;
  for (std::int64_t n = 1; n <= 500; ++n) ys.push_back(3 * n + 2);
  const auto s = SeriesReport::from_integers("line", ys);
  CHECK(s.least_squares_slope == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(s.endpoint_slope == Rational(1497, 500));
}

TEST_CASE("ratio_sums_index") {
  CHECK(ratio_sums_index(prefix(1)).final_value == 1);
  CHECK(ratio_sums_index(prefix(2)).final_value == Rational(1, 2));
  const auto r = ratio_sums_index(mu10k());
  CHECK(r.value_kind == SeriesValues::Rational);
  CHECK(std::abs(r.final_value.get_d() - (-0.239)) <= 0.02);
  CHECK(r.final_value.get_d() == doctest::Approx(-0.239174404156937).epsilon(1e-12));
  CHECK(to_decimal(r.final_value, 6) == "-0.239174");

  const auto c = ratio_sums_index(mu10k(), RatioMode::Compensated);
  CHECK(std::abs(c.ys.back() - r.final_value.get_d()) <= 1e-9);
}

TEST_CASE("ratio sums switch to compensated summation past the exact window") {
  const auto mu = mobius_one_var(kTri, 20000);
  const auto auto_mode = ratio_sums_index(mu);
  const auto exact = ratio_sums_index(mu, RatioMode::Exact);
  REQUIRE(auto_mode.size() == 20000);
  CHECK(auto_mode.ys[kExactRatioLimit - 1] == exact.ys[kExactRatioLimit - 1]);
  CHECK(std::abs(auto_mode.ys.back() - exact.final_value.get_d()) <= 1e-9);
}

TEST_CASE("ratio_sums_triangular") {
  CHECK(ratio_sums_triangular(prefix(1)).final_value == 1);
  CHECK(ratio_sums_triangular(prefix(2)).final_value == Rational(2, 3));
  const auto r = ratio_sums_triangular(mu10k());
  CHECK(r.final_value.get_d() == doctest::Approx(0.498607045303751).epsilon(1e-12));
  const double drift = tail_drift(r, 5000);
  CHECK(drift == doctest::Approx(std::abs(r.ys.back() - r.ys[4999])));
  CHECK(drift < 1e-3);
  MESSAGE("sum mu_T(i)/T(i) at 10^4 = " << to_decimal(r.final_value, 12) << ", drift since 5000 = "
                                         << drift);
}

TEST_CASE("magnitude_records") {
  const auto small = magnitude_records(prefix(300));
  REQUIRE(small.rows.size() == 3);
  CHECK(small.find(1)->first_geq == 1);
  CHECK(small.find(2)->first_geq == 44);
  CHECK(small.find(3)->first_geq == 272);
  CHECK(small.find(4) == nullptr);

  // Recomputed at N = 10^4 by an independent implementation.
  const auto t = magnitude_records(mu10k());
  REQUIRE(t.rows.size() == 8);
  const std::vector<std::uint64_t> geq{1, 44, 272, 1274, 2079, 2079, 2079, 2079};
  const std::vector<std::uint64_t> eq{1, 44, 272, 1274, 2639, 6720, 3024, 2079};
  for (std::size_t k = 0; k < 8; ++k) {
    CAPTURE(k + 1);
    CHECK(t.rows[k].magnitude == static_cast<std::int64_t>(k + 1));
    CHECK(t.rows[k].first_geq == geq[k]);
    CHECK(t.rows[k].first_eq == eq[k]);
    if (k) CHECK(t.rows[k].first_geq >= t.rows[k - 1].first_geq);
  }

  const auto s = signed_records(mu10k());
  REQUIRE(s.rows.size() >= 5);
  CHECK(s.find(4)->first_geq == 1274);
  CHECK(s.find(5)->first_geq == 8040);
}

TEST_CASE("estimate_C") {
  std::vector<std::int64_t> down, up;
  for (std::int64_t n = 1; n <= 50; ++n) {
    down.push_back(-n);
    up.push_back(n);
  }
  CHECK(estimate_C(SeriesReport::from_integers("down", down), 5) == 1);
  CHECK(estimate_C(SeriesReport::from_integers("up", up), 5) == -1);
  CHECK_THROWS_AS(estimate_C(SeriesReport::from_integers("down", down), 50), std::invalid_argument);
  CHECK_THROWS_AS(estimate_C(SeriesReport::from_integers("down", down), 0), std::invalid_argument);
  CHECK_THROWS_AS(estimate_C(ratio_sums_index(prefix(20)), 5), std::invalid_argument);

  const Rational c = estimate_C(mertens_tri(mu10k()), 1000);
  CHECK(c == Rational(8, 711));
  CHECK(c > 0);
}

TEST_CASE("classical_mobius") {
  const auto s = classical_mobius(100000);
  CHECK(s.at(1) == 1);
  CHECK(s.at(2) == -1);
  CHECK(s.at(4) == 0);
  CHECK(s.at(6) == 1);
  for (std::uint64_t n = 1; n <= 100000; ++n) REQUIRE(s.at(n) == oracle::classical_mu(n));
  CHECK_THROWS_AS(classical_mobius(0), std::invalid_argument);

  const auto big = classical_abs_sums(classical_mobius(1000000));
  CHECK(std::abs(big.average.get_d() - 0.6079) <= 0.003);
}

TEST_CASE("classical_mertens") {
  const auto m = classical_mertens(classical_mobius(10));
  CHECK(m.integer_ys[0] == 1);
  CHECK(m.integer_ys[1] == 0);
  CHECK(m.integer_ys[9] == -1);
}
