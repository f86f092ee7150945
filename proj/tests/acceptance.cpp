// Acceptance checks.  One PASS/FAIL line per criterion; exits 1 if any
// criterion fails.  Every tolerance and time limit is pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "trimobius/analysis.hpp"
#include "trimobius/cli.hpp"
#include "trimobius/io.hpp"
#include "trimobius/kernels.hpp"
#include "trimobius/mobius.hpp"
#include "trimobius/poset.hpp"
#include "trimobius/props.hpp"

using namespace trimobius;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool pass = r.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] C%d %s: %s (%.3f s", pass ? "PASS" : "FAIL", id, title.c_str(), r.detail.c_str(), secs);
  if (limit_s > 0) std::printf(", limit %.0f s%s", limit_s, in_time ? "" : ", EXCEEDED");
  std::printf(")\n");
  std::fflush(stdout);
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  out = o.str() + e.str();
  return code;
}

std::string join(std::span<const std::int64_t> v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

template <typename T>
std::string csv_of(const std::vector<std::vector<T>>& rows) {
  std::string s;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) s += (j ? "," : "") + std::to_string(r[j]);
    s += "\n";
  }
  return s;
}

double seconds_of(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  constexpr double kSeriesTolerance = 0.02;
  constexpr double kClassicalTolerance = 0.003;
  constexpr double kClassicalDensity = 0.6079;
  constexpr double kRatioTarget = -0.239;
  constexpr double kAbsLow = 0.45, kAbsHigh = 0.55;

  std::printf("kernel isa: %s\n", std::string(kernels::isa_name(kernels::active_isa())).c_str());

  criterion(1, "zeta matrix n=10", 1, [] {
    std::string out;
    const int code = run_cli({"zeta-matrix", "--kind", "triangular", "-n", "10"}, out);
    const bool ok = code == cli::kExitOk && out == csv_of(oracle::kZeta10);
    return Outcome{ok, ok ? "CLI output equals the reference matrix" : "CLI output differs:\n" + out};
  });

  criterion(2, "Mobius matrix n=10", 1, [] {
    const DivisibilityPoset p(SequenceKind::Triangular, 10);
    const auto expected = MobiusMatrix::from_rows(oracle::kMobius10);
    const bool inv = invert_zeta(zeta_matrix(p, 10)) == expected;
    const bool rec = mobius_matrix_by_recursion(p, 10) == expected;
    return Outcome{inv && rec, std::string("inversion ") + (inv ? "exact" : "differs") + ", recursion " +
                                   (rec ? "exact" : "differs")};
  });

  criterion(3, "mu_T(1..10) and OEIS snapshot", 0, [] {
    const std::vector<std::int64_t> want{1, -1, 0, -1, 0, 0, -1, 0, 0, -1};
    const auto mu = mobius_one_var(DivisibilityPoset(SequenceKind::Triangular, 10), 10);
    const bool values = std::equal(want.begin(), want.end(), mu.values().begin(), mu.values().end());
    std::string out;
    const int code =
        run_cli({"oeis-diff", "--bfile", std::string(TRIMOBIUS_DATA_DIR) + "/oeis/b350682.txt"}, out);
    if (!out.empty() && out.back() == '\n') out.pop_back();
    return Outcome{values && code == cli::kExitOk, "mu_T = [" + join(mu.values()) + "], oeis-diff: " + out};
  });

  criterion(4, "oracle equivalence n=200", 10, [] {
    std::string detail;
    bool ok = true;
    for (auto kind : {SequenceKind::Triangular, SequenceKind::Identity}) {
      const DivisibilityPoset p(kind, 200);
      const auto z = zeta_matrix(p, 200);
      const auto m = invert_zeta(z);
      const auto mu = mobius_one_var(p, 200);
      const bool col = m.first_column() == std::vector<std::int64_t>(mu.values().begin(), mu.values().end());
      const bool inv = verify_inverse(z, m);
      ok = ok && col && inv;
      detail += std::string(detail.empty() ? "" : "; ") + std::string(to_string(kind)) + ": column " +
                (col ? "equal" : "differs") + ", M*Z " + (inv ? "= I" : "!= I");
    }
    return Outcome{ok, detail};
  });

  criterion(5, "classical baseline", 30, [=] {
    const auto mu = mobius_one_var(DivisibilityPoset(SequenceKind::Identity, 100000), 100000);
    const auto sieve = classical_mobius(1000000);
    std::uint64_t mismatches = 0;
    for (std::uint64_t n = 1; n <= 100000; ++n) mismatches += mu.at(n) != sieve.at(n);
    const double density = classical_abs_sums(sieve).average.get_d();
    const bool ok = mismatches == 0 && std::abs(density - kClassicalDensity) <= kClassicalTolerance;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%llu mismatches for n <= 1e5; sum |mu|/1e6 = %.6f (target %.4f +- %.3f)",
                  static_cast<unsigned long long>(mismatches), density, kClassicalDensity,
                  kClassicalTolerance);
    return Outcome{ok, buf};
  });

  criterion(6, "magnitude records N=1500", 30, [] {
    const auto t = magnitude_records(mobius_one_var(DivisibilityPoset(SequenceKind::Triangular, 1500), 1500));
    const std::vector<std::uint64_t> want{1, 44, 272, 1274};
    bool ok = t.rows.size() >= want.size();
    std::string detail = "first n with |mu_T| >= M:";
    for (const auto& r : t.rows) {
      detail += " M=" + std::to_string(r.magnitude) + "->" + std::to_string(r.first_geq);
      if (r.magnitude <= 4) ok = ok && r.first_geq == want[static_cast<std::size_t>(r.magnitude - 1)];
    }
    return Outcome{ok, detail};
  });

  const auto mu10k = mobius_one_var(DivisibilityPoset(SequenceKind::Triangular, 10000), 10000);

  criterion(7, "sum |mu_T| / N at N=1e4", 60, [&] {
    const double avg = abs_sums(mu10k).average.get_d();
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.4f in [%.2f, %.2f]", avg, kAbsLow, kAbsHigh);
    return Outcome{avg >= kAbsLow && avg <= kAbsHigh, buf};
  });

  criterion(8, "sum mu_T(i)/i at N=1e4", 60, [&] {
    const auto r = ratio_sums_index(mu10k);
    const double v = r.final_value.get_d();
    return Outcome{std::abs(v - kRatioTarget) <= kSeriesTolerance,
                   to_decimal(r.final_value, 9) + " (target -0.239 +- 0.02)"};
  });

  criterion(9, "sum mu_T < 0 on [100, 1e4] and C > 0", 60, [&] {
    const auto s = mertens_tri(mu10k);
    std::uint64_t violations = 0, first = 0, last = 0;
    for (std::uint64_t n = 100; n <= 10000; ++n) {
      if (s.integer_ys[n - 1] < 0) continue;
      ++violations;
      if (!first) first = n;
      last = n;
    }
    const Rational c = estimate_C(s, 1000);
    std::string detail = "estimate_C(tail_start=1000) = " + to_decimal(c, 9) + " (" + c.get_str() + ")";
    if (violations) {
      detail += "; partial sum >= 0 at " + std::to_string(violations) + " n in [100, 1e4], first " +
                std::to_string(first) + " (" + std::to_string(s.integer_ys[first - 1]) + "), last " +
                std::to_string(last);
    }
    return Outcome{violations == 0 && c > 0, detail};
  });

  criterion(10, "divisibility propositions n<=1e5", 10, [] {
    const auto s = verify_propositions(100000);
    return Outcome{s.ok() && s.prop1_holds == 100000 && s.prop2_holds == 50000,
                   "prop1 holds " + std::to_string(s.prop1_holds) + "/100000, prop2 divides for " +
                       std::to_string(s.prop2_holds) + " n, all matching n = 1, 2 mod 4"};
  });

  criterion(11, "poset axioms and Hasse edges", 0, [] {
    const DivisibilityPoset p(SequenceKind::Triangular, 200);
    std::uint64_t bad = 0;
    for (std::uint64_t a = 1; a <= 200; ++a) {
      bad += !p.leq(a, a);
      for (std::uint64_t b = 1; b <= 200; ++b) {
        if (a != b && p.leq(a, b) && p.leq(b, a)) ++bad;
        if (!p.leq(a, b)) continue;
        for (std::uint64_t c = 1; c <= 200; ++c) bad += p.leq(b, c) && !p.leq(a, c);
      }
    }
    const auto g = hasse_edges(p, 20);
    auto has = [&](std::uint64_t a, std::uint64_t b) {
      return std::find(g.edges.begin(), g.edges.end(), HasseEdge{a, b}) != g.edges.end();
    };
    const bool edges = has(5, 14) && has(14, 20) && !has(5, 20);
    return Outcome{bad == 0 && edges, std::to_string(bad) + " axiom violations on 1..200; (5,14) " +
                                          (has(5, 14) ? "present" : "missing") + ", (14,20) " +
                                          (has(14, 20) ? "present" : "missing") + ", (5,20) " +
                                          (has(5, 20) ? "present" : "absent")};
  });

  criterion(12, "full pipeline N=1e4", 60, [] {
    double recursion_1000 = 0, inversion_1000 = 0;
    const double total = seconds_of([] {
      const auto mu = mobius_one_var(DivisibilityPoset(SequenceKind::Triangular, 10000), 10000);
      (void)mertens_tri(mu);
      (void)abs_sums(mu);
      (void)ratio_sums_index(mu);
      (void)ratio_sums_triangular(mu);
      (void)magnitude_records(mu);
      (void)signed_records(mu);
    });
    const DivisibilityPoset p(SequenceKind::Triangular, kMaxMatrixDimension);
    recursion_1000 = seconds_of([&] { (void)mobius_one_var(p, kMaxMatrixDimension); });
    inversion_1000 = seconds_of([&] { (void)invert_zeta(zeta_matrix(p, kMaxMatrixDimension)); });
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "vector + all series at N=1e4 in %.3f s; at N=1000 recursion %.5f s vs dense inversion %.5f s",
                  total, recursion_1000, inversion_1000);
    return Outcome{total < 60 && recursion_1000 < inversion_1000, buf};
  });

  std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
