#include "trimobius/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "trimobius/analysis.hpp"
#include "trimobius/error.hpp"
#include "trimobius/io.hpp"
#include "trimobius/mobius.hpp"
#include "trimobius/props.hpp"

namespace trimobius::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kMaxSeriesLimit = 100'000'000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t limit = 0;
  std::string kind = "triangular";
  std::string format;
  std::string out_path;
};

SequenceKind kind_of(const Common& c) { return *parse_sequence_kind(c.kind); }

// Writes the artifact built by `writer` to --out or the output stream.
void emit(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& writer) {
  if (c.out_path.empty()) {
    writer(out);
  } else {
    io::write_file(c.out_path, writer);
  }
}

json series_json(const SeriesReport& s) {
  json j;
  j["name"] = s.name;
  j["offset"] = 1;
  j["n"] = s.size();
  if (s.value_kind == SeriesValues::Integer) {
    j["values"] = s.integer_ys;
    j["final"] = s.integer_ys.back();
  } else {
    j["values"] = s.ys;
    j["final"] = s.ys.back();
    j["final_decimal"] = to_decimal(s.final_value, 15);
  }
  j["endpoint_slope"] = s.endpoint_slope.get_d();
  j["average"] = s.average.get_d();
  j["least_squares_slope"] = s.least_squares_slope;
  return j;
}

void write_series(const Common& c, std::ostream& out, const SeriesReport& s, json extra = {}) {
  if (c.format == "bfile") {
    if (s.value_kind != SeriesValues::Integer) {
      throw UsageError("bfile format needs an integer series; use csv, json or svg");
    }
    emit(c, out, [&](std::ostream& os) { io::write_bfile(os, s.integer_ys); });
  } else if (c.format == "csv") {
    emit(c, out, [&](std::ostream& os) { io::write_series_csv(os, s); });
  } else if (c.format == "svg") {
    emit(c, out, [&](std::ostream& os) { io::render_svg_plot(os, s); });
  } else {
    json j = series_json(s);
    if (extra.is_object()) j.update(extra);
    emit(c, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  }
}

template <typename Matrix>
void write_matrix(const Common& c, std::ostream& out, const Matrix& m) {
  if (c.format == "json") {
    json rows = json::array();
    for (std::size_t i = 1; i <= m.dim(); ++i) {
      json r = json::array();
      for (auto v : m.row(i)) r.push_back(static_cast<std::int64_t>(v));
      rows.push_back(std::move(r));
    }
    const json j{{"n", m.dim()}, {"rows", std::move(rows)}};
    emit(c, out, [&](std::ostream& os) { os << j.dump() << '\n'; });
  } else {
    emit(c, out, [&](std::ostream& os) { io::write_matrix_csv(os, m); });
  }
}

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help,
                      Common& c, std::vector<std::string> formats, std::uint64_t max_limit,
                      bool needs_limit = true) {
  CLI::App* sub = app.add_subcommand(name, help);
  c.format = formats.front();
  auto* limit = sub->add_option("-n,--limit", c.limit, "prefix length N")
                    ->check(CLI::Range(std::uint64_t{1}, max_limit));
  if (needs_limit) limit->required();
  sub->add_option("--kind", c.kind, "poset kind")
      ->check(CLI::IsMember({"triangular", "identity"}))
      ->capture_default_str();
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "write to PATH instead of stdout");
  return sub;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mobius function of sequence-induced divisibility posets", "trimobius"};
  app.require_subcommand(1);

  Common mobius_c, sums_c, abs_c, ratio_c, zeta_c, mmat_c, hasse_c, heat_c, rec_c, props_c,
      classical_c, verify_c, diff_c;
  const std::vector<std::string> series_formats{"bfile", "csv", "json", "svg"};

  auto* mobius = add_command(app, "mobius", "mu_P(1, n) for n = 1..N", mobius_c, series_formats,
                             kMaxSeriesLimit);
  auto* sums = add_command(app, "sums", "partial sums of mu_P(1, n)", sums_c, series_formats,
                           kMaxSeriesLimit);
  std::uint64_t tail_start = 0;
  sums->add_option("--tail-start", tail_start, "first n of the estimate_C window (default N/10)");
  auto* abs = add_command(app, "abs-sums", "partial sums of |mu_P(1, n)|", abs_c, series_formats,
                          kMaxSeriesLimit);
  auto* ratio = add_command(app, "ratio-sums", "partial sums of mu_P(1, n) / denominator", ratio_c,
                            {"csv", "json", "svg", "bfile"}, kMaxSeriesLimit);
  std::string denominator = "index";
  ratio->add_option("--denominator", denominator, "divide by i or by T(i)")
      ->check(CLI::IsMember({"index", "triangular"}))
      ->capture_default_str();
  auto* zeta = add_command(app, "zeta-matrix", "n x n zeta matrix", zeta_c, {"csv", "json"},
                           kMaxMatrixDimension);
  auto* mmat = add_command(app, "mobius-matrix", "n x n Mobius matrix", mmat_c, {"csv", "json"},
                           kMaxMatrixDimension);
  std::string method = "inversion";
  mmat->add_option("--method", method, "forward substitution or two-variable recursion")
      ->check(CLI::IsMember({"inversion", "recursion"}))
      ->capture_default_str();
  auto* hasse = add_command(app, "hasse", "Hasse diagram of 1..n", hasse_c, {"dot", "json"},
                            PredecessorTable::kMaxTableIndex);
  auto* heat = add_command(app, "heatmap", "SVG heatmap of a zeta or Mobius matrix", heat_c,
                           {"svg"}, kMaxMatrixDimension);
  std::string heat_matrix = "mobius";
  heat->add_option("--matrix", heat_matrix, "matrix to draw")
      ->check(CLI::IsMember({"zeta", "mobius"}))
      ->capture_default_str();
  auto* rec = add_command(app, "records", "first n reaching each |mu| magnitude", rec_c,
                          {"csv", "json"}, kMaxSeriesLimit);
  auto* props = add_command(app, "props", "verify the two triangular divisibility propositions",
                            props_c, {"text", "json"}, kProp1MaxN);
  auto* classical = add_command(app, "classical", "classical Mobius sieve baseline", classical_c,
                                series_formats, kMaxSeriesLimit);
  std::string classical_series = "mobius";
  classical->add_option("--series", classical_series, "which sequence to write")
      ->check(CLI::IsMember({"mobius", "mertens", "abs-sums"}))
      ->capture_default_str();
  auto* verify = add_command(app, "verify", "cross-check recursion against matrix inversion",
                             verify_c, {"text"}, kMaxMatrixDimension);
  auto* diff = add_command(app, "oeis-diff", "compare a local b-file with the computed sequence",
                           diff_c, {"text"}, kMaxSeriesLimit, false);
  std::string bfile_path, diff_sequence = "mobius";
  diff->add_option("--bfile", bfile_path, "local b-file")->required();
  diff->add_option("--sequence", diff_sequence, "sequence the b-file holds")
      ->check(CLI::IsMember({"mobius", "sums"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  if (mobius->parsed()) {
    const auto mu = mobius_one_var(DivisibilityPoset(kind_of(mobius_c), mobius_c.limit), mobius_c.limit);
    const std::vector<std::int64_t> values(mu.values().begin(), mu.values().end());
    auto s = SeriesReport::from_integers(std::string(kind_of(mobius_c) == SequenceKind::Triangular
                                                         ? "mu_T(n)"
                                                         : "mu(n)"),
                                         values);
    write_series(mobius_c, out, s);
  } else if (sums->parsed()) {
    const std::uint64_t n = sums_c.limit;
    const auto s = mertens_tri(mobius_one_var(DivisibilityPoset(kind_of(sums_c), n), n));
    json extra = json::object();
    const std::uint64_t start = tail_start ? tail_start : std::max<std::uint64_t>(1, n / 10);
    if (start < n) {
      extra["tail_start"] = start;
      extra["estimate_C"] = estimate_C(s, start).get_d();
    } else if (tail_start) {
      throw UsageError("--tail-start must be below N");
    }
    write_series(sums_c, out, s, extra);
  } else if (abs->parsed()) {
    write_series(abs_c, out,
                 abs_sums(mobius_one_var(DivisibilityPoset(kind_of(abs_c), abs_c.limit), abs_c.limit)));
  } else if (ratio->parsed()) {
    const auto mu = mobius_one_var(DivisibilityPoset(kind_of(ratio_c), ratio_c.limit), ratio_c.limit);
    const auto s = denominator == "index" ? ratio_sums_index(mu) : ratio_sums_triangular(mu);
    json extra = json::object();
    if (ratio_c.limit >= 2) {
      extra["drift_from"] = ratio_c.limit / 2;
      extra["tail_drift"] = tail_drift(s, ratio_c.limit / 2);
    }
    write_series(ratio_c, out, s, extra);
  } else if (zeta->parsed()) {
    write_matrix(zeta_c, out, zeta_matrix(DivisibilityPoset(kind_of(zeta_c), zeta_c.limit), zeta_c.limit));
  } else if (mmat->parsed()) {
    const DivisibilityPoset poset(kind_of(mmat_c), mmat_c.limit);
    write_matrix(mmat_c, out,
                 method == "inversion" ? invert_zeta(zeta_matrix(poset, mmat_c.limit))
                                       : mobius_matrix_by_recursion(poset, mmat_c.limit));
  } else if (hasse->parsed()) {
    const auto g = hasse_edges(DivisibilityPoset(kind_of(hasse_c), hasse_c.limit), hasse_c.limit);
    if (hasse_c.format == "json") {
      json edges = json::array();
      for (const auto& e : g.edges) edges.push_back({e.lower, e.upper});
      const json j{{"n", g.n_elements}, {"edges", std::move(edges)}};
      emit(hasse_c, out, [&](std::ostream& os) { os << j.dump() << '\n'; });
    } else {
      emit(hasse_c, out, [&](std::ostream& os) { io::write_dot(os, g); });
    }
  } else if (heat->parsed()) {
    const io::HeatmapSpec spec{heat_matrix == "zeta" ? io::HeatmapSource::Zeta : io::HeatmapSource::Mobius,
                               kind_of(heat_c), heat_c.limit};
    emit(heat_c, out, [&](std::ostream& os) { io::render_svg_heatmap(os, spec); });
  } else if (rec->parsed()) {
    const auto mu = mobius_one_var(DivisibilityPoset(kind_of(rec_c), rec_c.limit), rec_c.limit);
    const auto absolute = magnitude_records(mu);
    const auto sign = signed_records(mu);
    auto opt = [](const MagnitudeRecord* r, bool eq) -> std::string {
      if (!r) return "";
      if (eq) return r->first_eq ? std::to_string(*r->first_eq) : "";
      return std::to_string(r->first_geq);
    };
    if (rec_c.format == "json") {
      json rows = json::array();
      for (const auto& r : absolute.rows) {
        json row{{"magnitude", r.magnitude}, {"first_abs_geq", r.first_geq}};
        row["first_abs_eq"] = r.first_eq ? json(*r.first_eq) : json(nullptr);
        const auto* s = sign.find(r.magnitude);
        row["first_signed_geq"] = s ? json(s->first_geq) : json(nullptr);
        row["first_signed_eq"] = s && s->first_eq ? json(*s->first_eq) : json(nullptr);
        rows.push_back(std::move(row));
      }
      const json j{{"n", rec_c.limit}, {"rows", std::move(rows)}};
      emit(rec_c, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
    } else {
      emit(rec_c, out, [&](std::ostream& os) {
        os << "M,first_abs_geq,first_abs_eq,first_signed_geq,first_signed_eq\n";
        for (const auto& r : absolute.rows) {
          os << r.magnitude << ',' << r.first_geq << ',' << opt(&r, true) << ','
             << opt(sign.find(r.magnitude), false) << ',' << opt(sign.find(r.magnitude), true)
             << '\n';
        }
      });
    }
  } else if (props->parsed()) {
    const auto s = verify_propositions(props_c.limit);
    auto first = [](const std::optional<std::uint64_t>& f) {
      return f ? std::to_string(*f) : std::string("none");
    };
    if (props_c.format == "json") {
      const json j{{"limit", s.limit},
                   {"prop1_holds", s.prop1_holds},
                   {"prop1_first_failure", s.prop1_first_failure ? json(*s.prop1_first_failure) : json(nullptr)},
                   {"prop2_holds", s.prop2_holds},
                   {"prop2_first_failure", s.prop2_first_failure ? json(*s.prop2_first_failure) : json(nullptr)},
                   {"ok", s.ok()}};
      emit(props_c, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
    } else {
      emit(props_c, out, [&](std::ostream& os) {
        os << (s.ok() ? "OK" : "FAIL") << " n<=" << s.limit << " prop1 holds " << s.prop1_holds
           << "/" << s.limit << " (first failure " << first(s.prop1_first_failure)
           << "); prop2 divides for " << s.prop2_holds << " n, residue rule first failure "
           << first(s.prop2_first_failure) << "\n";
      });
    }
    return s.ok() ? kExitOk : kExitFailure;
  } else if (classical->parsed()) {
    const auto sieve = classical_mobius(classical_c.limit);
    if (classical_series == "mertens") {
      write_series(classical_c, out, classical_mertens(sieve));
    } else if (classical_series == "abs-sums") {
      write_series(classical_c, out, classical_abs_sums(sieve));
    } else {
      const std::vector<std::int64_t> values(sieve.values().begin(), sieve.values().end());
      write_series(classical_c, out, SeriesReport::from_integers("mu(n)", values));
    }
  } else if (verify->parsed()) {
    const std::uint64_t n = verify_c.limit;
    const DivisibilityPoset poset(kind_of(verify_c), n);
    const ZetaMatrix z = zeta_matrix(poset, n);
    const MobiusMatrix m = invert_zeta(z);
    const auto mu = mobius_one_var(poset, n);
    const std::vector<std::int64_t> recursion(mu.values().begin(), mu.values().end());
    std::string failure;
    if (!verify_inverse(z, m)) {
      failure = "M*Z != I";
    } else if (m.first_column() != recursion) {
      failure = "first column of Z^-1 differs from the one-variable recursion";
    } else if (m != mobius_matrix_by_recursion(poset, n)) {
      failure = "Z^-1 differs from the two-variable recursion";
    }
    emit(verify_c, out, [&](std::ostream& os) { os << (failure.empty() ? "OK" : "FAIL: " + failure) << "\n"; });
    return failure.empty() ? kExitOk : kExitFailure;
  } else if (diff->parsed()) {
    const io::BFile local = io::read_bfile(bfile_path);
    const std::int64_t last = local.offset + static_cast<std::int64_t>(local.values.size()) - 1;
    if (local.values.empty() || last < 1) throw Error("b-file has no terms at indices >= 1");
    std::uint64_t n = static_cast<std::uint64_t>(last);
    if (diff_c.limit) n = std::min(n, diff_c.limit);
    const auto mu = mobius_one_var(DivisibilityPoset(kind_of(diff_c), n), n);
    std::vector<std::int64_t> computed(mu.values().begin(), mu.values().end());
    if (diff_sequence == "sums") computed = mertens_tri(mu).integer_ys;
    const auto report = io::oeis_diff(local, computed);
    emit(diff_c, out, [&](std::ostream& os) {
      if (report.matches()) {
        os << "match " << report.overlap_first << ".." << report.overlap_last << "\n";
      } else {
        os << "mismatch at " << *report.first_mismatch << ": b-file " << report.local_value
           << ", computed " << report.computed_value << "\n";
      }
    });
    return report.matches() ? kExitOk : kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(argc, argv, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"trimobius"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace trimobius::cli
