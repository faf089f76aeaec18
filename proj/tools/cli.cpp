#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "automorph/counterexamples.hpp"
#include "automorph/curve.hpp"
#include "automorph/errors.hpp"
#include "automorph/format.hpp"
#include "automorph/map_expr.hpp"
#include "automorph/param_solver.hpp"
#include "automorph/series.hpp"
#include "automorph/verifier.hpp"

namespace automorph::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kIterateGapLimit = 1e-12;
constexpr std::uint32_t kLimitTableRows = 100;

struct RunConfig {
  double a = std::numeric_limits<double>::quiet_NaN();
  std::optional<double> b;
  double k = 1.0;
  std::optional<double> claim;
  std::string n_text;
  std::uint32_t n = 1;
  std::size_t grid = 2001;
  std::optional<double> eps;
  std::optional<double> tol_endpoint;
  std::optional<double> tol_deriv;
  std::optional<std::size_t> order;
  std::string kind;
  std::string family;
  std::string out;
  std::string format = "csv";
};

std::string strip_extension(const std::string& path) {
  for (const char* ext : {".csv", ".json"}) {
    const std::string e(ext);
    if (path.size() > e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0) {
      return path.substr(0, path.size() - e.size());
    }
  }
  return path;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << content;
  if (!file) throw std::runtime_error("failed writing " + path);
}

// Writes to --out when given, otherwise to stdout.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& content) {
  if (cfg.out.empty()) {
    out << content;
  } else {
    write_file(cfg.out, content);
  }
}

std::string csv_text(const CurveSample& curve) {
  std::ostringstream s;
  write_csv(s, curve);
  return s.str();
}

std::string json_text(const json& doc) { return doc.dump(2) + "\n"; }

ToleranceProfile tolerances(const RunConfig& cfg) {
  ToleranceProfile tol;
  if (cfg.tol_endpoint) tol.endpoint = *cfg.tol_endpoint;
  if (cfg.tol_deriv) tol.derivative = *cfg.tol_deriv;
  return tol;
}

std::string report_csv(const VerificationReport& report) {
  std::ostringstream s;
  s << "name,pass,measured,threshold\n";
  for (const auto& c : report.checks) {
    s << c.name << ',' << (c.pass ? "true" : "false") << ',' << format_double(c.measured)
      << ',' << format_double(c.threshold) << '\n';
  }
  return s.str();
}

void summarize(std::ostream& err, const std::string& cmd, const VerificationReport& report) {
  err << cmd << ": " << report.expr << " verification " << (report.pass() ? "PASS" : "FAIL")
      << '\n';
  for (const auto& c : report.checks) {
    if (!c.pass) {
      err << "  " << c.name << ": measured " << format_double(c.measured) << " > "
          << format_double(c.threshold) << '\n';
    }
  }
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const MapExpr map = build_automorphism(cfg.a);
  const VerificationReport report = verify(map, cfg.a, kDefaultVerifyGrid, tolerances(cfg));
  if (cfg.format == "json") {
    emit(cfg, out, json_text(to_json(report)));
  } else {
    emit(cfg, out, csv_text(sample_curve(map, cfg.grid, cfg.eps.value_or(0.0))));
    if (!cfg.out.empty()) {
      write_file(strip_extension(cfg.out) + ".report.json", json_text(to_json(report)));
    }
  }
  summarize(err, "build", report);
  return report.pass() ? kSuccess : kVerificationFailure;
}

int cmd_iterate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1) throw ParameterError("--n must be at least 1");
  const MapExpr base = MapExpr::sin_half_pi();
  const double slope = base.deriv(0.0);
  json table = json::array();
  bool ok = true;
  double expected = 1.0;
  for (std::uint32_t k = 1; k <= cfg.n; ++k) {
    const MapExpr h = iterate(base, k);
    expected *= slope;
    const double measured = h.deriv(0.0);
    const double gap = std::abs(measured - expected) / std::abs(expected);
    ok = ok && gap <= kIterateGapLimit;
    table.push_back({{"n", k},
                     {"deriv_at_zero", measured},
                     {"pi_over_2_pow_n", expected},
                     {"relative_gap", gap}});
    if (!cfg.out.empty()) {
      write_file(strip_extension(cfg.out) + "_h" + std::to_string(k) + ".csv",
                 csv_text(sample_curve(h, cfg.grid, cfg.eps.value_or(0.0))));
    }
  }
  if (cfg.out.empty()) {
    out << json_text(table);
  } else {
    write_file(strip_extension(cfg.out) + "_table.json", json_text(table));
  }
  err << "iterate: " << cfg.n << " iterates of sin_half_pi, power law "
      << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

// Resolves --family/--a/--b/--k/--n into a map and its nominal slope at 0.
std::pair<MapExpr, double> select_map(const RunConfig& cfg) {
  if (cfg.family.empty()) {
    if (std::isnan(cfg.a)) throw ParameterError("verify needs --a or --family");
    return {build_automorphism(cfg.a), cfg.a};
  }
  MapExpr primitive = MapExpr::identity();
  if (cfg.family == "sin") {
    primitive = MapExpr::sin_half_pi();
  } else if (cfg.family == "erf") {
    primitive = MapExpr::erf_family(cfg.k);
  } else if (cfg.family == "arctan") {
    const double b = cfg.b ? *cfg.b : solve_b_arctan(cfg.a).b_star;
    primitive = MapExpr::arctan_family(cfg.a, b);
  } else {
    const double b = cfg.b ? *cfg.b : solve_b_tan(cfg.a).b_star;
    primitive = MapExpr::tan_family(cfg.a, b);
  }
  MapExpr map = cfg.n > 1 ? iterate(primitive, cfg.n) : primitive;
  return {map, map.deriv(0.0)};
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto [map, nominal] = select_map(cfg);
  const double claimed = cfg.claim.value_or(nominal);
  const VerificationReport report = verify(map, claimed, cfg.grid, tolerances(cfg));
  emit(cfg, out, cfg.format == "csv" ? report_csv(report) : json_text(to_json(report)));
  summarize(err, "verify", report);
  return report.pass() ? kSuccess : kVerificationFailure;
}

int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunConfig primitive_cfg = cfg;
  primitive_cfg.n = 1;
  const MapExpr family = select_map(primitive_cfg).first;
  const std::size_t order = cfg.order.value_or(default_order(family.kind()));
  const SeriesExpansion s = taylor(family, order);
  if (cfg.format == "json") {
    emit(cfg, out,
         json_text({{"family", s.family},
                    {"order", s.order},
                    {"radius", std::isinf(s.radius) ? json("inf") : json(s.radius)},
                    {"coefficients", s.coeffs}}));
  } else {
    std::ostringstream text;
    text << "index,coefficient\n";
    for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
      text << j << ',' << format_double(s.coeffs[j]) << '\n';
    }
    emit(cfg, out, text.str());
  }
  err << "series: " << s.family << " order " << s.order << " radius "
      << format_double(s.radius) << '\n';
  return kSuccess;
}

std::optional<std::uint32_t> parse_sequence_index(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "\xE2\x88\x9E") return std::nullopt;
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("--n must be a positive integer or 'inf', got '" + text + "'");
  }
  if (used != text.size() || value < 1 || value > std::numeric_limits<std::uint32_t>::max()) {
    throw ParameterError("--n must be a positive integer or 'inf', got '" + text + "'");
  }
  return static_cast<std::uint32_t>(value);
}

int cmd_counterexample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SeqKind kind = cfg.kind == "bump" ? SeqKind::FlatBump : SeqKind::PiecewiseCubic;
  const auto index = parse_sequence_index(cfg.n_text);
  const SeqFamily seq = index ? SeqFamily::member(kind, *index) : SeqFamily::limit(kind);
  const double eps = cfg.eps.value_or(1e-6);
  if (!(eps > 0.0)) throw ParameterError("--eps must be positive for counterexample curves");

  const std::uint32_t rows = index ? *index : kLimitTableRows;
  json table = json::array();
  for (std::uint32_t m = 1; m <= rows; ++m) {
    const double gap =
        sup_norm_gap(SeqFamily::member(kind, m), -1.0 + eps, 1.0 - eps, cfg.grid);
    table.push_back({{"n", m}, {"sup_norm_gap", gap}});
  }

  if (cfg.format == "json") {
    emit(cfg, out, json_text(table));
  } else {
    emit(cfg, out, csv_text(sample_curve(seq, cfg.grid, eps)));
    if (!cfg.out.empty()) {
      write_file(strip_extension(cfg.out) + ".convergence.json", json_text(table));
    }
  }
  const auto witness = injectivity_witness(seq, cfg.grid, eps);
  err << "counterexample: " << seq.describe() << (witness ? " not injective" : " injective")
      << " on the sample grid\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real analytic automorphisms of [-1, 1] with prescribed slope at 0",
               "automorph"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto grid_check = CLI::Range(std::size_t{3}, std::numeric_limits<std::size_t>::max());
  auto eps_check = CLI::Range(0.0, 0.1);
  auto formats = CLI::IsMember({"csv", "json"});
  auto positive = CLI::PositiveNumber;

  auto* build = app.add_subcommand("build", "Construct and verify the map with f'(0) = a");
  build->add_option("--a", cfg.a, "Target derivative at the origin")->required();
  build->add_option("--grid", cfg.grid, "Curve grid size")->check(grid_check);
  build->add_option("--eps", cfg.eps, "Margin trimmed from each end of the curve grid")
      ->check(eps_check);
  build->add_option("--tol-endpoint", cfg.tol_endpoint)->check(positive);
  build->add_option("--tol-deriv", cfg.tol_deriv)->check(positive);
  build->add_option("--out", cfg.out, "Curve CSV path; report goes to <stem>.report.json");
  build->add_option("--format", cfg.format)->check(formats);

  auto* iter = app.add_subcommand("iterate", "Iterates of sin(pi x / 2)");
  iter->add_option("--n", cfg.n, "Number of iterates")->required()->check(CLI::Range(1u, 1000000u));
  iter->add_option("--grid", cfg.grid)->check(grid_check);
  iter->add_option("--eps", cfg.eps)->check(eps_check);
  iter->add_option("--out", cfg.out, "Prefix for <prefix>_h<k>.csv and <prefix>_table.json");

  auto* ver = app.add_subcommand("verify", "Verify a family member or a built map");
  ver->add_option("--family", cfg.family)->check(CLI::IsMember({"arctan", "tan", "sin", "erf"}));
  ver->add_option("--a", cfg.a, "Family slope parameter, or target for build");
  ver->add_option("--b", cfg.b, "Shape parameter; solved from a when omitted");
  ver->add_option("--k", cfg.k, "erf shape parameter");
  ver->add_option("--n", cfg.n, "Iteration count applied to the family")
      ->check(CLI::Range(1u, 1000000u));
  ver->add_option("--claim", cfg.claim, "Claimed derivative at the origin");
  ver->add_option("--grid", cfg.grid)->check(grid_check);
  ver->add_option("--tol-endpoint", cfg.tol_endpoint)->check(positive);
  ver->add_option("--tol-deriv", cfg.tol_deriv)->check(positive);
  ver->add_option("--out", cfg.out);
  ver->add_option("--format", cfg.format)->check(formats);

  auto* ser = app.add_subcommand("series", "Maclaurin coefficients of a primitive family");
  ser->add_option("--family", cfg.family)
      ->required()
      ->check(CLI::IsMember({"arctan", "tan", "sin", "erf"}));
  ser->add_option("--a", cfg.a);
  ser->add_option("--b", cfg.b);
  ser->add_option("--k", cfg.k);
  ser->add_option("--order", cfg.order)->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  ser->add_option("--out", cfg.out);
  ser->add_option("--format", cfg.format)->check(formats);

  auto* cex = app.add_subcommand("counterexample", "Injective sequences with non-injective limits");
  cex->add_option("--kind", cfg.kind)->required()->check(CLI::IsMember({"bump", "piecewise"}));
  cex->add_option("--n", cfg.n_text, "Sequence index or 'inf'")->required();
  cex->add_option("--grid", cfg.grid)->check(grid_check);
  cex->add_option("--eps", cfg.eps)->check(eps_check);
  cex->add_option("--out", cfg.out);
  cex->add_option("--format", cfg.format)->check(formats);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (build->parsed()) return cmd_build(cfg, out, err);
    if (iter->parsed()) return cmd_iterate(cfg, out, err);
    if (ver->parsed()) {
      if (ver->count("--grid") == 0) cfg.grid = kDefaultVerifyGrid;
      return cmd_verify(cfg, out, err);
    }
    if (ser->parsed()) return cmd_series(cfg, out, err);
    return cmd_counterexample(cfg, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
}

}  // namespace automorph::cli
