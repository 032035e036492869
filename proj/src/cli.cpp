#include "felog/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "felog/errors.hpp"
#include "felog/fracops.hpp"
#include "felog/io.hpp"
#include "felog/series.hpp"

namespace felog::cli {

namespace {

enum class Format { json, csv };

struct Config {
  std::optional<double> beta;
  double m = 1.0;
  std::size_t n_terms = kDefaultTerms;
  std::optional<double> t0;
  std::optional<double> t1;
  std::size_t steps = 200;
  std::string method = "termwise";
  std::optional<std::string> format;
  std::optional<std::string> out_path;
  std::optional<double> tol;
  std::string grid = "graded";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kCompareTol = 1e-8;

void add_options(CLI::App* sub, Config& cfg, bool with_method) {
  sub->add_option("--beta", cfg.beta, "fractional order in (0,1]");
  sub->add_option("--m", cfg.m, "logistic parameter M >= 1")->capture_default_str();
  sub->add_option("-n,--n-terms", cfg.n_terms, "number of series coefficients")->capture_default_str();
  sub->add_option("--t0", cfg.t0, "start of the t grid");
  sub->add_option("--t1", cfg.t1, "end of the t grid");
  sub->add_option("--steps", cfg.steps, "grid points (eval, compare) or cells (verify)")->capture_default_str();
  if (with_method) {
    sub->add_option("--method", cfg.method, "termwise | l1 | integro | volterra | pc")->capture_default_str();
    sub->add_option("--grid", cfg.grid, "uniform | graded")->capture_default_str();
  }
  sub->add_option("--format", cfg.format, "json | csv (default: $FELOG_FORMAT or json)");
  sub->add_option("--out", cfg.out_path, "write output here instead of stdout");
  sub->add_option("--tol", cfg.tol, "pass/fail tolerance override");
}

Format resolve_format(const Config& cfg) {
  std::string f = "json";
  if (cfg.format) {
    f = *cfg.format;
  } else if (const char* env = std::getenv("FELOG_FORMAT"); env != nullptr && *env != '\0') {
    f = env;
  }
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  throw UsageError("format must be json or csv, got '" + f + "'");
}

double need_beta(const Config& cfg) {
  if (!cfg.beta) throw UsageError("--beta is required");
  return *cfg.beta;
}

std::vector<double> linspace(double t0, double t1, std::size_t steps) {
  if (steps < 1) throw UsageError("steps must be >= 1");
  if (!(t0 < t1)) throw UsageError("t0 must be < t1");
  if (t0 < 0.0) throw UsageError("t0 must be >= 0");
  if (steps == 1) return {t1};
  std::vector<double> t(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    t[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  t.back() = t1;
  return t;
}

void emit(const Config& cfg, const std::string& payload, std::ostream& out) {
  if (!cfg.out_path) {
    out << payload;
    return;
  }
  std::ofstream f(*cfg.out_path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + *cfg.out_path + "' for writing");
  f << payload;
  f.close();
  if (!f) throw IoError("failed writing '" + *cfg.out_path + "'");
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_coeffs(const Config& cfg, std::ostream& out) {
  const auto fmt = resolve_format(cfg);
  const auto seq = build_sequence(need_beta(cfg), cfg.m, cfg.n_terms);
  emit(cfg, fmt == Format::json ? dump(io::to_json(seq)) : io::to_csv(seq), out);
  return kExitOk;
}

int cmd_eval(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto fmt = resolve_format(cfg);
  const SeriesSolution sol(build_sequence(need_beta(cfg), cfg.m, cfg.n_terms));
  const auto grid = linspace(cfg.t0.value_or(0.0), cfg.t1.value_or(2.0), cfg.steps);
  const auto curve = sol.eval(grid);
  const auto outside = std::count_if(curve.begin(), curve.end(), [](const EvalPoint& p) { return !p.in_domain; });
  if (outside == static_cast<std::ptrdiff_t>(curve.size())) {
    throw DomainError("every grid point lies past the convergence radius " +
                      io::format_double(sol.operating_radius()));
  }
  if (outside > 0) {
    err << "warning: " << outside << " of " << curve.size() << " points lie past the convergence radius "
        << io::format_double(sol.operating_radius()) << "; their values are not trustworthy\n";
  }
  emit(cfg, fmt == Format::json ? dump(io::to_json(curve)) : io::to_csv(curve), out);
  return kExitOk;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto fmt = resolve_format(cfg);
  const auto method = parse_method(cfg.method);
  if (!method) throw UsageError("unknown method '" + cfg.method + "'");
  const auto spacing = parse_spacing(cfg.grid);
  if (!spacing) throw UsageError("grid must be uniform or graded");
  if (cfg.steps < 2) throw UsageError("verify needs steps >= 2");

  const SeriesSolution sol(build_sequence(need_beta(cfg), cfg.m, cfg.n_terms));
  GridSpec spec;
  spec.t0 = cfg.t0.value_or(0.0);
  spec.t1 = cfg.t1.value_or(0.8 * sol.operating_radius());
  spec.n = cfg.steps;
  spec.spacing = *spacing;
  const double tol = cfg.tol.value_or(default_tolerance(*method));

  const auto rep = verify(sol, *method, spec);
  emit(cfg, fmt == Format::json ? dump(io::to_json(rep, tol)) : io::to_csv(rep), out);
  const bool pass = rep.sup_norm <= tol;
  err << to_string(*method) << ": sup_norm " << io::format_double(rep.sup_norm) << (pass ? " <= " : " > ")
      << io::format_double(tol) << (pass ? " pass" : " FAIL") << '\n';
  return pass ? kExitOk : kExitFail;
}

int cmd_radius(const Config& cfg, std::ostream& out) {
  const auto fmt = resolve_format(cfg);
  const double beta = need_beta(cfg);
  const auto seq = build_sequence(beta, cfg.m, cfg.n_terms);
  const auto rep = radius_report(seq);
  emit(cfg, fmt == Format::json ? dump(io::to_json(rep, beta, cfg.m)) : io::to_csv(rep, beta, cfg.m), out);
  return kExitOk;
}

int cmd_compare(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto fmt = resolve_format(cfg);
  if (cfg.beta && *cfg.beta != 1.0) throw UsageError("compare is defined only for beta = 1");
  const auto grid = linspace(cfg.t0.value_or(0.0), cfg.t1.value_or(2.0), cfg.steps);
  const auto cmp = compare_classical(cfg.m, grid, cfg.n_terms);
  emit(cfg, fmt == Format::json ? dump(io::to_json(cmp, cfg.m)) : io::to_csv(cmp), out);
  const double tol = cfg.tol.value_or(kCompareTol);
  const bool pass = cmp.max_deviation <= tol;
  err << "compare: max deviation " << io::format_double(cmp.max_deviation) << (pass ? " pass" : " FAIL") << '\n';
  return pass ? kExitOk : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Series solution of the fractional logistic equation", "felog"};
  app.require_subcommand(1, 1);
  Config cfg;
  auto* coeffs = app.add_subcommand("coeffs", "normalized coefficients g_k and raw E_k");
  auto* eval = app.add_subcommand("eval", "evaluate w(t) on a grid");
  auto* verify_cmd = app.add_subcommand("verify", "residual check; exit 1 when above tolerance");
  auto* radius = app.add_subcommand("radius", "convergence radius report");
  auto* compare = app.add_subcommand("compare", "beta = 1 series against 1/(1+exp(-t/M))");
  for (auto* sub : {coeffs, eval, radius, compare}) add_options(sub, cfg, false);
  add_options(verify_cmd, cfg, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(cfg, out);
    if (eval->parsed()) return cmd_eval(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    if (radius->parsed()) return cmd_radius(cfg, out);
    if (compare->parsed()) return cmd_compare(cfg, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace felog::cli
