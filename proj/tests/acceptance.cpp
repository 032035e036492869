// Acceptance checks 1-10. One line per criterion: "criterion N: PASS|FAIL ..."
// followed by the measured numbers. Usage: felog_acceptance [--criterion N]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "felog/cli.hpp"
#include "felog/euler_beta.hpp"
#include "felog/fracops.hpp"
#include "felog/io.hpp"
#include "felog/series.hpp"
#include "felog/specfun.hpp"

using namespace felog;

namespace {

const double kBetaGrid[] = {0.3, 0.5, 0.7, 0.9, 1.0};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    detail += (ok ? "  ok   " : "  FAIL ") + what + "\n";
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const SeriesSolution s(build_sequence(1.0, 1.0, 64));
  double worst = 0.0, worst_early = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double t = 0.1 * i;
    const double dev = std::abs(s.eval(t).w - std::exp(t) / (1.0 + std::exp(t)));
    worst = std::max(worst, dev);
    if (i <= 10) worst_early = std::max(worst_early, dev);
  }
  const double secs = seconds_since(t0);
  o.require(worst <= 1e-8, "max |w - e^t/(1+e^t)| over t=0.1..2.0 = " + fmt(worst) + " (<= 1e-8)");
  o.require(worst_early <= 1e-10, "max over t <= 1 = " + fmt(worst_early) + " (<= 1e-10)");
  o.require(secs < 0.1, "runtime " + fmt(secs) + " s (< 0.1)");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::string printed;
  for (double b : kBetaGrid) {
    for (const auto& row : closed_form_check(build_sequence(b, 1.0, 10))) {
      worst = std::max(worst, row.relative_residual);
      if (row.k >= 7) printed += " b=" + fmt(b) + ",k=" + std::to_string(row.k) + ":" + fmt(row.printed_residual);
    }
  }
  const double secs = seconds_since(t0);
  o.require(worst <= 1e-10, "max relative residual k=3,5,7,9 over beta grid = " + fmt(worst) + " (<= 1e-10)");
  o.require(secs < 0.1, "runtime " + fmt(secs) + " s (< 0.1)");
  o.detail += "  info verbatim E_7/E_9 relative residuals:" + printed + "\n";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (double b : kBetaGrid) {
    const auto s = build_sequence(b, 1.0, 66, BuildOptions{.snap_even_terms = false});
    double worst = 0.0;
    for (std::size_t k = 1; k <= 32; ++k) {
      worst = std::max(worst, std::abs(s.g(2 * k)) / std::max(1.0, std::abs(s.g(2 * k - 1))));
    }
    o.require(worst <= 1e-14, "beta=" + fmt(b) + " unsnapped max |g_2k|/max(1,|g_2k-1|) = " + fmt(worst));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (double b : kBetaGrid) {
    const auto rows = check_bounds(build_sequence(b, 1.0, 64), 60);
    std::size_t maj = 0, a = 0, bb = 0;
    double worst_maj = -INFINITY, worst_b = -INFINITY;
    for (const auto& r : rows) {
      maj += !r.majorant_ok;
      a += !r.a_ok;
      bb += r.b_ok && !*r.b_ok;
      worst_maj = std::max(worst_maj, r.log_coeff - r.log_majorant);
      if (r.b_ok) worst_b = std::max(worst_b, r.log_coeff - r.log_b);
    }
    o.require(maj == 0, "beta=" + fmt(b) + " majorant violations " + std::to_string(maj) + "/" +
                            std::to_string(rows.size()) + ", max coeff/majorant " + fmt(std::exp(worst_maj)));
    o.require(a == 0, "beta=" + fmt(b) + " a_n violations " + std::to_string(a));
    o.require(bb == 0, "beta=" + fmt(b) + " b_n violations " + std::to_string(bb) + ", max coeff/b_n " +
                           fmt(std::exp(worst_b)));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (double b : {0.5, 0.7}) {
    for (double m : {1.0, 2.0}) {
      const SeriesSolution s(build_sequence(b, m, 64));
      const double t1 = 0.8 * s.operating_radius();
      const std::string tag = "beta=" + fmt(b) + " M=" + fmt(m);
      const double tw = verify(s, VerifyMethod::termwise, {}).sup_norm;
      o.require(tw <= 1e-12, tag + " termwise " + fmt(tw));
      const double l1 = verify(s, VerifyMethod::l1, {0.0, t1, 2000, Spacing::graded}).sup_norm;
      o.require(l1 <= 1e-4, tag + " l1 (2000 graded, t1=" + fmt(t1) + ") " + fmt(l1));
      GridSpec pc{0.0, t1, static_cast<std::size_t>(std::llround(t1 / 1e-4)), Spacing::uniform};
      const double dev = verify(s, VerifyMethod::predictor_corrector, pc).sup_norm;
      o.require(dev <= 1e-5, tag + " predictor-corrector h=1e-4 " + fmt(dev));
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 30.0, "runtime " + fmt(secs) + " s (< 30)");
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (double b : {0.5, 0.7}) {
    for (double m : {1.0, 2.0}) {
      const SeriesSolution s(build_sequence(b, m, 64));
      const GridSpec spec{0.0, 0.8 * s.operating_radius(), 2000, Spacing::graded};
      const double r = verify(s, VerifyMethod::integro, spec).sup_norm;
      const double v = verify(s, VerifyMethod::volterra, spec).sup_norm;
      o.require(r <= 1e-4, "beta=" + fmt(b) + " M=" + fmt(m) + " integro-differential residual " + fmt(r));
      o.detail += "  info integrated (Volterra) form residual " + fmt(v) + "\n";
    }
  }
  const double ts[] = {0.01, 0.1, 0.5, 1.0, 3.0, 10.0, 100.0};
  for (double b : {0.25, 0.5, 0.75}) {
    const double dev = sonine_check(b, ts);
    o.require(dev <= 1e-10, "sonine beta=" + fmt(b) + " max |conv - 1| " + fmt(dev));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const SeriesSolution s(build_sequence(0.5, 1.0, 64));
  const double t1 = 0.8 * s.operating_radius();
  const double e1 = verify(s, VerifyMethod::l1, {0.0, t1, 1000, Spacing::graded}).sup_norm;
  const double e2 = verify(s, VerifyMethod::l1, {0.0, t1, 2000, Spacing::graded}).sup_norm;
  const double ratio = e1 / e2;
  o.require(ratio >= std::pow(2.0, 1.4), "l1 sup 1000 nodes " + fmt(e1) + ", 2000 nodes " + fmt(e2) + ", ratio " +
                                             fmt(ratio) + " (>= " + fmt(std::pow(2.0, 1.4)) + ")");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const double r128 = *empirical_radius(build_sequence(1.0, 1.0, 128));
  o.require(r128 > 2.9 && r128 < 3.3, "r_empirical(1,1,n=128) = " + fmt(r128));
  double err[3];
  const std::size_t ns[] = {32, 64, 128};
  for (int i = 0; i < 3; ++i) err[i] = std::abs(*empirical_radius(build_sequence(1.0, 1.0, ns[i])) - std::numbers::pi);
  // below ~1e-13 the estimate sits at double-precision noise; treat that as converged
  const bool trend = err[1] < err[0] && err[2] <= std::max(err[1], 1e-13);
  o.require(trend, "|r_emp - pi| at n=32,64,128: " + fmt(err[0]) + ", " + fmt(err[1]) + ", " + fmt(err[2]));
  const double rg = guaranteed_radius(1.0, 1.0);
  o.require(std::abs(rg - std::sqrt(6.0)) <= 1e-12, "r_guaranteed(1,1) - sqrt(6) = " + fmt(rg - std::sqrt(6.0)));

  for (double b : kBetaGrid) {
    const SeriesSolution s(build_sequence(b, 1.0, 128));
    const double t = 0.9 * s.radius().r_guaranteed;
    // S_N - S_{N-2} = g_N t^{beta N} for odd N; taken in log space so the
    // ratio is not swamped by rounding once the sum has converged
    std::vector<double> log_inc;
    for (std::size_t n = 1; n < s.seq().n_terms(); n += 2) {
      log_inc.push_back(std::log(std::abs(s.seq().g(n))) + b * static_cast<double>(n) * std::log(t));
    }
    double worst = 0.0;
    for (std::size_t i = log_inc.size() / 2; i + 1 < log_inc.size(); ++i) {
      worst = std::max(worst, std::exp(log_inc[i + 1] - log_inc[i]));
    }
    const double predicted = majorant_base(b) * std::pow(t, 2.0 * b);
    o.require(worst < 1.0, "beta=" + fmt(b) + " t=0.9 r_g=" + fmt(t) + " increment ratio (tail max) " + fmt(worst) +
                               ", majorant ratio " + fmt(predicted) + ", last increment " + fmt(std::exp(log_inc.back())));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  using specfun::Rational;
  const auto b = specfun::bernoulli_numbers(8);
  const Rational table[] = {1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42), 0, Rational(-1, 30)};
  bool same = true;
  for (int i = 0; i <= 8; ++i) same = same && b[i] == table[i];
  o.require(same, "b_0..b_8 equal 1, -1/2, 1/6, 0, -1/30, 0, 1/42, 0, -1/30 exactly");

  const double grid[] = {1.01, 1.5, 2.0, 5.0, 10.0, 50.0};
  std::size_t total = 0, held = 0;
  for (double x : grid) {
    for (double y : grid) {
      const auto f = specfun::bound_predicates(x, y);
      total += 2;
      held += f.beta_bound.value_or(false) + f.gamma_bound.value_or(false);
    }
  }
  for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    ++total;
    held += specfun::bound_predicates(x).gamma_unit_bound.value_or(false);
  }
  o.require(held == total, "bound predicates held " + std::to_string(held) + "/" + std::to_string(total));

  const double x = 50.0;
  const double stirling = std::abs(std::expm1(std::log(specfun::beta_fn(x, x)) + (2 * x - 0.5) * std::log(2 * x) -
                                              0.5 * std::log(2 * std::numbers::pi) - (2 * x - 1) * std::log(x)));
  o.require(stirling <= 0.01, "Stirling Beta check at x=50: " + fmt(stirling));

  double prev = INFINITY;
  bool decreasing = true;
  std::string seq;
  for (std::size_t k = 9; k <= 25; k += 2) {
    const double sign = ((k + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    const double d = sign * std::pow(std::numbers::pi, static_cast<double>(k + 1)) /
                     (4.0 * std::tgamma(static_cast<double>(k + 1))) * specfun::euler_poly(k, 1.0);
    const double dev = std::abs(d + 1.0);
    decreasing = decreasing && dev < prev;
    prev = dev;
    seq += " " + fmt(dev);
  }
  o.require(decreasing, "|d_k + 1| for odd k=9..25 strictly decreasing:" + seq);
  return o;
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> csv_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) lines.push_back(l);
  return lines;
}

Outcome criterion10() {
  Outcome o;
  using nlohmann::json;
  {
    const auto r = cli_run({"coeffs", "--beta", "1.0", "--m", "1.0", "-n", "8", "--format", "csv"});
    const auto lines = csv_lines(r.out);
    bool found = false;
    if (lines.size() == 9) {
      // row "3,g,sign,log10,E"
      const auto& row = lines[4];
      const auto last = row.rfind(',');
      found = row.rfind("3,", 0) == 0 && std::abs(std::stod(row.substr(last + 1)) + 0.125) <= 1e-14;
    }
    o.require(r.code == 0 && found, "coeffs --beta 1.0 --m 1.0 -n 8 --format csv: exit " + std::to_string(r.code) +
                                        ", k=3 raw = -1/8");
  }
  {
    const auto r = cli_run({"coeffs", "--beta", "1.5"});
    o.require(r.code == 2 && r.err.find("beta must lie in (0,1]") != std::string::npos,
              "coeffs --beta 1.5: exit " + std::to_string(r.code));
  }
  {
    const auto r = cli_run({"coeffs", "--beta", "0.5", "-n", "1"});
    o.require(r.code == 2 && r.err.find("n_terms ≥ 2") != std::string::npos,
              "coeffs --beta 0.5 -n 1: exit " + std::to_string(r.code));
  }
  {
    const auto r = cli_run({"eval", "--beta", "1", "--m", "1", "--t0", "0", "--t1", "2", "--steps", "5"});
    const auto j = json::parse(r.out);
    o.require(r.code == 0 && j["t"][0] == 0.0 && j["w"][0] == 0.5, "eval ... --steps 5: first row w(0) = 0.5");
  }
  {
    const auto r = cli_run({"eval", "--beta", "0.7", "--t1", "10"});
    const auto j = json::parse(r.out);
    const double r_emp = *empirical_radius(build_sequence(0.7, 1.0, 64));
    bool flags = true;
    for (std::size_t i = 0; i < j["t"].size(); ++i) flags = flags && (j["in_domain"][i] == (j["t"][i].get<double>() < r_emp));
    o.require(r.code == 0 && flags && r.err.find("warning") != std::string::npos,
              "eval --beta 0.7 --t1 10: in_domain=false past r_empirical " + fmt(r_emp) + ", warning, exit 0");
  }
  {
    const auto r = cli_run({"eval", "--beta", "1", "--t1", "1", "--steps", "1"});
    const auto j = json::parse(r.out);
    const double w = j["w"][0].get<double>();
    o.require(r.code == 0 && j["t"].size() == 1 && j["t"][0] == 1.0 && std::abs(w - 0.7310586) < 5e-8,
              "eval --beta 1 --t1 1 --steps 1: single row w = " + io::format_double(w));
  }
  {
    const auto r = cli_run({"verify", "--beta", "0.5", "--method", "termwise"});
    const double s = json::parse(r.out)["sup_norm"].get<double>();
    o.require(r.code == 0 && s <= 1e-12, "verify termwise beta 0.5: exit " + std::to_string(r.code) + ", " + fmt(s));
  }
  {
    const auto r = cli_run({"verify", "--beta", "0.5", "--method", "l1", "--steps", "2000"});
    const double s = json::parse(r.out)["sup_norm"].get<double>();
    o.require(r.code == 0 && s <= 1e-4, "verify l1 --steps 2000 beta 0.5: exit " + std::to_string(r.code) + ", " + fmt(s));
  }
  {
    const auto r = cli_run({"verify", "--beta", "0.7", "--method", "pc"});
    const double s = json::parse(r.out)["sup_norm"].get<double>();
    o.require(r.code == 0 && s <= 1e-5, "verify pc beta 0.7: exit " + std::to_string(r.code) + ", " + fmt(s));
  }
  {
    const auto r = cli_run({"radius", "--beta", "1", "--m", "1"});
    const double rg = json::parse(r.out)["r_guaranteed"].get<double>();
    o.require(r.code == 0 && std::abs(rg - 2.4495) < 1e-4, "radius --beta 1 --m 1: r_guaranteed " + fmt(rg));
  }
  {
    const auto r = cli_run({"radius", "--beta", "0.05"});
    o.require(r.code == 0 && json::parse(r.out)["r_formula_ii"].is_null(), "radius --beta 0.05: r_formula_ii null");
  }
  {
    const auto r = cli_run({"radius", "--beta", "1", "--m", "2"});
    const double rg = json::parse(r.out)["r_guaranteed"].get<double>();
    o.require(r.code == 0 && std::abs(rg - 4.899) < 1e-3, "radius --beta 1 --m 2: r_guaranteed " + fmt(rg));
  }
  {
    std::size_t mismatches = 0, total = 0;
    for (double b : kBetaGrid) {
      for (const char* m : {"1", "2.5"}) {
        const auto r = cli_run({"coeffs", "--beta", io::format_double(b), "--m", m, "-n", "200", "--format", "json"});
        const auto back = io::sequence_from_json(json::parse(r.out));
        const auto ref = build_sequence(b, std::stod(m), 200);
        for (std::size_t k = 0; k < ref.n_terms(); ++k, ++total) mismatches += back.g(k) != ref.g(k);
      }
    }
    o.require(mismatches == 0, "JSON round trip: " + std::to_string(total - mismatches) + "/" + std::to_string(total) +
                                   " coefficients bit-identical");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                               criterion6, criterion7, criterion8, criterion9, criterion10};
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  if (only < 0 || only > 10) {
    std::fprintf(stderr, "criterion must be 1..10\n");
    return 2;
  }
  bool all = true;
  for (int c = 1; c <= 10; ++c) {
    if (only != 0 && c != only) continue;
    const auto o = criteria[c - 1]();
    all = all && o.pass;
    std::printf("criterion %d: %s\n%s", c, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
