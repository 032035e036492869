#include "felog/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

#include "felog/errors.hpp"
#include "felog/simd/kernels.hpp"
#include "felog/specfun.hpp"

namespace felog {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kRatioWindow = 5;
// Ratios this close together are already converged; a 1/k fit would only
// amplify their rounding noise.
constexpr double kConvergedSpread = 64 * std::numeric_limits<double>::epsilon();
constexpr double kSeriesTarget = 1e-17;
constexpr std::size_t kExtendCap = 16384;

double horner1(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

struct SeriesSolution::Cache {
  std::once_flag once;
  RadiusReport report;
};

double radius_formula_i(double b, double m) {
  const double g = specfun::kEulerGamma;
  return m * std::pow(2.0, b) * std::exp(-b) * std::pow((3 * b + 1) / (2 * b + 1), 2 * b + 0.5) *
         std::pow(3 * b + 1, b + (0.5 - g));
}

std::optional<double> radius_formula_ii(double b, double m) {
  const double g = specfun::kEulerGamma;
  if (!(b > g - 0.5)) return std::nullopt;
  return m * 2.0 / (std::exp(2 * b) * std::sqrt(b + 1)) *
         std::pow((3 * b + 1) / (2 * b + 1), 2 * b + 0.5) * std::pow(3 * b + 1, -b + g - 0.5);
}

double guaranteed_radius(double beta, double m) {
  return std::pow(m * m / majorant_base(beta), 1.0 / (2.0 * beta));
}

std::optional<double> empirical_radius(const BetaEulerSequence& seq) {
  std::vector<double> odd;
  for (std::size_t k = 1; k < seq.n_terms(); k += 2) {
    const double v = std::abs(seq.g(k));
    if (v == 0.0 || !std::isfinite(v)) break;
    odd.push_back(v);
  }
  if (odd.size() < kRatioWindow + 1) return std::nullopt;

  // R_j = |g_{2j+1}| / |g_{2j+3}| over the last five available j.
  const std::size_t first = odd.size() - 1 - kRatioWindow;
  std::vector<double> x, r;
  for (std::size_t j = first; j + 1 < odd.size(); ++j) {
    x.push_back(1.0 / (2.0 * static_cast<double>(j) + 2.0));
    r.push_back(odd[j] / odd[j + 1]);
  }
  const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
  double mean_r = 0.0, mean_x = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    mean_r += r[i];
    mean_x += x[i];
  }
  mean_r /= static_cast<double>(r.size());
  mean_x /= static_cast<double>(x.size());

  double limit = mean_r;
  if ((*hi - *lo) > kConvergedSpread * mean_r) {
    // Least-squares R_j = limit + slope * x_j.
    double sxx = 0.0, sxr = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      sxx += (x[i] - mean_x) * (x[i] - mean_x);
      sxr += (x[i] - mean_x) * (r[i] - mean_r);
    }
    limit = mean_r - (sxr / sxx) * mean_x;
  }
  if (!(limit > 0.0) || !std::isfinite(limit)) return std::nullopt;
  return std::pow(limit, 1.0 / (2.0 * seq.beta()));
}

RadiusReport radius_report(const BetaEulerSequence& seq) {
  if (seq.n_terms() < 20) throw DomainError("radius_report needs n_terms >= 20");
  const double b = seq.beta();
  const double m = seq.m();
  RadiusReport rep;
  rep.r_formula_i = radius_formula_i(b, m);
  rep.r_formula_ii = radius_formula_ii(b, m);
  rep.r_guaranteed = guaranteed_radius(b, m);
  rep.r_empirical = empirical_radius(seq);
  rep.discrepancy_i = std::abs(radius_formula_i(1.0, m) - kQuotedC1 * m);
  rep.discrepancy_ii = std::abs(*radius_formula_ii(1.0, m) - kQuotedC2 * m);
  return rep;
}

SeriesSolution::SeriesSolution(BetaEulerSequence seq)
    : seq_(std::move(seq)), q_majorant_(majorant_base(seq_.beta())), cache_(std::make_shared<Cache>()) {
  const auto g = seq_.g();
  for (std::size_t k = 0; k < g.size(); ++k) (k % 2 == 0 ? even_ : odd_).push_back(g[k]);
}

const RadiusReport& SeriesSolution::radius() const {
  std::call_once(cache_->once, [this] { cache_->report = radius_report(seq_); });
  return cache_->report;
}

double SeriesSolution::operating_radius() const {
  if (seq_.n_terms() < 20) return guaranteed_radius(beta(), m());
  const auto& rep = radius();
  return rep.r_empirical.value_or(rep.r_guaranteed);
}

EvalPoint SeriesSolution::eval(double t) const {
  if (!(t >= 0.0)) throw DomainError("eval: t must be nonnegative");
  EvalPoint p;
  p.t = t;
  p.in_domain = t < operating_radius();
  if (t == 0.0) {
    p.w = seq_.g(0);
    return p;
  }
  const double lt = std::log(t);
  const double x = std::exp(beta() * lt);
  const double tau = x * x;
  p.w = horner1(even_, tau) + x * horner1(odd_, tau);

  const std::size_t last_odd = 2 * odd_.size() - 1;
  const double last_term = std::abs(odd_.back()) * std::exp(beta() * static_cast<double>(last_odd) * lt);
  const double rho = q_majorant_ * tau / (m() * m());
  p.tail_bound = rho < 1.0 ? last_term * rho / (1.0 - rho) : kInf;
  return p;
}

std::vector<EvalPoint> SeriesSolution::eval(std::span<const double> t) const {
  const auto w = values(t);
  const double r_op = operating_radius();
  std::vector<EvalPoint> out(t.size());
  const std::size_t last_odd = 2 * odd_.size() - 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    out[i].t = t[i];
    out[i].w = w[i];
    out[i].in_domain = t[i] < r_op;
    if (t[i] > 0.0) {
      const double lt = std::log(t[i]);
      const double tau = std::exp(2.0 * beta() * lt);
      const double rho = q_majorant_ * tau / (m() * m());
      const double last_term = std::abs(odd_.back()) * std::exp(beta() * static_cast<double>(last_odd) * lt);
      out[i].tail_bound = rho < 1.0 ? last_term * rho / (1.0 - rho) : kInf;
    }
  }
  return out;
}

std::vector<double> SeriesSolution::values(std::span<const double> t) const {
  const std::size_t n = t.size();
  std::vector<double> x(n), tau(n), ev(n), od(n), out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(t[i] >= 0.0)) throw DomainError("eval: t must be nonnegative");
    x[i] = t[i] > 0.0 ? std::exp(beta() * std::log(t[i])) : 0.0;
    tau[i] = x[i] * x[i];
  }
  simd::horner(even_, tau, ev);
  simd::horner(odd_, tau, od);
  for (std::size_t i = 0; i < n; ++i) out[i] = ev[i] + x[i] * od[i];
  return out;
}

double SeriesSolution::derivative(double t) const {
  if (!(t > 0.0)) throw DomainError("derivative: t must be positive");
  const auto g = seq_.g();
  const double x = std::exp(beta() * std::log(t));
  double acc = 0.0;
  for (std::size_t k = g.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * g[k];
  // acc = sum_{k>=1} k g_k x^{k-1}
  return beta() * acc * x / t;
}

std::vector<double> SeriesSolution::partial_sums(double t) const {
  if (!(t >= 0.0)) throw DomainError("partial_sums: t must be nonnegative");
  const auto g = seq_.g();
  std::vector<double> s(g.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double term = k == 0 ? g[0] : (t == 0.0 ? 0.0 : g[k] * std::exp(beta() * static_cast<double>(k) * std::log(t)));
    acc += term;
    s[k] = acc;
  }
  return s;
}

SeriesSolution extend_for(const SeriesSolution& sol, double t_max) {
  const double r = sol.operating_radius();
  if (!(t_max >= 0.0) || !(t_max < r)) {
    throw DomainError("extend_for: t_max must lie inside the convergence radius");
  }
  std::size_t n = sol.seq().n_terms();
  if (t_max > 0.0) {
    const double per_term = sol.beta() * std::log(t_max / r);
    const double need = std::ceil(std::log(kSeriesTarget) / per_term) + 4.0;
    n = std::max(n, static_cast<std::size_t>(std::min(need, static_cast<double>(kExtendCap))));
  }
  if (n == sol.seq().n_terms()) return sol;
  return SeriesSolution(build_sequence(sol.beta(), sol.m(), n));
}

double remark_radius(double b) { return std::pow(2.0, 2 * b - 1) * (1.0 + 2 * b * b / (2 * b + 1)); }

double remark_pole(double b) { return std::pow(2.0, 2 * b - 1) * (1.0 + 2 * b * b / (3 * b + 1)); }

double remark_bound(double b, double t) {
  if (!(b > 0.5 && b <= 1.0)) throw DomainError("remark_bound: beta must lie in (1/2,1]");
  const double limit = std::min(remark_radius(b), remark_pole(b));
  if (!(t >= 0.0) || !(t < limit)) {
    throw DomainError("remark_bound: t must lie in [0, " + std::to_string(limit) + ")");
  }
  const double slope = 2.0 / std::pow(2.0, 2 * b) * (3 * b + 1) / (3 * b + 1 + 2 * b * b);
  return 0.5 + 1.0 / (4.0 * specfun::gamma_fn(b + 1.0)) / (1.0 - slope * t);
}

ClassicalComparison compare_classical(const SeriesSolution& sol, std::span<const double> t_grid) {
  if (sol.beta() != 1.0) throw DomainError("compare_classical needs beta = 1");
  const double m = sol.m();
  for (double t : t_grid) {
    if (!(t >= 0.0) || !(t < std::numbers::pi * m)) {
      throw DomainError("compare_classical: t must lie in [0, pi M)");
    }
  }
  ClassicalComparison out;
  out.t.assign(t_grid.begin(), t_grid.end());
  const auto w = sol.values(t_grid);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double exact = 1.0 / (1.0 + std::exp(-t_grid[i] / m));
    out.deviation.push_back(std::abs(w[i] - exact));
    out.max_deviation = std::max(out.max_deviation, out.deviation.back());
  }
  return out;
}

ClassicalComparison compare_classical(double m, std::span<const double> t_grid, std::size_t n_terms) {
  return compare_classical(SeriesSolution(build_sequence(1.0, m, n_terms)), t_grid);
}

}  // namespace felog
