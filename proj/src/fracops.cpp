#include "felog/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "felog/errors.hpp"
#include "felog/quadrature.hpp"
#include "felog/simd/kernels.hpp"
#include "felog/specfun.hpp"

namespace felog {

namespace {

using specfun::gamma_fn;

constexpr double kPcTol = 1e-12;
constexpr int kPcMaxIter = 20;
constexpr std::size_t kPcMaxSteps = 2'000'000;
constexpr double kWindow = 0.8;

void check_open_beta(double beta, const char* who) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError(std::string(who) + ": beta must lie in (0,1)");
}

// (x+1)^p - x^p without cancellation.
double forward_diff_pow(double x, double p) {
  if (x == 0.0) return 1.0;
  return std::pow(x, p) * std::expm1(p * std::log1p(1.0 / x));
}

}  // namespace

std::string_view to_string(VerifyMethod method) {
  switch (method) {
    case VerifyMethod::termwise: return "termwise";
    case VerifyMethod::l1: return "l1";
    case VerifyMethod::integro: return "integro";
    case VerifyMethod::volterra: return "volterra";
    case VerifyMethod::predictor_corrector: return "pc";
  }
  return "unknown";
}

std::optional<VerifyMethod> parse_method(std::string_view name) {
  if (name == "termwise") return VerifyMethod::termwise;
  if (name == "l1") return VerifyMethod::l1;
  if (name == "integro") return VerifyMethod::integro;
  if (name == "volterra") return VerifyMethod::volterra;
  if (name == "pc" || name == "predictor_corrector") return VerifyMethod::predictor_corrector;
  return std::nullopt;
}

double default_tolerance(VerifyMethod method) {
  switch (method) {
    case VerifyMethod::termwise: return 1e-12;
    case VerifyMethod::l1: return 1e-4;
    case VerifyMethod::integro: return 1e-4;
    case VerifyMethod::volterra: return 1e-4;
    case VerifyMethod::predictor_corrector: return 1e-5;
  }
  return 0.0;
}

std::optional<Spacing> parse_spacing(std::string_view name) {
  if (name == "uniform") return Spacing::uniform;
  if (name == "graded") return Spacing::graded;
  return std::nullopt;
}

QuadratureGrid::QuadratureGrid(std::vector<double> nodes, double beta) : nodes_(std::move(nodes)), beta_(beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("QuadratureGrid: beta must lie in (0,1]");
  if (nodes_.size() < 3) throw DomainError("QuadratureGrid: need at least 3 nodes");
  if (nodes_[0] != 0.0) throw DomainError("QuadratureGrid: first node must be 0");
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i] > nodes_[i - 1])) throw DomainError("QuadratureGrid: nodes must increase strictly");
  }
}

QuadratureGrid QuadratureGrid::uniform(double t1, std::size_t n, double beta) {
  if (!(t1 > 0.0) || n < 2) throw DomainError("QuadratureGrid::uniform: need t1 > 0 and n >= 2");
  std::vector<double> nodes(n + 1);
  for (std::size_t j = 0; j <= n; ++j) nodes[j] = t1 * static_cast<double>(j) / static_cast<double>(n);
  return QuadratureGrid(std::move(nodes), beta);
}

QuadratureGrid QuadratureGrid::graded(double t1, std::size_t n, double beta) {
  if (!(t1 > 0.0) || n < 2) throw DomainError("QuadratureGrid::graded: need t1 > 0 and n >= 2");
  std::vector<double> nodes(n + 1);
  const double r = 2.0 / beta;
  for (std::size_t j = 0; j <= n; ++j) {
    nodes[j] = t1 * std::pow(static_cast<double>(j) / static_cast<double>(n), r);
  }
  nodes[n] = t1;
  return QuadratureGrid(std::move(nodes), beta);
}

std::vector<double> caputo_termwise(const BetaEulerSequence& seq) {
  const double b = seq.beta();
  std::vector<double> c(seq.n_terms() - 1);
  for (std::size_t k = 0; k + 1 < seq.n_terms(); ++k) {
    const double kd = static_cast<double>(k);
    c[k] = seq.g(k + 1) * std::exp(specfun::ln_gamma_diff(b * (kd + 1.0) + 1.0, b * kd + 1.0));
  }
  return c;
}

RlCoefficients rl_derivative_termwise(const BetaEulerSequence& seq) {
  RlCoefficients out;
  if (seq.beta() < 1.0) out.singular = seq.g(0) / gamma_fn(1.0 - seq.beta());
  out.regular = caputo_termwise(seq);
  return out;
}

double rl_gamma_ratio(double beta, std::size_t k) {
  if (k == 0) throw DomainError("rl_gamma_ratio: k must be positive");
  const double kd = static_cast<double>(k);
  return std::exp(specfun::ln_gamma_diff(beta * kd + 1.0, beta * kd + 1.0 - beta));
}

double caputo_l1(std::span<const double> w, const QuadratureGrid& grid, std::size_t idx) {
  if (w.size() != grid.size()) throw DomainError("caputo_l1: one sample per node required");
  if (idx < 1 || idx >= grid.size()) throw DomainError("caputo_l1: t_index out of range");
  const auto t = grid.nodes();
  const double b = grid.beta();
  if (b == 1.0) return (w[idx] - w[idx - 1]) / (t[idx] - t[idx - 1]);

  const double p = 1.0 - b;
  const double tn = t[idx];
  std::vector<double> slope(idx), weight(idx);
  double left = std::pow(tn - t[0], p);
  for (std::size_t j = 0; j < idx; ++j) {
    const double right = j + 1 == idx ? 0.0 : std::pow(tn - t[j + 1], p);
    weight[j] = left - right;
    slope[j] = (w[j + 1] - w[j]) / (t[j + 1] - t[j]);
    left = right;
  }
  return simd::dot(weight, slope) / gamma_fn(2.0 - b);
}

double caputo_l1(const std::function<double(double)>& w, const QuadratureGrid& grid, std::size_t idx) {
  std::vector<double> samples(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) samples[i] = w(grid.node(i));
  return caputo_l1(samples, grid, idx);
}

double fractional_integral(std::span<const double> f, const QuadratureGrid& grid, std::size_t idx, double order) {
  if (f.size() != grid.size()) throw DomainError("fractional_integral: one sample per node required");
  if (idx >= grid.size()) throw DomainError("fractional_integral: t_index out of range");
  if (!(order > 0.0)) throw DomainError("fractional_integral: order must be positive");
  if (idx == 0) return 0.0;
  const auto t = grid.nodes();
  const double tn = t[idx];
  std::vector<double> weight(idx + 1, 0.0);
  double d0 = tn - t[0];
  double p0 = std::pow(d0, order);
  for (std::size_t j = 0; j < idx; ++j) {
    const double d1 = tn - t[j + 1];
    const double p1 = j + 1 == idx ? 0.0 : std::pow(d1, order);
    const double i0 = (p0 - p1) / order;
    const double i1 = d0 * i0 - (p0 * d0 - p1 * d1) / (order + 1.0);
    const double wr = i1 / (t[j + 1] - t[j]);
    weight[j] += i0 - wr;
    weight[j + 1] += wr;
    d0 = d1;
    p0 = p1;
  }
  return simd::dot(weight, f.first(idx + 1)) / gamma_fn(order);
}

ResidualReport verify(const SeriesSolution& sol, VerifyMethod method, const GridSpec& spec,
                      VerifyOptions options) {
  ResidualReport rep;
  rep.method = method;
  const double m = sol.m();
  const double b = sol.beta();

  if (method == VerifyMethod::termwise) {
    const auto& seq = sol.seq();
    const auto c = caputo_termwise(seq);
    for (std::size_t k = 0; k < c.size(); ++k) {
      double conv = 0.0;
      for (std::size_t i = 0; i <= k; ++i) conv += seq.g(i) * seq.g(k - i);
      rep.t.push_back(static_cast<double>(k));
      rep.residual.push_back(std::abs(c[k] - (seq.g(k) - conv) / m));
    }
    rep.sup_norm = *std::max_element(rep.residual.begin(), rep.residual.end());
    return rep;
  }

  if (!(spec.t1 > 0.0) || !(spec.t0 >= 0.0) || !(spec.t0 < spec.t1)) {
    throw DomainError("verify: need 0 <= t0 < t1");
  }
  const double limit = kWindow * sol.operating_radius();
  if (spec.t1 > limit * (1.0 + 1e-12)) {
    throw DomainError("verify: grid extends past 0.8 x convergence radius (" + std::to_string(limit) + ")");
  }
  const SeriesSolution ext = extend_for(sol, spec.t1);

  if (method == VerifyMethod::predictor_corrector) {
    const double h = spec.t1 / static_cast<double>(spec.n);
    const auto pc = solve_pc(b, m, spec.t1, h);
    const auto w = ext.values(pc.t);
    for (std::size_t i = 0; i < pc.t.size(); ++i) {
      if (pc.t[i] < spec.t0) continue;
      rep.t.push_back(pc.t[i]);
      rep.residual.push_back(std::abs(w[i] - pc.u[i]));
    }
  } else {
    const QuadratureGrid grid = spec.spacing == Spacing::graded ? QuadratureGrid::graded(spec.t1, spec.n, b)
                                                                : QuadratureGrid::uniform(spec.t1, spec.n, b);
    const auto nodes = grid.nodes();
    const auto w = ext.values(nodes);
    std::vector<double> f(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) f[i] = w[i] - w[i] * w[i];
    const double start = std::max(spec.t0, options.t_floor);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      const double t = nodes[i];
      if (t < start) continue;
      double r = 0.0;
      switch (method) {
        case VerifyMethod::l1:
          r = caputo_l1(w, grid, i) - f[i] / m;
          break;
        case VerifyMethod::integro:
          r = ext.derivative(t) - fractional_integral(f, grid, i, b) / m;
          break;
        case VerifyMethod::volterra:
          r = w[i] - w[0] - fractional_integral(f, grid, i, b) / m;
          break;
        default:
          break;
      }
      rep.t.push_back(t);
      rep.residual.push_back(std::abs(r));
    }
  }
  if (rep.residual.empty()) throw DomainError("verify: no grid node lies in the evaluation window");
  rep.sup_norm = *std::max_element(rep.residual.begin(), rep.residual.end());
  return rep;
}

double sonine_convolution(double beta, double t) {
  check_open_beta(beta, "sonine_convolution");
  if (!(t > 0.0)) throw DomainError("sonine_convolution: t must be positive");
  // s = t z: t^{-b} t^{b-1} t int_0^1 z^{-b} (1-z)^{b-1} dz
  const double integral = quad::tanh_sinh_unit(
      [beta](double z, double zc) { return std::pow(z, -beta) * std::pow(zc, beta - 1.0); });
  const double scale = std::pow(t, -beta) * std::pow(t, beta - 1.0) * t;
  return scale * integral / (gamma_fn(1.0 - beta) * gamma_fn(beta));
}

double sonine_convolution_raw(double beta, double t, std::size_t n_nodes) {
  check_open_beta(beta, "sonine_convolution_raw");
  if (!(t > 0.0) || n_nodes < 4) throw DomainError("sonine_convolution_raw: need t > 0 and n >= 4");
  const std::size_t half = n_nodes / 2;
  std::vector<double> s(half + 1), phi(half + 1), psi(half + 1);
  for (std::size_t i = 0; i <= half; ++i) {
    s[i] = 0.5 * t * static_cast<double>(i) / static_cast<double>(half);
    phi[i] = std::pow(t - s[i], beta - 1.0);  // smooth on [0, t/2]
    psi[i] = std::pow(t - s[i], -beta);
  }
  // [0, t/2]: s^{-b} exact against phi; [t/2, t] mirrored: s'^{b-1} exact against psi.
  const double left = quad::product_trapezoid_power(-beta, s, phi);
  const double right = quad::product_trapezoid_power(beta - 1.0, s, psi);
  return (left + right) / (gamma_fn(1.0 - beta) * gamma_fn(beta));
}

double sonine_check(double beta, std::span<const double> t_grid) {
  double worst = 0.0;
  for (double t : t_grid) worst = std::max(worst, std::abs(sonine_convolution(beta, t) - 1.0));
  return worst;
}

double stable_levy_tail(double beta, double z) {
  check_open_beta(beta, "stable_levy_tail");
  if (!(z > 0.0)) throw DomainError("stable_levy_tail: z must be positive");
  return std::pow(z, -beta) / gamma_fn(1.0 - beta);
}

double levy_tail_laplace(double beta, double lambda, double z_max, std::size_t n_nodes) {
  check_open_beta(beta, "levy_tail_laplace");
  if (!(lambda > 0.0) || !(z_max > 0.0) || n_nodes < 2) {
    throw DomainError("levy_tail_laplace: need lambda > 0, z_max > 0, n >= 2");
  }
  std::vector<double> z(n_nodes + 1), phi(n_nodes + 1);
  for (std::size_t i = 0; i <= n_nodes; ++i) {
    z[i] = z_max * static_cast<double>(i) / static_cast<double>(n_nodes);
    phi[i] = std::exp(-lambda * z[i]);
  }
  return quad::product_trapezoid_power(-beta, z, phi) / gamma_fn(1.0 - beta);
}

PcSolution solve_pc(double beta, double m, double t_end, double h) {
  if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("solve_pc: beta must lie in (0,1]");
  if (!(m > 0.0)) throw DomainError("solve_pc: m must be positive");
  if (!(h > 0.0) || !(t_end > 0.0)) throw DomainError("solve_pc: need h > 0 and t_end > 0");
  const double steps = std::round(t_end / h);
  if (steps < 1.0 || steps > static_cast<double>(kPcMaxSteps)) {
    throw DomainError("solve_pc: step count must lie in [1, " + std::to_string(kPcMaxSteps) + "]");
  }
  const auto n_steps = static_cast<std::size_t>(steps);
  const double p = beta + 1.0;

  // Predictor weights b_j = (j+1)^b - j^b; corrector interior weights
  // a_j = (j+2)^p - 2 (j+1)^p + j^p.
  std::vector<double> bw(n_steps + 1), aw(n_steps);
  for (std::size_t j = 0; j <= n_steps; ++j) bw[j] = forward_diff_pow(static_cast<double>(j), beta);
  for (std::size_t j = 0; j < n_steps; ++j) {
    const double x = static_cast<double>(j);
    aw[j] = forward_diff_pow(x + 1.0, p) - forward_diff_pow(x, p);
  }

  const auto rhs = [m](double u) { return (u - u * u) / m; };
  const double u0 = 0.5;
  const double hb = std::pow(h, beta);
  const double c_pred = hb / gamma_fn(beta + 1.0);
  const double c_corr = hb / gamma_fn(beta + 2.0);
  const auto& kernels = simd::active_kernels();

  PcSolution sol;
  sol.t.resize(n_steps + 1);
  sol.u.resize(n_steps + 1);
  std::vector<double> f(n_steps + 1);
  sol.t[0] = 0.0;
  sol.u[0] = u0;
  f[0] = rhs(u0);
  for (std::size_t n = 0; n < n_steps; ++n) {
    const double pred = u0 + c_pred * kernels.reverse_dot(bw.data(), f.data(), n + 1);
    const long double nl = static_cast<long double>(n);
    const auto a0 = static_cast<double>(std::pow(nl, static_cast<long double>(p)) -
                                        (nl - beta) * std::pow(nl + 1.0L, static_cast<long double>(beta)));
    double hist = a0 * f[0];
    if (n >= 1) hist += kernels.reverse_dot(aw.data(), f.data() + 1, n);

    double u = pred;
    bool converged = false;
    for (int it = 0; it < kPcMaxIter; ++it) {
      const double next = u0 + c_corr * (hist + rhs(u));
      const bool small = std::abs(next - u) < kPcTol;
      u = next;
      if (small) {
        converged = true;
        break;
      }
    }
    if (!converged || !std::isfinite(u)) {
      throw NumericError("solve_pc: corrector did not converge at step " + std::to_string(n + 1));
    }
    sol.t[n + 1] = static_cast<double>(n + 1) * h;
    sol.u[n + 1] = u;
    f[n + 1] = rhs(u);
  }
  return sol;
}

}  // namespace felog
