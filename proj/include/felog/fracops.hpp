#pragma once

// Independent fractional-calculus checks of the series solution: term-wise
// Caputo / Riemann-Liouville algebra, L1 product quadrature, the
// integro-differential and Volterra forms, the Sonine kernel pair, the
// stable-symbol Levy tail, and a fractional Adams predictor-corrector.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "felog/euler_beta.hpp"
#include "felog/series.hpp"

namespace felog {

enum class VerifyMethod { termwise, l1, integro, volterra, predictor_corrector };

std::string_view to_string(VerifyMethod method);
/// Accepts the enum names plus "pc".
std::optional<VerifyMethod> parse_method(std::string_view name);

/// Pass/fail threshold used by the verify command unless overridden.
double default_tolerance(VerifyMethod method);

enum class Spacing { uniform, graded };
std::optional<Spacing> parse_spacing(std::string_view name);

class QuadratureGrid {
 public:
  /// Nodes must start at 0, increase strictly, and number at least 3.
  QuadratureGrid(std::vector<double> nodes, double beta);

  static QuadratureGrid uniform(double t1, std::size_t n, double beta);
  /// t_j = t1 (j/n)^{2/beta}: clusters nodes at the t^beta singularity.
  static QuadratureGrid graded(double t1, std::size_t n, double beta);

  std::span<const double> nodes() const { return nodes_; }
  double node(std::size_t i) const { return nodes_.at(i); }
  std::size_t size() const { return nodes_.size(); }
  double beta() const { return beta_; }

 private:
  std::vector<double> nodes_;
  double beta_;
};

struct GridSpec {
  double t0 = 0.0;  // residuals are reported for nodes with t >= t0
  double t1 = 1.0;
  std::size_t n = 200;
  Spacing spacing = Spacing::graded;
};

struct ResidualReport {
  VerifyMethod method = VerifyMethod::termwise;
  std::vector<double> t;  // coefficient index k for the termwise method
  std::vector<double> residual;
  double sup_norm = 0.0;
};

/// Coefficient of t^{beta k} in ^*D^beta w:
///   g_{k+1} Gamma(beta(k+1)+1) / Gamma(beta k+1),  k = 0..n_terms-2.
std::vector<double> caputo_termwise(const BetaEulerSequence& seq);

struct RlCoefficients {
  /// g_0 / Gamma(1-beta), multiplying t^{-beta}; absent when beta = 1.
  std::optional<double> singular;
  /// Coefficients of t^{beta k}; identical to the Caputo series.
  std::vector<double> regular;
};

RlCoefficients rl_derivative_termwise(const BetaEulerSequence& seq);

/// Gamma(beta k + 1) / Gamma(beta k + 1 - beta): the factor taking
/// t^{beta k}/... to t^{beta (k-1)} under D^beta.
double rl_gamma_ratio(double beta, std::size_t k);

/// L1 approximation of the Caputo derivative at grid node t_index from
/// samples at every node (piecewise-linear w, exact kernel moments).
double caputo_l1(std::span<const double> w_nodes, const QuadratureGrid& grid, std::size_t t_index);
double caputo_l1(const std::function<double(double)>& w, const QuadratureGrid& grid, std::size_t t_index);

/// (1/Gamma(order)) int_0^{t_index} f(s) (t - s)^{order - 1} ds, product
/// trapezoid (piecewise-linear f, exact kernel moments).
double fractional_integral(std::span<const double> f_nodes, const QuadratureGrid& grid,
                           std::size_t t_index, double order);

struct VerifyOptions {
  /// Nodes below this time are excluded from l1 / integro / volterra
  /// residuals; the first cells of any product rule see the t^beta cusp.
  double t_floor = 0.05;
};

/// Residual of ^*D^beta w = (w - w^2)/M for the chosen method.
///   termwise:  |c_k - (g_k - sum g_i g_{k-i}) / M| per coefficient.
///   l1:        |L1(w)(t) - (w - w^2)/M|.
///   integro:   |w'(t) - (1/(M Gamma(beta))) int_0^t (w - w^2)(s) (t-s)^{beta-1} ds|.
///   volterra:  |w(t) - w(0) - (1/(M Gamma(beta))) int_0^t (w - w^2)(s) (t-s)^{beta-1} ds|.
///   predictor_corrector: |w(t) - u(t)| with u from solve_pc at h = t1 / n.
/// The grid must stay inside 0.8 times the operating radius.
ResidualReport verify(const SeriesSolution& sol, VerifyMethod method, const GridSpec& grid,
                      VerifyOptions options = {});

/// (kappa * kappa_bar)(t) with kappa = t^{-b}/Gamma(1-b), kappa_bar =
/// t^{b-1}/Gamma(b), via s = t z and tanh-sinh quadrature of the Beta integrand.
double sonine_convolution(double beta, double t);
/// Same convolution by product quadrature on n uniform nodes in s, no
/// substitution: split at t/2 and integrate each singular factor exactly.
double sonine_convolution_raw(double beta, double t, std::size_t n_nodes);
/// max over t of |sonine_convolution(beta, t) - 1|.
double sonine_check(double beta, std::span<const double> t_grid);

/// Pi((z, inf)) = z^{-b} / Gamma(1-b) for the symbol lambda^b.
double stable_levy_tail(double beta, double z);
/// int_0^{z_max} e^{-lambda z} Pi((z, inf)) dz by product quadrature; tends
/// to lambda^{b-1}.
double levy_tail_laplace(double beta, double lambda, double z_max, std::size_t n_nodes);

struct PcSolution {
  std::vector<double> t;
  std::vector<double> u;
};

/// Fractional Adams-Bashforth-Moulton scheme for ^*D^b u = (u - u^2)/M,
/// u(0) = 1/2, uniform step h.
PcSolution solve_pc(double beta, double m, double t_end, double h);

}  // namespace felog
