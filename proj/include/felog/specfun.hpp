#pragma once

// Special-function layer: log-Gamma, Gamma, Beta, exact Bernoulli numbers,
// Bernoulli and Euler polynomials, and the classical logistic coefficients.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace felog::specfun {

using Rational = boost::multiprecision::cpp_rational;

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

struct Constants {
  double gamma_em = kEulerGamma;
};

/// Triangular table of exact rationals; row r holds r+1 entries.
class RationalTriangle {
 public:
  RationalTriangle() = default;
  explicit RationalTriangle(std::vector<std::vector<Rational>> rows);

  /// Pascal triangle with rows 0..n.
  static RationalTriangle binomials(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  const std::vector<Rational>& row(std::size_t r) const { return rows_.at(r); }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// "p/q" in lowest terms ("p" when q == 1).
std::string to_string(const Rational& q);

/// Exact value of a finite double.
Rational exact(double x);

// ln Gamma(x) for x > 0. Internally evaluated in extended precision; relative
// error of exp(ln_gamma(x)) against Gamma(x) stays below 1e-13 on [1e-3, 170].
double ln_gamma(double x);

/// ln Gamma(a) - ln Gamma(b), with the difference formed in extended precision.
double ln_gamma_diff(double a, double b);

double gamma_fn(double x);

/// B(x, y) = exp(lnG(x) + lnG(y) - lnG(x + y)).
double beta_fn(double x, double y);

/// b_0..b_{n_max} (b_1 = -1/2 convention), exact.
std::vector<Rational> bernoulli_numbers(std::size_t n_max);

/// Coefficients of B_s(x) in ascending powers of x.
std::vector<Rational> bernoulli_poly_coeffs(std::size_t s);
/// Coefficients of E_k(x) in ascending powers of x, built from the
/// finite Bernoulli sum E_k(x) = 1/(k+1) sum_s C(k+1,s) 2^s B_s(x/2).
std::vector<Rational> euler_poly_coeffs(std::size_t k);

Rational bernoulli_poly(std::size_t s, const Rational& x);
double bernoulli_poly(std::size_t s, double x);
Rational euler_poly(std::size_t k, const Rational& x);
double euler_poly(std::size_t k, double x);

/// u_k = E_k(1)/2 for k = 0..n_max: Taylor coefficients (times k!) of
/// e^t / (1 + e^t).
std::vector<Rational> classical_series_coeffs_exact(std::size_t n_max);
std::vector<double> classical_series_coeffs(std::size_t n_max);

struct BoundFlags {
  /// B(x,y) <= 1/(xy); present when x, y > 1.
  std::optional<bool> beta_bound;
  /// 2^{x-1} <= Gamma(x+1) <= 1; present when 0 <= x <= 1.
  std::optional<bool> gamma_unit_bound;
  /// x^{x-gamma}/e^{x-1} < Gamma(x) < x^{x-1/2}/e^{x-1}; present when x > 1.
  std::optional<bool> gamma_bound;
};

/// Evaluates each Gamma/Beta inequality whose domain contains the arguments.
/// Throws DomainError if none applies.
BoundFlags bound_predicates(double x, std::optional<double> y = std::nullopt);

}  // namespace felog::specfun
