#include "felog/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "felog/errors.hpp"

namespace felog::specfun {

namespace {

using boost::multiprecision::cpp_int;

// Lanczos approximation, g = 607/128, 15 terms (Godfrey).
constexpr long double kLanczosG = 607.0L / 128.0L;
constexpr std::array<long double, 15> kLanczos = {
    0.99999999999999709182L,     57.156235665862923517L,     -59.597960355475491248L,
    14.136097974741747174L,      -0.49191381609762019978L,   0.33994649984811888699e-4L,
    0.46523628927048575665e-4L,  -0.98374475304879564677e-4L, 0.15808870322491248884e-3L,
    -0.21026444172410488319e-3L, 0.21743961811521264320e-3L, -0.16431810653676389022e-3L,
    0.84418223983852743293e-4L,  -0.26190838401581408670e-4L, 0.36899182659531622704e-5L,
};

constexpr long double kHalfLog2Pi = 0.91893853320467274178032973640562L;

long double ln_gamma_ld(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("ln_gamma: argument must be positive and finite");
  }
  // Integers up to 171: log of the exact-as-possible factorial.
  if (x <= 171.0 && x == std::floor(x)) {
    long double f = 1.0L;
    for (int i = 2; i < static_cast<int>(x); ++i) f *= static_cast<long double>(i);
    return std::log(f);
  }
  long double shift = 0.0L;
  long double z = x;
  if (z < 0.5L) {
    shift = std::log(z);
    z += 1.0L;
  }
  z -= 1.0L;
  long double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<long double>(i));
  }
  const long double t = z + kLanczosG + 0.5L;
  return kHalfLog2Pi + (z + 0.5L) * std::log(t) - t + std::log(sum) - shift;
}

Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

RationalTriangle::RationalTriangle(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != r + 1) {
      throw DomainError("RationalTriangle: row " + std::to_string(r) + " must hold " +
                        std::to_string(r + 1) + " entries");
    }
  }
}

RationalTriangle RationalTriangle::binomials(std::size_t n) {
  std::vector<std::vector<Rational>> rows(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    rows[r].resize(r + 1);
    rows[r][0] = rows[r][r] = 1;
    for (std::size_t c = 1; c < r; ++c) rows[r][c] = rows[r - 1][c - 1] + rows[r - 1][c];
  }
  return RationalTriangle(std::move(rows));
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

Rational exact(double x) {
  if (!std::isfinite(x)) throw DomainError("exact: non-finite value");
  if (x == 0.0) return Rational(0);
  int e = 0;
  const double m = std::frexp(x, &e);  // x = m * 2^e, 0.5 <= |m| < 1
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  cpp_int num = mant;
  cpp_int den = 1;
  if (e >= 0) {
    num <<= e;
  } else {
    den <<= -e;
  }
  return Rational(num, den);
}

double ln_gamma(double x) { return static_cast<double>(ln_gamma_ld(x)); }

double ln_gamma_diff(double a, double b) {
  return static_cast<double>(ln_gamma_ld(a) - ln_gamma_ld(b));
}

double gamma_fn(double x) { return static_cast<double>(std::exp(ln_gamma_ld(x))); }

double beta_fn(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("beta_fn: arguments must be positive");
  return static_cast<double>(std::exp(ln_gamma_ld(x) + ln_gamma_ld(y) - ln_gamma_ld(x + y)));
}

std::vector<Rational> bernoulli_numbers(std::size_t n_max) {
  // sum_{j=0}^{s} C(s+1, j) b_j = 0 for s >= 1.
  const auto binom = RationalTriangle::binomials(n_max + 1);
  std::vector<Rational> b(n_max + 1);
  b[0] = 1;
  for (std::size_t s = 1; s <= n_max; ++s) {
    Rational acc = 0;
    for (std::size_t j = 0; j < s; ++j) acc += binom.at(s + 1, j) * b[j];
    b[s] = -acc / Rational(static_cast<long long>(s + 1));
  }
  return b;
}

std::vector<Rational> bernoulli_poly_coeffs(std::size_t s) {
  const auto b = bernoulli_numbers(s);
  const auto binom = RationalTriangle::binomials(s);
  std::vector<Rational> c(s + 1);
  for (std::size_t j = 0; j <= s; ++j) c[j] = binom.at(s, j) * b[s - j];
  return c;
}

std::vector<Rational> euler_poly_coeffs(std::size_t k) {
  const auto b = bernoulli_numbers(k);
  const auto binom = RationalTriangle::binomials(k + 1);
  std::vector<Rational> c(k + 1, Rational(0));
  for (std::size_t s = 0; s <= k; ++s) {
    // C(k+1, s) 2^s B_s(x/2), with B_s(x/2) = sum_j C(s,j) b_{s-j} 2^{-j} x^j
    const Rational outer = binom.at(k + 1, s) * Rational(cpp_int(1) << s);
    for (std::size_t j = 0; j <= s; ++j) {
      c[j] += outer * binom.at(s, j) * b[s - j] / Rational(cpp_int(1) << j);
    }
  }
  for (auto& v : c) v /= Rational(static_cast<long long>(k + 1));
  return c;
}

Rational bernoulli_poly(std::size_t s, const Rational& x) { return horner(bernoulli_poly_coeffs(s), x); }

double bernoulli_poly(std::size_t s, double x) {
  return bernoulli_poly(s, exact(x)).convert_to<double>();
}

Rational euler_poly(std::size_t k, const Rational& x) { return horner(euler_poly_coeffs(k), x); }

double euler_poly(std::size_t k, double x) { return euler_poly(k, exact(x)).convert_to<double>(); }

std::vector<Rational> classical_series_coeffs_exact(std::size_t n_max) {
  std::vector<Rational> u(n_max + 1);
  for (std::size_t k = 0; k <= n_max; ++k) u[k] = euler_poly(k, Rational(1)) / 2;
  return u;
}

std::vector<double> classical_series_coeffs(std::size_t n_max) {
  const auto exact_u = classical_series_coeffs_exact(n_max);
  std::vector<double> u;
  u.reserve(exact_u.size());
  for (const auto& v : exact_u) u.push_back(v.convert_to<double>());
  return u;
}

BoundFlags bound_predicates(double x, std::optional<double> y) {
  BoundFlags flags;
  if (y && x > 1.0 && *y > 1.0) {
    const double ln_b = ln_gamma_diff(x, x + *y) + ln_gamma(*y);
    flags.beta_bound = ln_b <= -std::log(x * *y);
  }
  if (x >= 0.0 && x <= 1.0) {
    const double lg = ln_gamma(x + 1.0);
    flags.gamma_unit_bound = (x - 1.0) * std::log(2.0) <= lg && lg <= 0.0;
  }
  if (x > 1.0) {
    const double lg = ln_gamma(x);
    const double lx = std::log(x);
    const double lower = (x - kEulerGamma) * lx - (x - 1.0);
    const double upper = (x - 0.5) * lx - (x - 1.0);
    flags.gamma_bound = lower < lg && lg < upper;
  }
  if (!flags.beta_bound && !flags.gamma_unit_bound && !flags.gamma_bound) {
    throw DomainError("bound_predicates: arguments lie outside every bound's domain");
  }
  return flags;
}

}  // namespace felog::specfun
