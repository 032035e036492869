#include "felog/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "felog/errors.hpp"

namespace felog::quad {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Keeps exp(2 s) finite: s = (pi/2) sinh(5.5) ~ 192.
constexpr double kUMax = 5.5;
constexpr int kMaxLevel = 12;

double ts_term(const std::function<double(double, double)>& f, double u) {
  const double s = kHalfPi * std::sinh(u);
  const double z = 1.0 / (1.0 + std::exp(-2.0 * s));
  const double zc = 1.0 / (1.0 + std::exp(2.0 * s));
  if (z == 0.0 || zc == 0.0) return 0.0;
  const double ch = std::cosh(s);
  const double weight = kHalfPi * std::cosh(u) / (2.0 * ch * ch);
  return weight * f(z, zc);
}

}  // namespace

double tanh_sinh_unit(const std::function<double(double, double)>& f, double rel_tol) {
  double h = 0.5;
  double sum = ts_term(f, 0.0);
  for (double u = h; u <= kUMax; u += h) sum += ts_term(f, u) + ts_term(f, -u);
  double estimate = h * sum;
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    // New nodes are the odd multiples of h.
    double fresh = 0.0;
    for (double u = h; u <= kUMax; u += 2.0 * h) fresh += ts_term(f, u) + ts_term(f, -u);
    sum += fresh;
    const double next = h * sum;
    const bool done = std::abs(next - estimate) <= rel_tol * std::abs(next);
    estimate = next;
    if (done && level >= 3) return estimate;
  }
  return estimate;
}

double product_trapezoid_power(double p, std::span<const double> nodes, std::span<const double> phi) {
  if (!(p > -1.0)) throw DomainError("product_trapezoid_power: exponent must exceed -1");
  if (nodes.size() < 2 || nodes.size() != phi.size() || nodes[0] != 0.0) {
    throw DomainError("product_trapezoid_power: need >= 2 nodes starting at 0");
  }
  // Cell [a, b]: m0 = int s^p ds, m1 = int s^p (s - a) ds.
  const double p1 = p + 1.0;
  const double p2 = p + 2.0;
  double acc = 0.0;
  double a = nodes[0];
  double pa1 = 0.0;  // a^{p+1}
  double pa2 = 0.0;  // a^{p+2}
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double b = nodes[i + 1];
    const double pb1 = std::pow(b, p1);
    const double pb2 = pb1 * b;
    const double m0 = (pb1 - pa1) / p1;
    const double m1 = (pb2 - pa2) / p2 - a * m0;
    const double wr = m1 / (b - a);
    acc += (m0 - wr) * phi[i] + wr * phi[i + 1];
    a = b;
    pa1 = pb1;
    pa2 = pb2;
  }
  return acc;
}

}  // namespace felog::quad
