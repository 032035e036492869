#pragma once

// Quadrature for weakly singular integrands.

#include <functional>
#include <span>

namespace felog::quad {

/// Double-exponential (tanh-sinh) rule on (0, 1). The integrand receives
/// both z and 1 - z, each computed without cancellation, so endpoint
/// singularities of the form z^a (1-z)^b with a, b > -1 are resolved.
double tanh_sinh_unit(const std::function<double(double z, double one_minus_z)>& f,
                      double rel_tol = 1e-15);

/// Integral over [0, nodes.back()] of s^p * phi(s) for p > -1, with phi
/// piecewise linear through (nodes[i], phi[i]) and the power moments of
/// every cell taken exactly. nodes[0] must be 0.
double product_trapezoid_power(double p, std::span<const double> nodes, std::span<const double> phi);

}  // namespace felog::quad
