#include "felog/simd/kernels.hpp"

namespace felog::simd::detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double reverse_dot_scalar(const double* w, const double* f, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[n - 1 - i] * f[i];
  return acc;
}

void horner_scalar(const double* c, std::size_t n_coeffs, const double* x, double* out,
                   std::size_t n_points) {
  for (std::size_t p = 0; p < n_points; ++p) {
    double acc = 0.0;
    for (std::size_t k = n_coeffs; k-- > 0;) acc = acc * x[p] + c[k];
    out[p] = acc;
  }
}

}  // namespace felog::simd::detail
