#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation; wider variants are selected once at runtime from the
// host CPU's capabilities and must agree with the reference to rounding.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace felog::simd {

/// sum_i a[i] * b[i]
using DotFn = double (*)(const double* a, const double* b, std::size_t n);
/// sum_{i<n} w[n-1-i] * f[i]  (history convolution, weights indexed by lag)
using ReverseDotFn = double (*)(const double* w, const double* f, std::size_t n);
/// out[i] = sum_k c[k] * x[i]^k, Horner per point, vectorised across points
using HornerFn = void (*)(const double* c, std::size_t n_coeffs, const double* x, double* out,
                          std::size_t n_points);

struct KernelTable {
  std::string_view name;
  DotFn dot;
  ReverseDotFn reverse_dot;
  HornerFn horner;
};

const KernelTable& scalar_kernels();
/// Present only when compiled in and supported by the running CPU.
std::optional<KernelTable> avx2_kernels();

/// Best table for this host. FELOG_SIMD=scalar in the environment forces
/// the reference kernels.
const KernelTable& active_kernels();

double dot(std::span<const double> a, std::span<const double> b);
double reverse_dot(std::span<const double> w, std::span<const double> f);
void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out);

namespace detail {
double dot_scalar(const double* a, const double* b, std::size_t n);
double reverse_dot_scalar(const double* w, const double* f, std::size_t n);
void horner_scalar(const double* c, std::size_t n_coeffs, const double* x, double* out,
                   std::size_t n_points);
#ifdef FELOG_HAVE_AVX2
double dot_avx2(const double* a, const double* b, std::size_t n);
double reverse_dot_avx2(const double* w, const double* f, std::size_t n);
void horner_avx2(const double* c, std::size_t n_coeffs, const double* x, double* out,
                 std::size_t n_points);
#endif
}  // namespace detail

}  // namespace felog::simd
