// Built with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "felog/simd/kernels.hpp"

namespace felog::simd::detail {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double reverse_dot_avx2(const double* w, const double* f, std::size_t n) {
  // f[i..i+3] pairs with w[n-4-i..n-1-i] read backwards.
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d w0 = _mm256_permute4x64_pd(_mm256_loadu_pd(w + n - 4 - i), 0x1B);
    const __m256d w1 = _mm256_permute4x64_pd(_mm256_loadu_pd(w + n - 8 - i), 0x1B);
    acc0 = _mm256_fmadd_pd(w0, _mm256_loadu_pd(f + i), acc0);
    acc1 = _mm256_fmadd_pd(w1, _mm256_loadu_pd(f + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d w0 = _mm256_permute4x64_pd(_mm256_loadu_pd(w + n - 4 - i), 0x1B);
    acc0 = _mm256_fmadd_pd(w0, _mm256_loadu_pd(f + i), acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += w[n - 1 - i] * f[i];
  return acc;
}

void horner_avx2(const double* c, std::size_t n_coeffs, const double* x, double* out,
                 std::size_t n_points) {
  std::size_t p = 0;
  for (; p + 4 <= n_points; p += 4) {
    const __m256d xv = _mm256_loadu_pd(x + p);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = n_coeffs; k-- > 0;) {
      acc = _mm256_fmadd_pd(acc, xv, _mm256_set1_pd(c[k]));
    }
    _mm256_storeu_pd(out + p, acc);
  }
  if (p < n_points) horner_scalar(c, n_coeffs, x + p, out + p, n_points - p);
}

}  // namespace felog::simd::detail
