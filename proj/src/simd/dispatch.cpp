// Runtime selection only; no intrinsics in this file.

#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "felog/simd/kernels.hpp"

namespace felog::simd {

namespace {

bool cpu_has_avx2_fma() {
#if defined(FELOG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() {
  const char* env = std::getenv("FELOG_SIMD");
  const bool force_scalar = env != nullptr && std::string_view(env) == "scalar";
  if (!force_scalar) {
    static const std::optional<KernelTable> avx2 = avx2_kernels();
    if (avx2) return *avx2;
  }
  return scalar_kernels();
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &detail::dot_scalar, &detail::reverse_dot_scalar,
                                 &detail::horner_scalar};
  return table;
}

std::optional<KernelTable> avx2_kernels() {
#ifdef FELOG_HAVE_AVX2
  if (cpu_has_avx2_fma()) {
    return KernelTable{"avx2", &detail::dot_avx2, &detail::reverse_dot_avx2, &detail::horner_avx2};
  }
#endif
  return std::nullopt;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  return active_kernels().dot(a.data(), b.data(), a.size());
}

double reverse_dot(std::span<const double> w, std::span<const double> f) {
  if (w.size() != f.size()) throw std::invalid_argument("reverse_dot: length mismatch");
  return active_kernels().reverse_dot(w.data(), f.data(), w.size());
}

void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
  if (x.size() != out.size()) throw std::invalid_argument("horner: length mismatch");
  active_kernels().horner(coeffs.data(), coeffs.size(), x.data(), out.data(), x.size());
}

}  // namespace felog::simd
