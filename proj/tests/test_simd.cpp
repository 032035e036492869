#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "felog/simd/kernels.hpp"

using namespace felog::simd;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

double abs_dot(const std::vector<double>& a, const std::vector<double>& b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::abs(a[i] * b[i]);
  return s;
}

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("scalar reference semantics") {
  const double w[] = {1.0, 2.0, 3.0};
  const double f[] = {10.0, 20.0, 30.0};
  CHECK(scalar_kernels().dot(w, f, 3) == 140.0);
  CHECK(scalar_kernels().reverse_dot(w, f, 3) == 3.0 * 10 + 2.0 * 20 + 1.0 * 30);
  const double c[] = {1.0, 2.0, 3.0};
  const double x[] = {0.0, 1.0, 2.0};
  double out[3];
  scalar_kernels().horner(c, 3, x, out, 3);
  CHECK(out[0] == 1.0);
  CHECK(out[1] == 6.0);
  CHECK(out[2] == 17.0);
}

TEST_CASE("wide kernels match the reference") {
  const auto wide = avx2_kernels();
  if (!wide) {
    MESSAGE("no wide kernels on this host; skipped");
    return;
  }
  const auto& ref = scalar_kernels();
  std::mt19937_64 rng(20240917);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 63u, 64u, 1000u, 1001u}) {
    CAPTURE(n);
    const auto a = random_vec(rng, n);
    const auto b = random_vec(rng, n);
    const double tol = 4 * n * 1.2e-16 * abs_dot(a, b, n) + 1e-300;
    CHECK(std::abs(wide->dot(a.data(), b.data(), n) - ref.dot(a.data(), b.data(), n)) <= tol);
    std::vector<double> ar(a.rbegin(), a.rend());
    CHECK(std::abs(wide->reverse_dot(a.data(), b.data(), n) - ref.reverse_dot(a.data(), b.data(), n)) <=
          4 * n * 1.2e-16 * abs_dot(ar, b, n) + 1e-300);

    const auto c = random_vec(rng, 1 + n % 40);
    auto x = random_vec(rng, n);
    std::vector<double> o1(n), o2(n);
    wide->horner(c.data(), c.size(), x.data(), o1.data(), n);
    ref.horner(c.data(), c.size(), x.data(), o2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(o1[i] == doctest::Approx(o2[i]).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("span wrappers check sizes") {
  std::vector<double> a(4, 1.0), b(3, 1.0);
  CHECK_THROWS_AS(dot(a, b), std::invalid_argument);
  CHECK(dot(a, a) == 4.0);
}

}
