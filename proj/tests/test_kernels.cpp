#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "maxsplines/kernels.hpp"

using namespace maxsplines;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = normal(rng);
  return v;
}

double abs_scale(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] * b[i]);
  return s;
}

}  // namespace

TEST_CASE("scalar and dispatched kernels agree on random inputs") {
  std::mt19937_64 rng(101);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 257u, 1000u}) {
    const auto a = random_vec(rng, n);
    const auto b = random_vec(rng, n);
    const auto w = random_vec(rng, n);

    const double tol = 64.0 * 1e-16 * abs_scale(a, b);
    CHECK(std::abs(kernels::dot(a.data(), b.data(), n) -
                   kernels::scalar::dot(a.data(), b.data(), n)) <= tol);
    CHECK(std::abs(kernels::dot3(w.data(), a.data(), b.data(), n) -
                   kernels::scalar::dot3(w.data(), a.data(), b.data(), n)) <=
          8.0 * tol);
    CHECK(std::abs(kernels::sum(a.data(), n) -
                   kernels::scalar::sum(a.data(), n)) <= tol);

    auto y1 = b, y2 = b;
    kernels::axpy(0.37, a.data(), y1.data(), n);
    kernels::scalar::axpy(0.37, a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));
    }
  }
}

#ifdef MAXSPLINES_HAVE_AVX2
TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!kernels::avx2_supported()) return;
  std::mt19937_64 rng(202);
  for (std::size_t n : {1u, 3u, 4u, 6u, 9u, 31u, 128u, 1001u}) {
    const auto a = random_vec(rng, n);
    const auto b = random_vec(rng, n);
    const auto w = random_vec(rng, n);
    const double tol = 64.0 * 1e-16 * abs_scale(a, b);

    CHECK(std::abs(kernels::avx2::dot(a.data(), b.data(), n) -
                   kernels::scalar::dot(a.data(), b.data(), n)) <= tol);
    CHECK(std::abs(kernels::avx2::dot3(w.data(), a.data(), b.data(), n) -
                   kernels::scalar::dot3(w.data(), a.data(), b.data(), n)) <=
          8.0 * tol);
    CHECK(std::abs(kernels::avx2::sum(a.data(), n) -
                   kernels::scalar::sum(a.data(), n)) <= tol);

    auto x1 = a, y1 = b, x2 = a, y2 = b;
    const double c = std::cos(0.3), s = std::sin(0.3);
    kernels::avx2::rot(x1.data(), y1.data(), c, s, n);
    kernels::scalar::rot(x2.data(), y2.data(), c, s, n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(x1[i] == doctest::Approx(x2[i]).epsilon(1e-14));
      CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));
    }
  }
}
#endif

TEST_CASE("rot preserves two-norms for unit (c,s)") {
  std::mt19937_64 rng(303);
  const std::size_t n = 129;
  auto x = random_vec(rng, n);
  auto y = random_vec(rng, n);
  double before = kernels::dot(x.data(), x.data(), n) +
                  kernels::dot(y.data(), y.data(), n);
  const double c = std::cos(1.1), s = std::sin(1.1);
  kernels::rot(x.data(), y.data(), c, s, n);
  double after = kernels::dot(x.data(), x.data(), n) +
                 kernels::dot(y.data(), y.data(), n);
  CHECK(after == doctest::Approx(before).epsilon(1e-13));
}

TEST_CASE("backend reporting") {
  const kernels::Backend b = kernels::active_backend();
  CHECK((b == kernels::Backend::scalar || b == kernels::Backend::avx2));
  CHECK(kernels::backend_name(b) != nullptr);
}
