#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

#include "maxsplines/operators.hpp"
#include "maxsplines/symbols.hpp"
#include "support/oracles.hpp"

using namespace maxsplines;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("mass symbol closed forms") {
  const int n = 16;
  const double h = 2.0 / n;
  for (int p = 0; p <= 6; ++p) {
    const auto ms = mass_symbol(p, h, n);
    CHECK(ms[0] == doctest::Approx(h).epsilon(1e-14));
    for (double v : ms) CHECK(v > 0.0);
    // monotone in cos(theta_j)
    for (int j = 0; j + 1 <= n / 2; ++j) {
      CHECK(ms[j] >= ms[j + 1] - 1e-15);
    }
  }
  const auto m1 = mass_symbol(1, h, n);
  for (int j = 0; j < n; ++j) {
    const double want = h * (2.0 + std::cos(2.0 * kPi * j / n)) / 3.0;
    CHECK(m1[j] == doctest::Approx(want).epsilon(1e-14));
  }
}

TEST_CASE("direct DFT of the circulant matches the closed-form symbol") {
  const int n = 20;
  const double h = 2.0 / n;
  for (int p : {1, 3, 5}) {
    const SymbolSeq s = symbol_of(mass_circulant(p, h, n));
    const auto ms = mass_symbol(p, h, n);
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(s.values[j].imag()) <= 1e-13);
      CHECK(std::abs(s.values[j].real() - ms[j]) <= 1e-13);
    }
    // the symmetric stiffness circulant also has a real symbol
    const SymbolSeq ks = symbol_of(stiffness_circulant(p, h, n));
    const auto kk = stiffness_symbol(p, h, n, EConvention::matrix);
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(ks.values[j].imag()) <= 1e-13 / h);
      CHECK(std::abs(ks.values[j].real() - kk[j]) <= 1e-10);
    }
  }
}

TEST_CASE("stiffness symbol and the rank-one conventions") {
  const int n = 16;
  const double h = 2.0 / n;
  for (int p = 1; p <= 5; ++p) {
    const auto paper = stiffness_symbol(p, h, n, EConvention::paper);
    const auto matrix = stiffness_symbol(p, h, n, EConvention::matrix);
    CHECK(paper[0] == doctest::Approx(h).epsilon(1e-14));
    CHECK(matrix[0] == doctest::Approx(h * h * n).epsilon(1e-14));
    for (int j = 1; j < n; ++j) CHECK(paper[j] == matrix[j]);
  }
  const auto k1 = stiffness_symbol(1, h, n, EConvention::paper);
  for (int j = 1; j < n; ++j) {
    const double s = std::sin(kPi * j / n);
    CHECK(k1[j] == doctest::Approx(4.0 / h * s * s).epsilon(1e-13));
  }
}

TEST_CASE("diagonalization oracles at n = 16") {
  const int n = 16;
  const double h = 2.0 / n;
  for (int p : {1, 2, 4}) {
    CHECK(diagonalization_residual(
              fourier_conjugate(mass_circulant(p, h, n).to_dense()),
              mass_symbol(p, h, n)) <= 1e-12);
    CHECK(diagonalization_residual(
              fourier_conjugate(stiffness_circulant(p, h, n).to_dense()),
              stiffness_symbol(p, h, n, EConvention::matrix)) <= 1e-10);
  }
  CHECK(diagonalization_residual(
            fourier_conjugate(gradient_circulant(h, n).to_dense()),
            gradient_symbol(h, n)) <= 1e-12);
}

TEST_CASE("prolongation symbol endpoints") {
  for (int p = 0; p <= 6; ++p) {
    const ProlongationSymbol ps = prolongation_symbol(p, 8);
    CHECK(std::abs(ps.top[0] - 1.0) <= 1e-14);
    CHECK(std::abs(ps.bottom[0]) <= 1e-14);
  }
}

TEST_CASE("g polynomial recurrence") {
  const auto a1 = g_poly_coeffs(1);
  REQUIRE(a1.size() == 2);
  CHECK(a1[0] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(a1[1] == doctest::Approx(1.0 / 3).epsilon(1e-15));

  for (int p = 1; p <= 12; ++p) {
    const auto a = g_poly_coeffs(p);
    REQUIRE(static_cast<int>(a.size()) == p + 1);
    for (double v : a) CHECK(v > 0.0);
  }

  // h g_p(1 + cos theta_j) reproduces the mass symbol
  const int n = 32;
  const double h = 2.0 / n;
  for (int p : {1, 2, 5, 8}) {
    const auto a = g_poly_coeffs(p);
    const auto ms = mass_symbol(p, h, n);
    for (int j = 0; j < n; ++j) {
      const double c = 1.0 + std::cos(2.0 * kPi * j / n);
      double g = 0.0;
      for (int k = p; k >= 0; --k) g = g * c + a[k];
      CHECK(std::abs(h * g - ms[j]) <= 1e-12);
    }
  }
}

TEST_CASE("psi closed form") {
  for (int p = 1; p <= 12; ++p) {
    CHECK(psi(p, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  }
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uc(-0.99, 0.99);
  std::uniform_real_distribution<double> ux(0.01, 10.0);
  for (int t = 0; t < 100; ++t) {
    const double c = uc(rng);
    const double xi = ux(rng);
    for (int p : {1, 2, 5, 9}) {
      CHECK(psi(p, c, xi) ==
            doctest::Approx(psi(p, -c, 1.0 / xi)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(psi(2, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(psi(2, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("two-grid blocks") {
  for (EConvention conv : {EConvention::paper, EConvention::matrix}) {
    const TwoGridReport rep = two_grid_constant(3, 8, conv);
    // l = 0: diag(0, 1/4)
    const TwoGridBlock& b0 = rep.blocks[0];
    CHECK(std::abs(b0.t[0]) <= 1e-14);
    CHECK(std::abs(b0.t[1]) <= 1e-14);
    CHECK(std::abs(b0.t[2]) <= 1e-14);
    CHECK(std::abs(b0.t[3] - 0.25) <= 1e-13);
    CHECK(std::abs(b0.rho - 0.25) <= 1e-13);
    CHECK(rep.q <= 1.0 / std::sqrt(2.0) + 1e-12);
  }

  // rank-one structure and the closed-form cross-check for l >= 1
  for (int p : {1, 2, 4, 8}) {
    const int nc = 16;
    const TwoGridReport rep = two_grid_constant(p, nc, EConvention::matrix);
    const auto mm = mass_symbol(p - 1, 1.0 / nc, 2 * nc);
    for (int l = 1; l < nc; ++l) {
      const TwoGridBlock& b = rep.blocks[l];
      const auto sv = testsupport::singular_values_2x2(b.t);
      CHECK(sv[1] / sv[0] <= 1e-9);
      const double c = std::cos(kPi * l / nc);
      const double xi = mm[l + nc] / mm[l];
      CHECK(std::abs(b.rho - psi(p, c, xi)) <= 1e-10);
      CHECK(b.xi == doctest::Approx(xi).epsilon(1e-13));
    }
  }

  // degree one attains the bound exactly
  const TwoGridReport r1 = two_grid_constant(1, 8, EConvention::matrix);
  CHECK(r1.q == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(two_grid_constant(8, 8, EConvention::matrix),
                  std::invalid_argument);
}
