#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

#include "maxsplines/analysis.hpp"
#include "maxsplines/operators.hpp"

using namespace maxsplines;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("dense two-grid route") {
  // bound and agreement with the symbol route
  for (int p : {1, 2, 3, 5}) {
    for (int nc : {4, 8, 16}) {
      if (p >= nc || 2 * nc <= 2 * p + 1) continue;
      const double qd = two_grid_error_direct(p, nc);
      CHECK(qd <= 1.0 / std::sqrt(2.0) + 1e-10);
      const double qs = two_grid_constant(p, nc, EConvention::matrix).q;
      CHECK(std::abs(qd - qs) <= 1e-8);
    }
  }

  // the coarse-grid correction annihilates the range of P
  const int p = 3, nc = 8;
  const double hc = 2.0 / nc;
  const DenseMatrix pr = prolongation(p, nc);
  const DenseMatrix kf = stiffness_circulant(p, hc / 2, 2 * nc).to_dense();
  const DenseMatrix kc = matmul(transpose(pr), matmul(kf, pr));
  const DenseMatrix kc_l = cholesky(kc);
  const DenseMatrix sol =
      backward_solve_matrix(kc_l, forward_solve_matrix(kc_l,
                                                       matmul(transpose(pr), kf)));
  const DenseMatrix h = add(DenseMatrix::identity(2 * nc), matmul(pr, sol), -1.0);
  CHECK(max_abs(matmul(h, pr)) <= 1e-10);
}

TEST_CASE("rayleigh extremizers on the reduced space") {
  for (int p : {1, 2, 4, 8}) {
    for (int n : {16, 32}) {
      const SpaceSpec spec = SpaceSpec::reduced(p, n, 0, 1);
      const RayleighResult r = rayleigh_max(spec, 1);
      const double scaled = spec.h() * r.sqrt_lambda_max;
      CHECK(scaled <= 2.0 * std::sqrt(3.0) + 1e-9);
      if (2.0 * spec.h() * p < 1.0) {
        CHECK(scaled >= 1.0 / (2.0 * std::sqrt(2.0)) - 1e-9);
      }
      // the extremizer attains the reported Rayleigh quotient
      const CoefVector u{spec, r.extremizer};
      const double quot = spline_h1_seminorm(u) / spline_l2_norm(u);
      CHECK(quot == doctest::Approx(r.sqrt_lambda_max).epsilon(1e-9));
    }
  }

  // p = 1: no odd-derivative constraint applies, so reduced == full
  const SpaceSpec red1 = SpaceSpec::reduced(1, 16, 0, 1);
  const SpaceSpec full1 = SpaceSpec::full(1, 16, 0, 1);
  CHECK(rayleigh_max(red1, 1).sqrt_lambda_max ==
        doctest::Approx(rayleigh_max(full1, 1).sqrt_lambda_max).epsilon(1e-10));

  CHECK_THROWS_AS(rayleigh_max(SpaceSpec::full(2, 8, 0, 1), 3),
                  std::invalid_argument);
}

TEST_CASE("higher-order inverse inequality on the constrained space") {
  // |u|_{H^q} <= 2 sqrt(3) h^{-1} |u|_{H^{q-1}} on S~^(q) with q = 2
  for (int p : {3, 4, 5}) {
    const SpaceSpec spec = SpaceSpec::reduced_q(p, 16, 0, 1, 2);
    const RayleighResult r = rayleigh_max(spec, 2);
    CHECK(spec.h() * r.sqrt_lambda_max <= 2.0 * std::sqrt(3.0) + 1e-9);
  }
}

TEST_CASE("counterexample ratio on the full space") {
  const CounterexampleRatio r1 = counterexample_ratio(1, 0.1);
  CHECK(r1.formula == doctest::Approx(17.32050808).epsilon(1e-9));
  for (int p = 1; p <= 10; ++p) {
    const CounterexampleRatio r = counterexample_ratio(p, 0.1);
    CHECK(std::abs(r.formula - r.quadrature) / r.formula <= 1e-10);
  }
  // beyond p = 3 the scaled ratio exceeds the reduced-space constant
  CHECK(counterexample_ratio(3, 0.1).formula * 0.1 > 2.0 * std::sqrt(3.0));
}

TEST_CASE("sobolev lift") {
  const int p = 3, n = 8;
  const SpaceSpec low = SpaceSpec::full(p - 1, n, 0, 1);

  // zero input with c = 5 gives the constant function 5
  const CoefVector zero{low, std::vector<double>(low.dimension(), 0.0)};
  const CoefVector c5 = sobolev_lift(zero, 5.0);
  for (double v : c5.values) CHECK(v == doctest::Approx(5.0).epsilon(1e-14));

  // derivative of the lift reproduces the input
  std::mt19937_64 rng(123);
  std::normal_distribution<double> normal(0.0, 1.0);
  CoefVector src{low, std::vector<double>(low.dimension())};
  for (double& v : src.values) v = normal(rng);
  const CoefVector lift = sobolev_lift(src, -2.0);
  const SpaceBasis low_basis(low);
  const SpaceBasis lift_basis(lift.spec);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const double x = ux(rng);
    CHECK(std::abs(lift_basis.spline_value(lift.values, x, 1) -
                   low_basis.spline_value(src.values, x)) <= 1e-11);
  }
  CHECK(boundary_derivative(lift.spec, lift.values, 0, Endpoint::left) ==
        doctest::Approx(-2.0).epsilon(1e-12));

  // lifting a reduced member lands in the q=2 constrained space
  for (int pp : {3, 4, 5}) {
    const SpaceSpec red = SpaceSpec::reduced(pp - 1, 8, 0, 1);
    CoefVector rm{red, std::vector<double>(red.dimension())};
    for (double& v : rm.values) v = normal(rng);
    const CoefVector rm_full{SpaceSpec::full(pp - 1, 8, 0, 1),
                             to_full_coefs(red, rm.values)};
    const CoefVector up = sobolev_lift(rm_full, 0.7);
    for (int l = 0; 2 * l + 2 < pp; ++l) {
      const int d = 2 * l + 2;
      const double hd = std::pow(up.spec.h(), d);
      CHECK(std::abs(boundary_derivative(up.spec, up.values, d,
                                         Endpoint::left)) * hd <= 1e-10);
      CHECK(std::abs(boundary_derivative(up.spec, up.values, d,
                                         Endpoint::right)) * hd <= 1e-10);
    }
  }
}

TEST_CASE("tensor-product approximation") {
  const SpaceSpec spec = SpaceSpec::reduced(2, 8, 0, 1);
  const Tensor2dResult r = tensor2d_error(
      [](double x, double y) { return std::cos(kPi * x) * std::cos(kPi * y); },
      [](double x, double y) { return -kPi * std::sin(kPi * x) * std::cos(kPi * y); },
      [](double x, double y) { return -kPi * std::cos(kPi * x) * std::sin(kPi * y); },
      spec);
  CHECK(r.error <= 2.0 * spec.h() * r.h1_seminorm * (1 + 1e-9));
  CHECK(r.error <= std::sqrt(2.0) * spec.h() * (r.dx_norm + r.dy_norm) *
                       (1 + 1e-9));
  // |cos(pi x)cos(pi y)|_{H1}^2 = pi^2/2
  CHECK(r.h1_seminorm == doctest::Approx(kPi / std::sqrt(2.0)).epsilon(1e-10));
}

namespace {

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      for (int k = 0; k < b.rows; ++k) {
        for (int l = 0; l < b.cols; ++l) {
          c(i * b.rows + k, j * b.cols + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("inverse inequality extends to the tensor-product space") {
  // |u|_{H1} <= 2 sqrt(3d) h^{-1} ||u|| on the d = 2 tensor space; the
  // Kronecker structure makes the 2D extremal value sqrt(2) times the 1D one
  for (int p : {1, 2, 3}) {
    const SpaceSpec spec = SpaceSpec::reduced(p, 8, 0, 1);
    const DenseMatrix m = gram_matrix(spec, 0);
    const DenseMatrix k = gram_matrix(spec, 1);
    const DenseMatrix m2 = kron(m, m);
    const DenseMatrix k2 = add(kron(k, m), kron(m, k));

    const DenseMatrix l = cholesky(m2);
    DenseMatrix c = forward_solve_matrix(l, k2);
    c = transpose(forward_solve_matrix(l, transpose(c)));
    const EigenSym es = jacobi_eigen(c);
    const double val2d = spec.h() * std::sqrt(std::max(es.values.back(), 0.0));

    CHECK(val2d <= 2.0 * std::sqrt(6.0) + 1e-9);
    const double val1d = spec.h() * rayleigh_max(spec, 1).sqrt_lambda_max;
    CHECK(val2d == doctest::Approx(std::sqrt(2.0) * val1d).epsilon(1e-9));
  }
}

TEST_CASE("orthogonal witness and its two-sided chain") {
  for (int p : {1, 2, 3, 5}) {
    const int nc = 8;
    const double hc = 1.0 / nc;
    const WitnessResult w = orthogonal_witness(p, nc);
    CHECK(w.ortho_residual <= 1e-11);
    CHECK(w.l2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.h1 > 0.0);
    CHECK(w.l2 >= hc * w.h1 / (4.0 * std::sqrt(3.0)) * (1 - 1e-9));
    CHECK(w.l2 <= std::sqrt(2.0) * hc * w.h1 * (1 + 1e-9));
  }
  // no witness space when the coarse space is too rich
  CHECK_THROWS(orthogonal_witness(8, 4));
}

TEST_CASE("the battery is deterministic") {
  const auto& b1 = approximation_battery();
  const auto& b2 = approximation_battery();
  REQUIRE(b1.size() == 5);
  for (double x : {0.1, 0.5, 0.9}) {
    CHECK(b1[4].f(x) == b2[4].f(x));
  }
}
