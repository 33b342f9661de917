#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "maxsplines/bspline.hpp"
#include "support/oracles.hpp"

using namespace maxsplines::bspline;

TEST_CASE("normalized Eulerian rows") {
  CHECK(eulerian_row_normalized(0) == std::vector<double>{1.0});

  // n=3: recurrence by hand gives E(3,.) = (1,4,1,0), divided by 3!
  const auto r3 = eulerian_row_normalized(3);
  REQUIRE(r3.size() == 4);
  CHECK(r3[0] == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(r3[1] == doctest::Approx(4.0 / 6).epsilon(1e-15));
  CHECK(r3[2] == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(r3[3] == 0.0);

  for (int n = 0; n <= 25; ++n) {
    const auto row = eulerian_row_normalized(n);
    double s = 0.0;
    for (double v : row) {
      CHECK(v >= 0.0);
      s += v;
    }
    CHECK(std::abs(s - 1.0) <= 1e-14);
    // rows are symmetric about their nonzero part: b(n,k) = b(n, n-1-k)
    for (int k = 0; n >= 1 && k < n; ++k) {
      CHECK(row[k] == doctest::Approx(row[n - 1 - k]).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(eulerian_row_normalized(-1), std::invalid_argument);
}

TEST_CASE("cardinal evaluation examples") {
  CHECK(cardinal_eval(0, 0, 0.5) == 1.0);
  CHECK(cardinal_eval(0, 0, 0.0) == 0.0);  // half-open (i, i+1]
  CHECK(cardinal_eval(0, 0, 1.0) == 1.0);
  CHECK(cardinal_eval(1, 0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cardinal_eval(3, 0, 5.0) == 0.0);
  CHECK(cardinal_eval(3, 0, -1.0) == 0.0);
}

TEST_CASE("partition of unity and non-negativity") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unif(-3.0, 25.0);
  for (int p = 0; p <= 10; ++p) {
    for (int trial = 0; trial < 200; ++trial) {
      const double x = unif(rng);
      const ActiveValues av = cardinal_active(p, x);
      double s = 0.0;
      for (int k = 0; k < av.count; ++k) {
        CHECK(av.v[k] >= 0.0);
        s += av.v[k];
      }
      CHECK(std::abs(s - 1.0) <= 1e-13);
    }
  }
}

TEST_CASE("derivative relation d psi_p^(i) = psi_{p-1}^(i) - psi_{p-1}^(i+1)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-1.0, 12.0);
  std::uniform_int_distribution<int> shift(-3, 8);
  for (int p = 1; p <= 10; ++p) {
    for (int trial = 0; trial < 100; ++trial) {
      const double x = unif(rng);
      const int i = shift(rng);
      const double lhs = (x > i && x <= i + p + 1)
                             ? cardinal_derivative(p, i, x, 1)
                             : 0.0;
      const double rhs =
          cardinal_eval(p - 1, i, x) - cardinal_eval(p - 1, i + 1, x);
      CHECK(std::abs(lhs - rhs) <= 1e-13);
    }
  }
}

TEST_CASE("derivative examples and edge cases") {
  CHECK(cardinal_derivative(1, 0, 0.5, 1) == doctest::Approx(1.0));
  CHECK(cardinal_derivative(4, 0, -3.0, 1) == 0.0);
  CHECK(cardinal_derivative(2, 0, 1.3, 2) != 0.0);
  CHECK(cardinal_derivative(2, 0, 1.3, 3) == 0.0);  // r > p
  CHECK_THROWS_AS(cardinal_derivative(2, 0, 1.3, 0), std::invalid_argument);

  // finite-difference oracle at a non-knot point
  const auto f = [](double x) { return cardinal_eval(2, 0, x); };
  const double fd = testsupport::central_diff(f, 1.3);
  CHECK(std::abs(cardinal_derivative(2, 0, 1.3, 1) - fd) <= 1e-6);
}

TEST_CASE("half-open conventions at knots") {
  // derivative of the hat jumps at its peak: left limit +1, right limit -1
  const ActiveValues left = cardinal_active_derivative(1, 1, 1.0,
                                                       HalfOpen::left);
  const ActiveValues right = cardinal_active_derivative(1, 1, 1.0,
                                                        HalfOpen::right);
  const int k_left = 0 - left.first;
  const int k_right = 0 - right.first;
  CHECK(left.v[k_left] == doctest::Approx(1.0));
  CHECK(right.v[k_right] == doctest::Approx(-1.0));
}

TEST_CASE("iterated derivatives match repeated first differences") {
  // d^2 psi_p = psi_{p-2}^{(i)} - 2 psi_{p-2}^{(i+1)} + psi_{p-2}^{(i+2)}
  for (double x : {0.3, 1.7, 2.2, 3.9}) {
    const int p = 4, i = 0;
    const double lhs = cardinal_derivative(p, i, x, 2);
    const double rhs = cardinal_eval(p - 2, i, x) -
                       2.0 * cardinal_eval(p - 2, i + 1, x) +
                       cardinal_eval(p - 2, i + 2, x);
    CHECK(std::abs(lhs - rhs) <= 1e-13);
  }
}
