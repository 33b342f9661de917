#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "maxsplines/dense.hpp"

using namespace maxsplines;

namespace {

DenseMatrix random_spd(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseMatrix b(n, n);
  for (double& v : b.a) v = normal(rng);
  DenseMatrix a = matmul(transpose(b), b);
  for (int i = 0; i < n; ++i) a(i, i) += n;
  return a;
}

}  // namespace

TEST_CASE("cholesky factors and solves") {
  DenseMatrix a(2, 2);
  a(0, 0) = 4;
  a(0, 1) = a(1, 0) = 2;
  a(1, 1) = 3;
  const DenseMatrix l = cholesky(a);
  CHECK(l(0, 0) == doctest::Approx(2.0));
  CHECK(l(1, 0) == doctest::Approx(1.0));
  CHECK(l(1, 1) == doctest::Approx(std::sqrt(2.0)));

  const std::vector<double> b{2.0, -1.0};
  const std::vector<double> x = cholesky_solve(l, b);
  const std::vector<double> back = matvec(a, x);
  CHECK(back[0] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(back[1] == doctest::Approx(-1.0).epsilon(1e-13));

  DenseMatrix indef(2, 2);
  indef(0, 0) = 1;
  indef(1, 1) = -1;
  CHECK_THROWS_AS(cholesky(indef), std::runtime_error);
}

TEST_CASE("jacobi eigen on a known matrix") {
  // eigenvalues of [[2,1],[1,2]] are 1 and 3
  DenseMatrix a(2, 2);
  a(0, 0) = a(1, 1) = 2;
  a(0, 1) = a(1, 0) = 1;
  const EigenSym es = jacobi_eigen(a);
  CHECK(es.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(es.values[1] == doctest::Approx(3.0).epsilon(1e-14));

  std::mt19937_64 rng(5);
  const DenseMatrix spd = random_spd(rng, 20);
  const EigenSym big = jacobi_eigen(spd);
  // reconstruct and compare
  DenseMatrix scaled = big.vectors;
  for (int j = 0; j < 20; ++j) {
    for (int i = 0; i < 20; ++i) scaled(i, j) *= big.values[j];
  }
  const DenseMatrix rec = matmul(scaled, transpose(big.vectors));
  CHECK(max_abs_diff(rec, spd) <= 1e-11 * max_abs(spd));
  // orthonormal eigenvectors
  const DenseMatrix vtv = matmul(transpose(big.vectors), big.vectors);
  CHECK(max_abs_diff(vtv, DenseMatrix::identity(20)) <= 1e-12);
}

TEST_CASE("symmetric square root") {
  std::mt19937_64 rng(6);
  const DenseMatrix a = random_spd(rng, 12);
  const DenseMatrix r = sym_power(a, 0.5, 1e-10);
  CHECK(max_abs_diff(matmul(r, r), a) <= 1e-11 * max_abs(a));
  const DenseMatrix ri = sym_power(a, -0.5, 1e-10);
  CHECK(max_abs_diff(matmul(matmul(ri, a), ri), DenseMatrix::identity(12)) <=
        1e-10);
}

TEST_CASE("spectral norm and null space") {
  DenseMatrix a(2, 3);
  a(0, 0) = 3.0;
  a(1, 1) = 4.0;
  CHECK(spectral_norm(a) == doctest::Approx(4.0).epsilon(1e-13));

  DenseMatrix c(1, 3);
  c(0, 0) = 1.0;
  c(0, 1) = 1.0;
  const DenseMatrix ns = nullspace(c);
  REQUIRE(ns.cols == 2);
  for (int j = 0; j < ns.cols; ++j) {
    double r = 0.0, norm = 0.0;
    for (int i = 0; i < 3; ++i) {
      r += c(0, i) * ns(i, j);
      norm += ns(i, j) * ns(i, j);
    }
    CHECK(std::abs(r) <= 1e-14);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-13));
  }
}
