#pragma once

#include <span>
#include <vector>

namespace maxsplines {

// Row-major dense matrix. Sized for desk-scale verification work (dims are
// capped around 1024 by the callers), so everything here is O(n^3) direct
// algorithms: Cholesky for SPD solves and cyclic Jacobi for symmetric
// eigenproblems.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
  double operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }
  double* row(int i) { return a.data() + std::size_t(i) * cols; }
  const double* row(int i) const { return a.data() + std::size_t(i) * cols; }

  static DenseMatrix identity(int n);
};

DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b, double beta = 1.0);
double max_abs(const DenseMatrix& m);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

// Lower-triangular Cholesky factor of an SPD matrix; throws on breakdown.
DenseMatrix cholesky(const DenseMatrix& a);
// Solve L L^T x = b given the factor L.
std::vector<double> cholesky_solve(const DenseMatrix& l,
                                   std::span<const double> b);
// Rough condition estimate from the Cholesky diagonal, (max d / min d)^2.
double cholesky_condition_estimate(const DenseMatrix& l);
// Solve L Y = B (forward) resp. L^T Y = B (backward) column-wise.
DenseMatrix forward_solve_matrix(const DenseMatrix& l, const DenseMatrix& b);
DenseMatrix backward_solve_matrix(const DenseMatrix& l, const DenseMatrix& b);

// Symmetric eigendecomposition by cyclic Jacobi rotations. Eigenvalues are
// returned ascending; eigenvectors are the matching columns with a
// deterministic sign convention.
struct EigenSym {
  std::vector<double> values;
  DenseMatrix vectors;
};
EigenSym jacobi_eigen(const DenseMatrix& a);

// V f(w) V^T for the symmetric eigendecomposition, with eigenvalues clamped
// at `floor` before applying the power (used for square roots of SPD/PSD
// matrices; throws if an eigenvalue is below -neg_tol).
DenseMatrix sym_power(const DenseMatrix& a, double expo, double neg_tol);

// Largest singular value.
double spectral_norm(const DenseMatrix& a);

// Orthonormal columns spanning the (numerical) null space of a, detected by
// eigenvalues of a^T a below rel_tol * lambda_max.
DenseMatrix nullspace(const DenseMatrix& a, double rel_tol = 1e-13);

}  // namespace maxsplines
