#include "maxsplines/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "maxsplines/kernels.hpp"

namespace maxsplines {

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  }
  return t;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
  const DenseMatrix bt = transpose(b);
  DenseMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < b.cols; ++j) {
      c(i, j) = kernels::dot(a.row(i), bt.row(j), std::size_t(a.cols));
    }
  }
  return c;
}

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x) {
  if (a.cols != static_cast<int>(x.size())) {
    throw std::invalid_argument("matvec: shape mismatch");
  }
  std::vector<double> y(a.rows);
  for (int i = 0; i < a.rows; ++i) {
    y[i] = kernels::dot(a.row(i), x.data(), x.size());
  }
  return y;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b, double beta) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw std::invalid_argument("add: shape mismatch");
  }
  DenseMatrix c = a;
  kernels::axpy(beta, b.a.data(), c.a.data(), c.a.size());
  return c;
}

double max_abs(const DenseMatrix& m) {
  double v = 0.0;
  for (double x : m.a) v = std::max(v, std::abs(x));
  return v;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double v = 0.0;
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    v = std::max(v, std::abs(a.a[i] - b.a[i]));
  }
  return v;
}

DenseMatrix cholesky(const DenseMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("cholesky: square only");
  const int n = a.rows;
  DenseMatrix l(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double s = kernels::dot(l.row(i), l.row(j), std::size_t(j));
      if (i == j) {
        const double d = a(i, i) - s;
        if (!(d > 0.0)) {
          throw std::runtime_error("cholesky: matrix not positive definite");
        }
        l(i, j) = std::sqrt(d);
      } else {
        l(i, j) = (a(i, j) - s) / l(j, j);
      }
    }
  }
  return l;
}

std::vector<double> cholesky_solve(const DenseMatrix& l,
                                   std::span<const double> b) {
  const int n = l.rows;
  std::vector<double> y(b.begin(), b.end());
  for (int i = 0; i < n; ++i) {
    y[i] = (y[i] - kernels::dot(l.row(i), y.data(), std::size_t(i))) / l(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = y[i];
    for (int k = i + 1; k < n; ++k) s -= l(k, i) * y[k];
    y[i] = s / l(i, i);
  }
  return y;
}

double cholesky_condition_estimate(const DenseMatrix& l) {
  double dmin = l(0, 0), dmax = l(0, 0);
  for (int i = 0; i < l.rows; ++i) {
    dmin = std::min(dmin, l(i, i));
    dmax = std::max(dmax, l(i, i));
  }
  const double r = dmax / dmin;
  return r * r;
}

DenseMatrix forward_solve_matrix(const DenseMatrix& l, const DenseMatrix& b) {
  const int n = l.rows;
  DenseMatrix y = b;
  for (int c = 0; c < b.cols; ++c) {
    for (int i = 0; i < n; ++i) {
      double s = y(i, c);
      for (int k = 0; k < i; ++k) s -= l(i, k) * y(k, c);
      y(i, c) = s / l(i, i);
    }
  }
  return y;
}

DenseMatrix backward_solve_matrix(const DenseMatrix& l, const DenseMatrix& b) {
  const int n = l.rows;
  DenseMatrix y = b;
  for (int c = 0; c < b.cols; ++c) {
    for (int i = n - 1; i >= 0; --i) {
      double s = y(i, c);
      for (int k = i + 1; k < n; ++k) s -= l(k, i) * y(k, c);
      y(i, c) = s / l(i, i);
    }
  }
  return y;
}

EigenSym jacobi_eigen(const DenseMatrix& a0) {
  if (a0.rows != a0.cols) throw std::invalid_argument("jacobi_eigen: square");
  const int n = a0.rows;
  DenseMatrix a = a0;
  // eigenvectors accumulated as ROWS of vt so rotations stay contiguous
  DenseMatrix vt = DenseMatrix::identity(n);

  double norm = 0.0;
  for (double x : a.a) norm += x * x;
  norm = std::sqrt(norm);

  // iterate to the rounding floor so near-zero eigenvalues come out at
  // machine accuracy (needed by the null-space detection)
  double prev_off = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    off = std::sqrt(2.0 * off);
    if (off <= 1e-100 * std::max(norm, 1e-300) || off >= prev_off) break;
    prev_off = off;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        // annihilate a(p,q) under A <- J A J^T with J = [c s; -s c]
        const double theta = (a(p, p) - a(q, q)) / (2.0 * apq);
        const double t = ((theta >= 0) ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J with J the (p,q) rotation: rows then columns
        kernels::rot(a.row(p), a.row(q), c, s, std::size_t(n));
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp + s * akq;
          a(k, q) = -s * akp + c * akq;
        }
        kernels::rot(vt.row(p), vt.row(q), c, s, std::size_t(n));
      }
    }
  }

  EigenSym out;
  out.values.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return diag[x] < diag[y]; });
  out.vectors = DenseMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    out.values[j] = diag[src];
    // deterministic sign: largest-magnitude entry positive
    int arg = 0;
    for (int i = 1; i < n; ++i) {
      if (std::abs(vt(src, i)) > std::abs(vt(src, arg))) arg = i;
    }
    const double sgn = (vt(src, arg) < 0.0) ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) out.vectors(i, j) = sgn * vt(src, i);
  }
  return out;
}

DenseMatrix sym_power(const DenseMatrix& a, double expo, double neg_tol) {
  const EigenSym es = jacobi_eigen(a);
  const double scale = std::max(std::abs(es.values.front()),
                                std::abs(es.values.back()));
  for (double w : es.values) {
    if (w < -neg_tol * std::max(scale, 1.0)) {
      throw std::runtime_error("sym_power: matrix is indefinite");
    }
  }
  const int n = a.rows;
  DenseMatrix scaled = es.vectors;  // columns scaled by f(w)
  for (int j = 0; j < n; ++j) {
    const double w = std::max(es.values[j], 0.0);
    const double f = (w == 0.0 && expo < 0.0) ? 0.0 : std::pow(w, expo);
    for (int i = 0; i < n; ++i) scaled(i, j) *= f;
  }
  return matmul(scaled, transpose(es.vectors));
}

double spectral_norm(const DenseMatrix& a) {
  const DenseMatrix ata = matmul(transpose(a), a);
  const EigenSym es = jacobi_eigen(ata);
  return std::sqrt(std::max(es.values.back(), 0.0));
}

DenseMatrix nullspace(const DenseMatrix& a, double rel_tol) {
  const DenseMatrix ata = matmul(transpose(a), a);
  const EigenSym es = jacobi_eigen(ata);
  const double wmax = std::max(es.values.back(), 0.0);
  int count = 0;
  while (count < ata.rows && es.values[count] <= rel_tol * std::max(wmax, 1e-300)) {
    ++count;
  }
  DenseMatrix basis(ata.rows, count);
  for (int j = 0; j < count; ++j) {
    for (int i = 0; i < ata.rows; ++i) basis(i, j) = es.vectors(i, j);
  }
  return basis;
}

}  // namespace maxsplines
