#include "maxsplines/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "maxsplines/quadrature.hpp"

namespace maxsplines {

Circulant mass_circulant(int p, double h, int n) {
  if (p < 0 || p > bspline::kMaxDegree) {
    throw std::invalid_argument("mass_circulant: degree out of range");
  }
  if (n <= 2 * p + 1) {
    throw std::invalid_argument("mass_circulant: need n > 2p+1");
  }
  const std::vector<double> row = bspline::eulerian_row_normalized(2 * p + 1);
  Circulant m{n, std::vector<double>(n, 0.0)};
  for (int j = -p; j <= p; ++j) {
    m.col[(j + n) % n] = h * row[p + j];
  }
  return m;
}

Circulant gradient_circulant(double h, int n) {
  if (n < 2) throw std::invalid_argument("gradient_circulant: need n >= 2");
  Circulant d{n, std::vector<double>(n, 0.0)};
  d.col[0] = 1.0 / h;
  d.col[n - 1] = -1.0 / h;
  return d;
}

Circulant stiffness_circulant(int p, double h, int n) {
  if (p < 1) throw std::invalid_argument("stiffness_circulant: need p >= 1");
  if (n <= 2 * p + 1) {
    throw std::invalid_argument("stiffness_circulant: need n > 2p+1");
  }
  const Circulant d = gradient_circulant(h, n);
  const Circulant m = mass_circulant(p - 1, h, n);
  Circulant k = conv(conv(d, m), transpose(d));
  // E = h^2 * ones*ones^T contributes h^2 to every column entry
  for (double& c : k.col) c += h * h;
  return k;
}

DenseMatrix prolongation(int p, int n_coarse) {
  const int nf = 2 * n_coarse;
  if (nf <= 2 * p + 1) {
    throw std::invalid_argument("prolongation: fine grid too coarse");
  }
  // binomial row C(p+1, 0..p+1)
  std::vector<double> binom(p + 2, 0.0);
  binom[0] = 1.0;
  for (int m = 1; m <= p + 1; ++m) {
    for (int k = m; k >= 1; --k) binom[k] += binom[k - 1];
  }
  const double scale = std::ldexp(1.0, -p);
  DenseMatrix mat(nf, n_coarse);
  for (int j = 0; j < n_coarse; ++j) {
    for (int l = 0; l <= p + 1; ++l) {
      mat((2 * j + l) % nf, j) += scale * binom[l];
    }
  }
  return mat;
}

namespace {

int default_quad_m(const SpaceSpec& spec, int quad_m) {
  const int m = (quad_m > 0) ? quad_m : spec.p + 2;
  if (m < spec.p + 1) {
    throw std::invalid_argument("gram_matrix: need quadrature order >= p+1");
  }
  return m;
}

}  // namespace

DenseMatrix gram_matrix(const SpaceSpec& spec, int r, bool h1circ, int quad_m) {
  if (r < 0 || r > spec.p) {
    throw std::invalid_argument("gram_matrix: need 0 <= r <= p");
  }
  if (h1circ && r != 1) {
    throw std::invalid_argument("gram_matrix: h1circ requires r == 1");
  }
  const int m = default_quad_m(spec, quad_m);
  const QuadRule rule = gauss_rule(m);
  const SpaceBasis basis(spec);
  const int dim = basis.dimension();
  const double h = spec.h();

  DenseMatrix g(dim, dim);
  std::vector<double> scratch(dim, 0.0);
  std::vector<char> used(dim, 0);
  std::vector<int> touched;
  touched.reserve(dim);

  for (int e = 0; e < spec.n; ++e) {
    for (int k = 0; k < m; ++k) {
      const double x = spec.a + (e + rule.nodes[k]) * h;
      const double w = rule.weights[k] * h;
      touched.clear();
      for (const auto& [ordinal, v] : basis.eval_active(x, r)) {
        if (!used[ordinal]) {
          used[ordinal] = 1;
          touched.push_back(ordinal);
        }
        scratch[ordinal] += v;
      }
      for (int i : touched) {
        for (int j : touched) {
          g(i, j) += w * scratch[i] * scratch[j];
        }
      }
      for (int i : touched) {
        scratch[i] = 0.0;
        used[i] = 0;
      }
    }
  }

  if (h1circ) {
    const std::vector<double> ints = basis_integrals(spec, m);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) g(i, j) += ints[i] * ints[j];
    }
  }
  return g;
}

std::vector<double> basis_integrals(const SpaceSpec& spec, int quad_m) {
  const int m = default_quad_m(spec, quad_m);
  const QuadRule rule = gauss_rule(m);
  const SpaceBasis basis(spec);
  std::vector<double> ints(basis.dimension(), 0.0);
  const double h = spec.h();
  for (int e = 0; e < spec.n; ++e) {
    for (int k = 0; k < m; ++k) {
      const double x = spec.a + (e + rule.nodes[k]) * h;
      const double w = rule.weights[k] * h;
      for (const auto& [ordinal, v] : basis.eval_active(x, 0)) {
        ints[ordinal] += w * v;
      }
    }
  }
  return ints;
}

}  // namespace maxsplines
