#include "maxsplines/circulant.hpp"

#include <stdexcept>

namespace maxsplines {

std::vector<double> Circulant::apply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("Circulant::apply: size mismatch");
  }
  std::vector<double> y(n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double c = col[k];
    if (c == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      y[(j + k) % n] += c * x[j];
    }
  }
  return y;
}

DenseMatrix Circulant::to_dense() const {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = col[(i - j + n) % n];
  }
  return m;
}

Circulant conv(const Circulant& a, const Circulant& b) {
  if (a.n != b.n) throw std::invalid_argument("conv: size mismatch");
  Circulant c{a.n, std::vector<double>(a.n, 0.0)};
  for (int k = 0; k < a.n; ++k) {
    const double av = a.col[k];
    if (av == 0.0) continue;
    for (int j = 0; j < a.n; ++j) {
      c.col[(k + j) % a.n] += av * b.col[j];
    }
  }
  return c;
}

Circulant transpose(const Circulant& a) {
  Circulant t{a.n, std::vector<double>(a.n)};
  for (int j = 0; j < a.n; ++j) t.col[j] = a.col[(a.n - j) % a.n];
  return t;
}

}  // namespace maxsplines
