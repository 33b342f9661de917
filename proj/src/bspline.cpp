#include "maxsplines/bspline.hpp"

#include <cmath>
#include <stdexcept>

namespace maxsplines::bspline {

std::vector<double> eulerian_row_normalized(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_row_normalized: n >= 0");
  std::vector<double> row{1.0};
  for (int m = 1; m <= n; ++m) {
    std::vector<double> next(m + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
      const double left = (k >= 1 && k - 1 < static_cast<int>(row.size()))
                              ? row[k - 1]
                              : 0.0;
      const double right = (k < static_cast<int>(row.size())) ? row[k] : 0.0;
      next[k] = ((m - k) * left + (k + 1) * right) / m;
    }
    row = std::move(next);
  }
  return row;
}

namespace {

int element_index(double t, HalfOpen side) {
  if (side == HalfOpen::left) {
    // t in (e, e+1]
    return static_cast<int>(std::ceil(t)) - 1;
  }
  // t in [e, e+1)
  return static_cast<int>(std::floor(t));
}

}  // namespace

ActiveValues cardinal_active(int p, double t, HalfOpen side) {
  if (p < 0 || p > kMaxDegree) {
    throw std::invalid_argument("cardinal_active: degree out of range");
  }
  const int e = element_index(t, side);
  ActiveValues out;
  out.first = e - p;
  out.count = p + 1;

  // de Boor triangle: at degree d the shifts e-d..e are active.
  std::array<double, kMaxDegree + 1> v{};
  v[0] = 1.0;  // psi_0^{(e)}(t)
  for (int d = 1; d <= p; ++d) {
    std::array<double, kMaxDegree + 1> nv{};
    for (int k = 0; k <= d; ++k) {
      const int j = e - d + k;
      const double a = (k >= 1) ? v[k - 1] : 0.0;  // psi_{d-1}^{(j)}
      const double b = (k <= d - 1) ? v[k] : 0.0;  // psi_{d-1}^{(j+1)}
      nv[k] = ((t - j) * a + (d + j + 1 - t) * b) / d;
    }
    v = nv;
  }
  out.v = v;
  return out;
}

ActiveValues cardinal_active_derivative(int p, int r, double t, HalfOpen side) {
  if (r < 0) throw std::invalid_argument("cardinal_active_derivative: r >= 0");
  if (r == 0) return cardinal_active(p, t, side);
  ActiveValues out;
  const int e = element_index(t, side);
  out.first = e - p;
  out.count = p + 1;
  if (r > p) return out;  // away from knots the derivative vanishes

  const ActiveValues low = cardinal_active(p - r, t, side);
  // binomial row C(r, 0..r)
  std::array<double, kMaxDegree + 1> binom{};
  binom[0] = 1.0;
  for (int m = 1; m <= r; ++m) {
    for (int k = m; k >= 1; --k) binom[k] += binom[k - 1];
  }
  for (int k = 0; k <= p; ++k) {
    const int i = out.first + k;
    double s = 0.0;
    for (int m = 0; m <= r; ++m) {
      const int idx = i + m - low.first;  // psi_{p-r}^{(i+m)}
      if (idx >= 0 && idx < low.count) {
        s += ((m % 2 == 0) ? binom[m] : -binom[m]) * low.v[idx];
      }
    }
    out.v[k] = s;
  }
  return out;
}

double cardinal_eval(int p, int i, double x) {
  if (p < 0 || p > kMaxDegree) {
    throw std::invalid_argument("cardinal_eval: degree out of range");
  }
  if (!(x > i && x <= i + p + 1)) return 0.0;
  const ActiveValues av = cardinal_active(p, x);
  const int k = i - av.first;
  if (k < 0 || k >= av.count) return 0.0;
  return av.v[k];
}

double cardinal_derivative(int p, int i, double x, int r) {
  if (r < 1) throw std::invalid_argument("cardinal_derivative: r >= 1");
  if (p < 1 || p > kMaxDegree) {
    throw std::invalid_argument("cardinal_derivative: degree out of range");
  }
  if (r > p) return 0.0;
  if (!(x > i && x <= i + p + 1)) return 0.0;
  const ActiveValues av = cardinal_active_derivative(p, r, x);
  const int k = i - av.first;
  if (k < 0 || k >= av.count) return 0.0;
  return av.v[k];
}

}  // namespace maxsplines::bspline
