#include "maxsplines/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maxsplines {

QuadRule gauss_rule(int m) {
  if (m < 1 || m > 64) {
    throw std::invalid_argument("gauss_rule: m must be in [1, 64]");
  }
  QuadRule rule;
  rule.m = m;
  rule.nodes.resize(m);
  rule.weights.resize(m);

  // Roots of the Legendre polynomial P_m on (-1,1) by Newton iteration,
  // seeded with the Chebyshev-based estimate. Only the lower half is
  // computed; the rest follows by symmetry.
  for (int k = 0; k < (m + 1) / 2; ++k) {
    double x = std::cos(std::numbers::pi * (k + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // three-term recurrence for P_m(x) and P_{m-1}(x)
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= m; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one polishing step after convergence
        double q0 = 1.0, q1 = x;
        for (int j = 2; j <= m; ++j) {
          const double q2 = ((2 * j - 1) * x * q1 - (j - 1) * q0) / j;
          q0 = q1;
          q1 = q2;
        }
        dp = m * (x * q1 - q0) / (x * x - 1.0);
        x -= q1 / dp;
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // map (-1,1) -> (0,1); node order ascending
    rule.nodes[k] = (1.0 - x) / 2.0;
    rule.nodes[m - 1 - k] = (1.0 + x) / 2.0;
    rule.weights[k] = w / 2.0;
    rule.weights[m - 1 - k] = w / 2.0;
  }
  return rule;
}

double integrate_piecewise(const std::function<double(double)>& f, double a,
                           double b, int n, const QuadRule& rule) {
  if (!(a < b) || n < 1) {
    throw std::invalid_argument("integrate_piecewise: need a < b and n >= 1");
  }
  const double h = (b - a) / n;
  double total = 0.0;
  for (int e = 0; e < n; ++e) {
    double elem = 0.0;
    for (int k = 0; k < rule.m; ++k) {
      elem += rule.weights[k] * f(a + (e + rule.nodes[k]) * h);
    }
    total += elem * h;
  }
  return total;
}

}  // namespace maxsplines
