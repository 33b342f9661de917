#pragma once

#include <functional>
#include <vector>

namespace maxsplines {

// Gauss-Legendre rule on the unit interval (0,1). Weights sum to 1 and the
// rule integrates polynomials up to degree 2m-1 exactly.
struct QuadRule {
  int m = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

// m-point rule, 1 <= m <= 64.
QuadRule gauss_rule(int m);

// Integral of f over (a,b) split into n uniform elements, the scaled rule
// applied on each.
double integrate_piecewise(const std::function<double(double)>& f, double a,
                           double b, int n, const QuadRule& rule);

}  // namespace maxsplines
