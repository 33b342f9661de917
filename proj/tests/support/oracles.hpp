#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <array>
#include <cmath>
#include <complex>
#include <functional>

#include "maxsplines/projection.hpp"
#include "maxsplines/spaces.hpp"

namespace testsupport {

// central finite difference, step 1e-6
inline double central_diff(const std::function<double(double)>& f, double x) {
  const double d = 1e-6;
  return (f(x + d) - f(x - d)) / (2.0 * d);
}

// singular values of a complex 2x2 matrix (row-major), descending
inline std::array<double, 2> singular_values_2x2(
    const std::array<std::complex<double>, 4>& t) {
  const double g11 = std::norm(t[0]) + std::norm(t[2]);
  const double g22 = std::norm(t[1]) + std::norm(t[3]);
  const std::complex<double> g12 = std::conj(t[0]) * t[1] +
                                   std::conj(t[2]) * t[3];
  const double tr = g11 + g22;
  const double disc = std::sqrt(std::max(
      (g11 - g22) * (g11 - g22) + 4.0 * std::norm(g12), 0.0));
  const double s1 = std::sqrt(0.5 * (tr + disc));
  // the small singular value via the determinant, which avoids the
  // cancellation in (tr - disc)/2
  const double det = std::abs(t[0] * t[3] - t[1] * t[2]);
  const double s2 = (s1 > 0.0) ? det / s1 : 0.0;
  return {s1, s2};
}

// Mirror extension w(x) = u(|x|) from (0,1) to the periodic space on (-1,1)
// with the same grid size, realized as an L2 projection. When u has the
// vanishing-odd-derivative boundary behavior the projection reproduces
// u(|x|) pointwise; otherwise the residual stays O(1).
inline maxsplines::CoefVector mirror_extend(const maxsplines::CoefVector& u) {
  using namespace maxsplines;
  const SpaceSpec& s = u.spec;
  const SpaceSpec periodic = SpaceSpec::periodic(s.p, 2 * s.n, -1.0, 1.0);
  const SpaceBasis basis(s);
  const auto f = [&](double x) {
    return basis.spline_value(u.values, std::abs(x));
  };
  return l2_project(f, periodic, s.p + 2);
}

}  // namespace testsupport
