#pragma once

#include <functional>
#include <vector>

#include "maxsplines/dense.hpp"
#include "maxsplines/spaces.hpp"

namespace maxsplines {

using RealFn = std::function<double(double)>;

// Coefficients of a spline over the basis of its space.
struct CoefVector {
  SpaceSpec spec;
  std::vector<double> values;
};

double spline_eval(const CoefVector& u, double x, int r = 0);

// Quadrature order used for inner products against arbitrary functions:
// max(p+2, 10) points per element keeps the quadrature error far below the
// verification tolerances.
int projection_quad_order(const SpaceSpec& spec);

// Best L2 approximation: solve M u = (f, b_i). Throws on an ill-conditioned
// Gram (condition estimate above 1e14).
CoefVector l2_project(const RealFn& f, const SpaceSpec& spec, int quad_m = 0);

// H1-circle-orthogonal projection onto a periodic space: solve K u = rhs
// with rhs_i = (f', b_i')_{L2} + (int f)(int b_i). The derivative is
// caller-supplied so the H1 term can be integrated accurately.
CoefVector h1circ_project(const RealFn& f, const RealFn& fprime,
                          const SpaceSpec& spec);

// Coarse-grid approximation of a fine periodic spline by the Galerkin
// formula u_H = (P^T K_f P)^{-1} P^T K_f u_f (both grids periodic, dyadic).
CoefVector coarse_approx(const CoefVector& fine);

// ||f - u||_{L2(a,b)} by quadrature.
double l2_error(const RealFn& f, const CoefVector& u, int quad_m = 0);
// |f - u|_{H^r(a,b)} by quadrature, where dr_f is the r-th derivative of f.
double seminorm_error(const RealFn& dr_f, const CoefVector& u, int r,
                      int quad_m = 0);
// sqrt of the integral of f^2 over (a,b) on an n-element grid.
double function_l2(const RealFn& f, double a, double b, int n, int quad_m);

// L2 and H1-seminorm of the spline itself via its Gram matrices.
double spline_l2_norm(const CoefVector& u);
double spline_h1_seminorm(const CoefVector& u);

}  // namespace maxsplines
