#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maxsplines/projection.hpp"
#include "maxsplines/spaces.hpp"
#include "maxsplines/symbols.hpp"

namespace maxsplines {

// One verified inequality: computed value against the closed-form bound.
struct BoundReport {
  std::string quantity;
  double value = 0.0;
  double bound = 0.0;
  double ratio = 0.0;  // value / bound
  bool pass = false;
  int p = 0;
  int n = 0;
  double h = 0.0;
  std::string convention;  // empty when not applicable
};

BoundReport make_bound_report(std::string quantity, double value, double bound,
                              double tolerance, int p, int n, double h,
                              std::string convention = "");

// Dense-matrix two-grid constant on (-1,1): with h the fine grid size,
//   q = h^{-1} || M_{p-1,h}^{1/2} (I - P K_{2h}^{-1} P^T K_h) K_h^{-1/2} ||_2,
// the coarse operator formed by the Galerkin product. This is the same
// quantity the symbol route computes, via matrix square roots instead.
double two_grid_error_direct(int p, int n_coarse);

// Largest generalized eigenvalue of (H^r Gram, H^{r-1} Gram) on the space.
struct RayleighResult {
  double sqrt_lambda_max = 0.0;
  std::vector<double> extremizer;
};
RayleighResult rayleigh_max(const SpaceSpec& spec, int r = 1);

// |u|_{H1}/||u||_{L2} for u = (1-x/h)^p on [0,h): the closed form
// sqrt((2p+1)/(2p-1)) * p / h and an independent quadrature evaluation.
struct CounterexampleRatio {
  double formula = 0.0;
  double quadrature = 0.0;
};
CounterexampleRatio counterexample_ratio(int p, double h);

// Antiderivative spline: given u_{p-1} over the full space of degree p-1,
// returns coefficients of c + int_a^x u_{p-1} over the full space of degree p.
CoefVector sobolev_lift(const CoefVector& source, double c);

// Fixed battery of smooth test functions on (0,1) used by the approximation
// scans (seeded, reproducible).
struct TestFunction {
  std::string name;
  RealFn f;
  RealFn fprime;
};
const std::vector<TestFunction>& approximation_battery();

// Best L2 approximation error of f(x,y) in the tensor-product reduced space
// against the bound sqrt(2d) h |f|_{H1} (d = 2), via the Kronecker structure
// of the tensor mass matrix.
struct Tensor2dResult {
  double error = 0.0;
  double h1_seminorm = 0.0;       // |f|_{H1((0,1)^2)}
  double dx_norm = 0.0;           // ||df/dx||_{L2}
  double dy_norm = 0.0;           // ||df/dy||_{L2}
};
using RealFn2 = std::function<double(double, double)>;
Tensor2dResult tensor2d_error(const RealFn2& f, const RealFn2& fx,
                              const RealFn2& fy, const SpaceSpec& spec1d);

// Unit-mass-norm element of the reduced space on the 2n-element grid that is
// L2-orthogonal to the full space on the n-element grid over (0,1).
struct WitnessResult {
  CoefVector w;
  double ortho_residual = 0.0;  // max_i |(w, coarse basis_i)|
  double l2 = 0.0;
  double h1 = 0.0;
};
WitnessResult orthogonal_witness(int p, int n_coarse);

}  // namespace maxsplines
