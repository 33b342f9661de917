#include "maxsplines/projection.hpp"

#include <cmath>
#include <stdexcept>

#include "maxsplines/operators.hpp"
#include "maxsplines/quadrature.hpp"

namespace maxsplines {

double spline_eval(const CoefVector& u, double x, int r) {
  const SpaceBasis basis(u.spec);
  return basis.spline_value(u.values, x, r);
}

int projection_quad_order(const SpaceSpec& spec) {
  return std::max(spec.p + 2, 10);
}

namespace {

std::vector<double> rhs_against_basis(const RealFn& f, const SpaceBasis& basis,
                                      int r, int m) {
  const SpaceSpec& spec = basis.spec();
  const QuadRule rule = gauss_rule(m);
  const double h = spec.h();
  std::vector<double> rhs(basis.dimension(), 0.0);
  for (int e = 0; e < spec.n; ++e) {
    for (int k = 0; k < rule.m; ++k) {
      const double x = spec.a + (e + rule.nodes[k]) * h;
      const double w = rule.weights[k] * h * f(x);
      for (const auto& [ordinal, v] : basis.eval_active(x, r)) {
        rhs[ordinal] += w * v;
      }
    }
  }
  return rhs;
}

DenseMatrix checked_cholesky(const DenseMatrix& g, const char* what) {
  DenseMatrix l = cholesky(g);
  if (cholesky_condition_estimate(l) > 1e14) {
    throw std::runtime_error(std::string(what) +
                             ": Gram matrix is ill-conditioned");
  }
  return l;
}

}  // namespace

CoefVector l2_project(const RealFn& f, const SpaceSpec& spec, int quad_m) {
  const int m = (quad_m > 0) ? quad_m : projection_quad_order(spec);
  const SpaceBasis basis(spec);
  const DenseMatrix mass = gram_matrix(spec, 0, false, m);
  const DenseMatrix l = checked_cholesky(mass, "l2_project");
  const std::vector<double> rhs = rhs_against_basis(f, basis, 0, m);
  return CoefVector{spec, cholesky_solve(l, rhs)};
}

CoefVector h1circ_project(const RealFn& f, const RealFn& fprime,
                          const SpaceSpec& spec) {
  if (spec.kind != SpaceKind::periodic) {
    throw std::invalid_argument("h1circ_project: periodic spaces only");
  }
  const int m = projection_quad_order(spec);
  const SpaceBasis basis(spec);
  // exact stiffness from the decomposition; the quadrature Gram is the oracle
  const DenseMatrix k = stiffness_circulant(spec.p, spec.h(), spec.n).to_dense();
  const DenseMatrix l = checked_cholesky(k, "h1circ_project");

  std::vector<double> rhs = rhs_against_basis(fprime, basis, 1, m);
  const QuadRule rule = gauss_rule(m);
  const double mean_f =
      integrate_piecewise(f, spec.a, spec.b, spec.n, rule);
  const std::vector<double> ints = basis_integrals(spec, m);
  for (int i = 0; i < static_cast<int>(rhs.size()); ++i) {
    rhs[i] += mean_f * ints[i];
  }
  return CoefVector{spec, cholesky_solve(l, rhs)};
}

CoefVector coarse_approx(const CoefVector& fine) {
  const SpaceSpec& fs = fine.spec;
  if (fs.kind != SpaceKind::periodic) {
    throw std::invalid_argument("coarse_approx: periodic spaces only");
  }
  if (fs.n % 2 != 0) {
    throw std::invalid_argument("coarse_approx: fine grid must be dyadic");
  }
  const SpaceSpec cs = SpaceSpec::periodic(fs.p, fs.n / 2, fs.a, fs.b);
  const DenseMatrix p = prolongation(fs.p, cs.n);
  const DenseMatrix kf = stiffness_circulant(fs.p, fs.h(), fs.n).to_dense();
  const DenseMatrix pt = transpose(p);
  const DenseMatrix kc = matmul(pt, matmul(kf, p));  // Galerkin coarse operator
  const std::vector<double> rhs = matvec(pt, matvec(kf, fine.values));
  const DenseMatrix l = checked_cholesky(kc, "coarse_approx");
  return CoefVector{cs, cholesky_solve(l, rhs)};
}

double l2_error(const RealFn& f, const CoefVector& u, int quad_m) {
  const SpaceSpec& spec = u.spec;
  const int m = (quad_m > 0) ? quad_m : projection_quad_order(spec);
  const QuadRule rule = gauss_rule(m);
  const SpaceBasis basis(spec);
  const double h = spec.h();
  double acc = 0.0;
  for (int e = 0; e < spec.n; ++e) {
    for (int k = 0; k < rule.m; ++k) {
      const double x = spec.a + (e + rule.nodes[k]) * h;
      const double r = f(x) - basis.spline_value(u.values, x, 0);
      acc += rule.weights[k] * h * r * r;
    }
  }
  return std::sqrt(acc);
}

double seminorm_error(const RealFn& dr_f, const CoefVector& u, int r,
                      int quad_m) {
  const SpaceSpec& spec = u.spec;
  const int m = (quad_m > 0) ? quad_m : projection_quad_order(spec);
  const QuadRule rule = gauss_rule(m);
  const SpaceBasis basis(spec);
  const double h = spec.h();
  double acc = 0.0;
  for (int e = 0; e < spec.n; ++e) {
    for (int k = 0; k < rule.m; ++k) {
      const double x = spec.a + (e + rule.nodes[k]) * h;
      const double d = dr_f(x) - basis.spline_value(u.values, x, r);
      acc += rule.weights[k] * h * d * d;
    }
  }
  return std::sqrt(acc);
}

double function_l2(const RealFn& f, double a, double b, int n, int quad_m) {
  const QuadRule rule = gauss_rule(quad_m);
  const double v =
      integrate_piecewise([&](double x) { return f(x) * f(x); }, a, b, n, rule);
  return std::sqrt(std::max(v, 0.0));
}

double spline_l2_norm(const CoefVector& u) {
  const DenseMatrix g = gram_matrix(u.spec, 0);
  const std::vector<double> gu = matvec(g, u.values);
  double s = 0.0;
  for (std::size_t i = 0; i < gu.size(); ++i) s += u.values[i] * gu[i];
  return std::sqrt(std::max(s, 0.0));
}

double spline_h1_seminorm(const CoefVector& u) {
  if (u.spec.p == 0) return 0.0;
  const DenseMatrix g = gram_matrix(u.spec, 1);
  const std::vector<double> gu = matvec(g, u.values);
  double s = 0.0;
  for (std::size_t i = 0; i < gu.size(); ++i) s += u.values[i] * gu[i];
  return std::sqrt(std::max(s, 0.0));
}

}  // namespace maxsplines
