#include "maxsplines/analysis.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "maxsplines/kernels.hpp"
#include "maxsplines/operators.hpp"
#include "maxsplines/quadrature.hpp"

namespace maxsplines {

namespace {
constexpr double kPi = std::numbers::pi;
}

BoundReport make_bound_report(std::string quantity, double value, double bound,
                              double tolerance, int p, int n, double h,
                              std::string convention) {
  BoundReport r;
  r.quantity = std::move(quantity);
  r.value = value;
  r.bound = bound;
  r.ratio = (bound != 0.0) ? value / bound : value;
  r.pass = r.ratio <= 1.0 + tolerance;
  r.p = p;
  r.n = n;
  r.h = h;
  r.convention = std::move(convention);
  return r;
}

double two_grid_error_direct(int p, int n_coarse) {
  if (p < 1) throw std::invalid_argument("two_grid_error_direct: p >= 1");
  if (n_coarse > 64) {
    throw std::invalid_argument("two_grid_error_direct: n_coarse <= 64");
  }
  const double hc = 2.0 / n_coarse;  // domain (-1,1)
  const double hf = hc / 2.0;
  const int nf = 2 * n_coarse;

  const DenseMatrix mf = mass_circulant(p - 1, hf, nf).to_dense();
  const DenseMatrix kf = stiffness_circulant(p, hf, nf).to_dense();
  const DenseMatrix pr = prolongation(p, n_coarse);
  const DenseMatrix prt = transpose(pr);
  const DenseMatrix kc = matmul(prt, matmul(kf, pr));

  const DenseMatrix kc_l = cholesky(kc);
  // H = I - P Kc^{-1} P^T Kf
  const DenseMatrix ptkf = matmul(prt, kf);
  DenseMatrix sol = backward_solve_matrix(kc_l, forward_solve_matrix(kc_l, ptkf));
  DenseMatrix h = add(DenseMatrix::identity(nf), matmul(pr, sol), -1.0);

  const DenseMatrix m_sqrt = sym_power(mf, 0.5, 1e-10);
  const DenseMatrix k_invsqrt = sym_power(kf, -0.5, 1e-10);
  const DenseMatrix w = matmul(m_sqrt, matmul(h, k_invsqrt));
  return spectral_norm(w) / hf;
}

RayleighResult rayleigh_max(const SpaceSpec& spec, int r) {
  if (r < 1 || r > spec.p) {
    throw std::invalid_argument("rayleigh_max: need 1 <= r <= p");
  }
  const DenseMatrix a = gram_matrix(spec, r);
  const DenseMatrix b = gram_matrix(spec, r - 1);

  // PSD guard on the numerator Gram
  {
    const EigenSym es = jacobi_eigen(a);
    const double scale = std::max(std::abs(es.values.back()), 1.0);
    if (es.values.front() < -1e-10 * scale) {
      throw std::runtime_error("rayleigh_max: Gram matrix is indefinite");
    }
  }

  const int dim = a.rows;
  RayleighResult out;
  if (r == 1) {
    // mass is SPD: reduce via its Cholesky factor
    const DenseMatrix l = cholesky(b);
    DenseMatrix c = forward_solve_matrix(l, a);
    c = transpose(forward_solve_matrix(l, transpose(c)));
    const EigenSym es = jacobi_eigen(c);
    out.sqrt_lambda_max = std::sqrt(std::max(es.values.back(), 0.0));
    // map the eigenvector back: x = L^{-T} y
    DenseMatrix y(dim, 1);
    for (int i = 0; i < dim; ++i) y(i, 0) = es.vectors(i, dim - 1);
    const DenseMatrix x = backward_solve_matrix(l, y);
    out.extremizer.resize(dim);
    for (int i = 0; i < dim; ++i) out.extremizer[i] = x(i, 0);
    return out;
  }

  // B may be singular (polynomial kernel); deflate onto its positive part.
  const EigenSym eb = jacobi_eigen(b);
  const double bmax = std::max(eb.values.back(), 0.0);
  std::vector<int> keep;
  for (int j = 0; j < dim; ++j) {
    if (eb.values[j] > 1e-12 * std::max(bmax, 1e-300)) keep.push_back(j);
  }
  const int k = static_cast<int>(keep.size());
  if (k == 0) throw std::runtime_error("rayleigh_max: denominator Gram is zero");
  DenseMatrix basis(dim, k);  // columns v_j / sqrt(w_j)
  for (int c = 0; c < k; ++c) {
    const int j = keep[c];
    const double s = 1.0 / std::sqrt(eb.values[j]);
    for (int i = 0; i < dim; ++i) basis(i, c) = eb.vectors(i, j) * s;
  }
  const DenseMatrix red = matmul(transpose(basis), matmul(a, basis));
  const EigenSym es = jacobi_eigen(red);
  out.sqrt_lambda_max = std::sqrt(std::max(es.values.back(), 0.0));
  DenseMatrix y(k, 1);
  for (int i = 0; i < k; ++i) y(i, 0) = es.vectors(i, k - 1);
  const DenseMatrix x = matmul(basis, y);
  out.extremizer.resize(dim);
  for (int i = 0; i < dim; ++i) out.extremizer[i] = x(i, 0);
  return out;
}

CounterexampleRatio counterexample_ratio(int p, double h) {
  if (p < 1 || h >= 1.0 || h <= 0.0) {
    throw std::invalid_argument("counterexample_ratio: need p >= 1, h in (0,1)");
  }
  CounterexampleRatio out;
  out.formula = std::sqrt((2.0 * p + 1.0) / (2.0 * p - 1.0)) * p / h;

  // u = (1-x/h)^p on [0,h), zero beyond; integrands are polynomials of
  // degree <= 2p on the single element, so p+2 Gauss points are exact.
  const QuadRule rule = gauss_rule(p + 2);
  double num = 0.0, den = 0.0;
  for (int k = 0; k < rule.m; ++k) {
    const double x = rule.nodes[k] * h;
    const double base = 1.0 - x / h;
    const double du = -p / h * std::pow(base, p - 1);
    const double u = std::pow(base, p);
    num += rule.weights[k] * h * du * du;
    den += rule.weights[k] * h * u * u;
  }
  out.quadrature = std::sqrt(num / den);
  return out;
}

CoefVector sobolev_lift(const CoefVector& source, double c) {
  const SpaceSpec& ss = source.spec;
  if (ss.kind != SpaceKind::full) {
    throw std::invalid_argument("sobolev_lift: source must be full-space coefs");
  }
  const SpaceSpec target = SpaceSpec::full(ss.p + 1, ss.n, ss.a, ss.b);
  const double h = ss.h();
  // w_i = w_{i-1} + h v_{i-1} makes the derivative reproduce the source;
  // the additive constant then shifts every coefficient equally.
  std::vector<double> w(target.dimension(), 0.0);
  for (int i = 1; i < target.dimension(); ++i) {
    w[i] = w[i - 1] + h * source.values[i - 1];
  }
  CoefVector lifted{target, std::move(w)};
  const double at_a = boundary_derivative(target, lifted.values, 0,
                                          Endpoint::left);
  for (double& v : lifted.values) v += c - at_a;
  return lifted;
}

const std::vector<TestFunction>& approximation_battery() {
  static const std::vector<TestFunction> battery = [] {
    std::vector<TestFunction> fns;
    fns.push_back({"cos(pi x)",
                   [](double x) { return std::cos(kPi * x); },
                   [](double x) { return -kPi * std::sin(kPi * x); }});
    fns.push_back({"cos(2pi x)",
                   [](double x) { return std::cos(2.0 * kPi * x); },
                   [](double x) { return -2.0 * kPi * std::sin(2.0 * kPi * x); }});
    fns.push_back({"x(1-x)",
                   [](double x) { return x * (1.0 - x); },
                   [](double x) { return 1.0 - 2.0 * x; }});
    fns.push_back({"exp(x)-(e-1)",
                   [](double x) { return std::exp(x) - (std::numbers::e - 1.0); },
                   [](double x) { return std::exp(x); }});
    // seeded random trigonometric polynomial
    std::mt19937_64 rng(20240915);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> ac(5), bc(5);
    for (int k = 0; k < 5; ++k) {
      ac[k] = unif(rng) / (k + 1);
      bc[k] = unif(rng) / (k + 1);
    }
    fns.push_back(
        {"random trig poly",
         [ac, bc](double x) {
           double s = 0.0;
           for (int k = 0; k < 5; ++k) {
             s += ac[k] * std::cos(2.0 * kPi * (k + 1) * x) +
                  bc[k] * std::sin(2.0 * kPi * (k + 1) * x);
           }
           return s;
         },
         [ac, bc](double x) {
           double s = 0.0;
           for (int k = 0; k < 5; ++k) {
             const double om = 2.0 * kPi * (k + 1);
             s += -ac[k] * om * std::sin(om * x) + bc[k] * om * std::cos(om * x);
           }
           return s;
         }});
    return fns;
  }();
  return battery;
}

Tensor2dResult tensor2d_error(const RealFn2& f, const RealFn2& fx,
                              const RealFn2& fy, const SpaceSpec& spec1d) {
  const SpaceSpec& spec = spec1d;
  const int m = projection_quad_order(spec);
  const QuadRule rule = gauss_rule(m);
  const SpaceBasis basis(spec);
  const int dim = basis.dimension();
  const int nn = spec.n * m;  // total 1D quadrature nodes
  const double h = spec.h();

  // 1D tabulation: nodes, weights and dense basis table
  std::vector<double> xs(nn), ws(nn);
  DenseMatrix table(nn, dim);
  {
    int row = 0;
    for (int e = 0; e < spec.n; ++e) {
      for (int k = 0; k < m; ++k, ++row) {
        xs[row] = spec.a + (e + rule.nodes[k]) * h;
        ws[row] = rule.weights[k] * h;
        for (const auto& [ordinal, v] : basis.eval_active(xs[row], 0)) {
          table(row, ordinal) += v;
        }
      }
    }
  }

  // rhs B_{ij} = integral f(x,y) b_i(x) b_j(y), plus norms of f, df/dx, df/dy
  DenseMatrix rhs(dim, dim);
  double norm_f2 = 0.0, norm_fx2 = 0.0, norm_fy2 = 0.0;
  std::vector<double> fxrow(nn);
  for (int iy = 0; iy < nn; ++iy) {
    for (int ix = 0; ix < nn; ++ix) {
      const double w = ws[ix] * ws[iy];
      const double fv = f(xs[ix], xs[iy]);
      fxrow[ix] = w * fv;
      norm_f2 += w * fv * fv;
      const double gx = fx(xs[ix], xs[iy]);
      const double gy = fy(xs[ix], xs[iy]);
      norm_fx2 += w * gx * gx;
      norm_fy2 += w * gy * gy;
    }
    // accumulate rank-one update: rhs += table(ix,:)^T fxrow[ix] ... table(iy,:)
    std::vector<double> gvec(dim, 0.0);
    for (int ix = 0; ix < nn; ++ix) {
      if (fxrow[ix] == 0.0) continue;
      kernels::axpy(fxrow[ix], table.row(ix), gvec.data(), dim);
    }
    for (int i = 0; i < dim; ++i) {
      if (gvec[i] != 0.0) kernels::axpy(gvec[i], table.row(iy), rhs.row(i), dim);
    }
  }

  // tensor mass solve: U = M^{-1} B M^{-1}
  const DenseMatrix mass = gram_matrix(spec, 0, false, m);
  const DenseMatrix l = cholesky(mass);
  DenseMatrix u = backward_solve_matrix(l, forward_solve_matrix(l, rhs));
  u = transpose(
      backward_solve_matrix(l, forward_solve_matrix(l, transpose(u))));

  // error by direct quadrature of the residual; the algebraic shortcut
  // ||f||^2 - <U,B> cancels catastrophically when the error is tiny
  const DenseMatrix tu = matmul(table, u);  // tu(ix, j) = sum_i T(ix,i) U(i,j)
  double err2 = 0.0;
  for (int iy = 0; iy < nn; ++iy) {
    for (int ix = 0; ix < nn; ++ix) {
      const double uh = kernels::dot(tu.row(ix), table.row(iy), dim);
      const double d = f(xs[ix], xs[iy]) - uh;
      err2 += ws[ix] * ws[iy] * d * d;
    }
  }
  (void)norm_f2;
  Tensor2dResult out;
  out.error = std::sqrt(std::max(err2, 0.0));
  out.dx_norm = std::sqrt(std::max(norm_fx2, 0.0));
  out.dy_norm = std::sqrt(std::max(norm_fy2, 0.0));
  out.h1_seminorm = std::sqrt(std::max(norm_fx2 + norm_fy2, 0.0));
  return out;
}

WitnessResult orthogonal_witness(int p, int n_coarse) {
  const SpaceSpec fine = SpaceSpec::reduced(p, 2 * n_coarse, 0.0, 1.0);
  const SpaceSpec coarse = SpaceSpec::full(p, n_coarse, 0.0, 1.0);
  const int dim_f = fine.dimension();
  const int dim_c = coarse.dimension();
  if (dim_f <= dim_c) {
    throw std::runtime_error(
        "orthogonal_witness: no room for a witness (fine dim " +
        std::to_string(dim_f) + " <= coarse dim " + std::to_string(dim_c) + ")");
  }

  // cross Gram C[c][f] = (coarse_c, fine_f)_{L2}: both splines are
  // polynomials of degree p on each fine element, so p+2 points are exact
  const int m = p + 2;
  const QuadRule rule = gauss_rule(m);
  const SpaceBasis fb(fine);
  const SpaceBasis cb(coarse);
  const double hf = fine.h();
  DenseMatrix c(dim_c, dim_f);
  for (int e = 0; e < fine.n; ++e) {
    for (int k = 0; k < m; ++k) {
      const double x = (e + rule.nodes[k]) * hf;
      const double w = rule.weights[k] * hf;
      const auto fa = fb.eval_active(x, 0);
      const auto ca = cb.eval_active(x, 0);
      for (const auto& [ci, cv] : ca) {
        for (const auto& [fi, fv] : fa) {
          c(ci, fi) += w * cv * fv;
        }
      }
    }
  }

  const DenseMatrix null_basis = nullspace(c, 1e-13);
  if (null_basis.cols == 0) {
    throw std::runtime_error("orthogonal_witness: empty witness space");
  }
  std::vector<double> w(dim_f);
  for (int i = 0; i < dim_f; ++i) w[i] = null_basis(i, 0);

  // polish away the row-space component left by the eigensolver:
  // w <- w - C^T (C C^T)^{-1} C w
  try {
    const DenseMatrix cct_l = cholesky(matmul(c, transpose(c)));
    const DenseMatrix ct = transpose(c);
    for (int iter = 0; iter < 2; ++iter) {
      const std::vector<double> y = cholesky_solve(cct_l, matvec(c, w));
      const std::vector<double> corr = matvec(ct, y);
      for (int i = 0; i < dim_f; ++i) w[i] -= corr[i];
    }
  } catch (const std::runtime_error&) {
    // rank-deficient coarse Gram: keep the unpolished vector
  }

  WitnessResult out{CoefVector{fine, std::move(w)}, 0.0, 0.0, 0.0};
  out.l2 = spline_l2_norm(out.w);
  // normalize to unit mass norm
  for (double& v : out.w.values) v /= out.l2;
  out.l2 = 1.0;
  out.h1 = spline_h1_seminorm(out.w);
  const std::vector<double> res = matvec(c, out.w.values);
  for (double v : res) out.ortho_residual = std::max(out.ortho_residual,
                                                     std::abs(v));
  return out;
}

}  // namespace maxsplines
