#include "maxsplines/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "maxsplines/operators.hpp"
#include "maxsplines/quadrature.hpp"

namespace maxsplines {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kTwoSqrt3 = 2.0 * std::sqrt(3.0);

struct Ctx {
  VerifyOptions opts;
  double tol(double def) const { return opts.tol_override.value_or(def); }
  std::vector<int> n_or(std::initializer_list<int> def) const {
    return opts.n_set.empty() ? std::vector<int>(def) : opts.n_set;
  }
};

// value <= bound + tol
BoundReport upper(std::string q, double value, double bound, double tol, int p,
                  int n, double h, std::string conv = "") {
  BoundReport r;
  r.quantity = std::move(q);
  r.value = value;
  r.bound = bound;
  r.ratio = (bound != 0.0) ? value / bound : value;
  r.pass = value <= bound + tol;
  r.p = p;
  r.n = n;
  r.h = h;
  r.convention = std::move(conv);
  return r;
}

// value >= bound - tol
BoundReport lower(std::string q, double value, double bound, double tol, int p,
                  int n, double h, std::string conv = "") {
  BoundReport r;
  r.quantity = std::move(q);
  r.value = value;
  r.bound = bound;
  r.ratio = (value != 0.0) ? bound / value : bound;
  r.pass = value >= bound - tol;
  r.p = p;
  r.n = n;
  r.h = h;
  r.convention = std::move(conv);
  return r;
}

// |diff| <= tol
BoundReport agree(std::string q, double diff, double tol, int p, int n,
                  double h, std::string conv = "") {
  return upper(std::move(q), std::abs(diff), 0.0, tol, p, n, h,
               std::move(conv));
}

CriterionResult criterion_two_grid(const Ctx& ctx) {
  CriterionResult c{1, "two-grid constant q <= 1/sqrt(2), symbol vs dense", true, {}};
  const double tol_q = ctx.tol(1e-12);
  const double tol_agree = ctx.tol(1e-8);
  for (int nc : ctx.n_or({4, 8, 16})) {
    for (int p = 1; p <= std::min(ctx.opts.p_max, 8); ++p) {
      if (p >= nc) continue;
      double q_matrix = 0.0;
      for (EConvention conv : {EConvention::paper, EConvention::matrix}) {
        const TwoGridReport rep = two_grid_constant(p, nc, conv);
        if (conv == EConvention::matrix) q_matrix = rep.q;
        c.rows.push_back(upper("two-grid q", rep.q, kInvSqrt2, tol_q, p, nc,
                               2.0 / nc,
                               conv == EConvention::paper ? "paper" : "matrix"));
      }
      if (p <= 5 && nc <= 16 && 2 * nc > 2 * p + 1) {
        const double qd = two_grid_error_direct(p, nc);
        c.rows.push_back(agree("two-grid |q_dense - q_symbol|",
                               qd - q_matrix, tol_agree, p, nc, 2.0 / nc,
                               "matrix"));
      }
    }
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

CriterionResult criterion_psi(const Ctx& ctx) {
  CriterionResult c{2, "Psi_p <= 1/2 on the admissible region; rho(T0) = 1/4", true, {}};
  const double tol_psi = ctx.tol(1e-13);
  for (int p = 1; p <= 12; ++p) {
    double mx = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double cc = i / 200.0;  // [0,1)
      for (int j = 0; j < 200; ++j) {
        const double xi = (j + 1) / 200.0;  // (0,1]
        mx = std::max(mx, psi(p, cc, xi));
        if (cc > 0.0 || xi < 1.0) {
          mx = std::max(mx, psi(p, -cc, 1.0 / xi));  // mirrored region
        }
      }
    }
    c.rows.push_back(upper("max Psi_p on admissible region", mx, 0.5, tol_psi,
                           p, 200, 0.0));
  }
  const double tol_rho = ctx.tol(1e-13);
  for (int p = 1; p <= std::min(ctx.opts.p_max, 8); ++p) {
    const int nc = 16;
    const TwoGridReport rep = two_grid_constant(p, nc, EConvention::paper);
    c.rows.push_back(agree("rho(T^(0)) - 1/4", rep.blocks[0].rho - 0.25,
                           tol_rho, p, nc, 2.0 / nc, "paper"));
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

CriterionResult criterion_inverse(const Ctx& ctx) {
  CriterionResult c{3, "inverse inequality on the reduced space + sharpness", true, {}};
  const double tol = ctx.tol(1e-9);
  for (int nc : ctx.n_or({8, 16, 32})) {
    for (int p = 1; p <= std::min(ctx.opts.p_max, 8); ++p) {
      if (p >= nc) continue;
      const SpaceSpec spec = SpaceSpec::reduced(p, nc, 0.0, 1.0);
      const double h = spec.h();
      const RayleighResult r = rayleigh_max(spec, 1);
      const double v = h * r.sqrt_lambda_max;
      c.rows.push_back(upper("h*sqrt(lambda_max) <= 2sqrt(3)", v, kTwoSqrt3,
                             tol, p, nc, h));
      if (2.0 * h * p < 1.0) {
        c.rows.push_back(lower("h*sqrt(lambda_max) >= 1/(2sqrt(2))", v,
                               1.0 / (2.0 * kSqrt2), tol, p, nc, h));
      }
    }
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

CriterionResult criterion_counterexample(const Ctx& ctx) {
  CriterionResult c{4, "full-space counterexample ratio", true, {}};
  const double tol = ctx.tol(1e-10);
  const double h = 0.1;
  double prev = 0.0;
  for (int p = 1; p <= 10; ++p) {
    const CounterexampleRatio r = counterexample_ratio(p, h);
    c.rows.push_back(agree("counterexample rel |formula - quadrature|",
                           (r.formula - r.quadrature) / r.formula, tol, p, 0,
                           h));
    const double scaled = r.formula * h;
    BoundReport inc;
    inc.quantity = "counterexample ratio*h strictly increasing";
    inc.value = scaled;
    inc.bound = prev;
    inc.ratio = (prev > 0.0) ? prev / scaled : 0.0;
    inc.pass = scaled > prev;
    inc.p = p;
    inc.h = h;
    c.rows.push_back(inc);
    prev = scaled;
    if (p >= 3) {
      c.rows.push_back(lower("counterexample ratio*h > 2sqrt(3) (p >= 3)",
                             scaled, kTwoSqrt3, 0.0, p, 0, h));
    }
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

CriterionResult criterion_approximation(const Ctx& ctx) {
  CriterionResult c{5, "approximation constant sqrt(2) h on the reduced space + sharpness", true, {}};
  const double tol = ctx.tol(1e-9);
  for (int n : ctx.n_or({8, 16, 32})) {
    for (int p = 1; p <= std::min(ctx.opts.p_max, 6); ++p) {
      if (p >= n) continue;
      const SpaceSpec spec = SpaceSpec::reduced(p, n, 0.0, 1.0);
      const double h = spec.h();
      for (const TestFunction& tf : approximation_battery()) {
        const CoefVector u = l2_project(tf.f, spec);
        const double err = l2_error(tf.f, u);
        const double sem = function_l2(tf.fprime, 0.0, 1.0, std::max(n, 32), 12);
        c.rows.push_back(upper("L2 error <= sqrt(2) h |u|_H1 [" + tf.name + "]",
                               err, kSqrt2 * h * sem, tol * kSqrt2 * h * sem,
                               p, n, h));
      }
    }
  }
  // sharpness chain for the orthogonal witness (Cor 3 lower, Cor 4 upper)
  const int nc = 8;
  const double hc = 1.0 / nc;
  for (int p = 1; p <= std::min(ctx.opts.p_max, 6); ++p) {
    const WitnessResult w = orthogonal_witness(p, nc);
    c.rows.push_back(agree("witness orthogonality residual", w.ortho_residual,
                           ctx.tol(1e-11), p, nc, hc));
    c.rows.push_back(lower("witness |w|_H1 > 0", w.h1, 1e-8, 0.0, p, nc, hc));
    c.rows.push_back(lower("witness ||w|| >= h/(4sqrt(3)) |w|_H1", w.l2,
                           hc * w.h1 / (4.0 * std::sqrt(3.0)),
                           tol * hc * w.h1, p, nc, hc));
    c.rows.push_back(upper("witness ||w|| <= sqrt(2) h |w|_H1", w.l2,
                           kSqrt2 * hc * w.h1, tol * kSqrt2 * hc * w.h1, p, nc,
                           hc));
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

CriterionResult criterion_mass_nesting(const Ctx& ctx) {
  CriterionResult c{6, "mass nesting u^T M_p u <= u^T M_{p-1} u", true, {}};
  const double tol = ctx.tol(1e-12);
  const int n = 32;
  const double h = 2.0 / n;
  std::mt19937_64 rng(987654321);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int p = 1; p <= std::min(ctx.opts.p_max, 8); ++p) {
    const Circulant mp = mass_circulant(p, h, n);
    const Circulant mm = mass_circulant(p - 1, h, n);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> u(n);
      for (double& v : u) v = normal(rng);
      const std::vector<double> a = mp.apply(u);
      const std::vector<double> b = mm.apply(u);
      double qa = 0.0, qb = 0.0;
      for (int i = 0; i < n; ++i) {
        qa += u[i] * a[i];
        qb += u[i] * b[i];
      }
      worst = std::max(worst, qa / qb);
    }
    c.rows.push_back(upper("max ratio u^T M_p u / u^T M_{p-1} u", worst, 1.0,
                           tol, p, n, h));
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

CriterionResult criterion_gram_agreement(const Ctx& ctx) {
  CriterionResult c{7, "Eulerian circulants vs quadrature Gram matrices", true, {}};
  const int n = 32;
  for (int p = 1; p <= std::min(ctx.opts.p_max, 8); ++p) {
    const SpaceSpec spec = SpaceSpec::periodic(p, n, 0.0, 1.0);
    const double h = spec.h();
    const double mass_diff = max_abs_diff(gram_matrix(spec, 0),
                                          mass_circulant(p, h, n).to_dense());
    c.rows.push_back(agree("|mass circulant - L2 Gram|_max", mass_diff,
                           ctx.tol(1e-12), p, n, h));
    const double stiff_diff =
        max_abs_diff(gram_matrix(spec, 1, true),
                     stiffness_circulant(p, h, n).to_dense());
    c.rows.push_back(agree("|stiffness decomposition - H1o Gram|_max",
                           stiff_diff, ctx.tol(1e-11), p, n, h));
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

CriterionResult criterion_diagonalization(const Ctx& ctx) {
  CriterionResult c{8, "Fourier diagonalization of M, K, D and the prolongation symbol", true, {}};
  const double tol = ctx.tol(1e-10);
  const int n = 32;
  const double h = 2.0 / n;
  for (int p = 1; p <= std::min(ctx.opts.p_max, 5); ++p) {
    const CMatrix md = fourier_conjugate(mass_circulant(p, h, n).to_dense());
    c.rows.push_back(agree("|F^-1 M F - diag(mass symbol)|",
                           diagonalization_residual(md, mass_symbol(p, h, n)),
                           tol, p, n, h));
    const CMatrix kd = fourier_conjugate(stiffness_circulant(p, h, n).to_dense());
    c.rows.push_back(agree(
        "|F^-1 K F - diag(stiffness symbol)|",
        diagonalization_residual(kd,
                                 stiffness_symbol(p, h, n, EConvention::matrix)),
        tol, p, n, h, "matrix"));
    const CMatrix dd = fourier_conjugate(gradient_circulant(h, n).to_dense());
    c.rows.push_back(agree("|F^-1 D F - diag(gradient symbol)|",
                           diagonalization_residual(dd, gradient_symbol(h, n)),
                           tol, p, n, h));
  }
  // prolongation symbol relations, dense at n_c = 16
  const int nc = 16;
  const int nf = 2 * nc;
  for (int p = 1; p <= std::min(ctx.opts.p_max, 5); ++p) {
    const DenseMatrix pr = prolongation(p, nc);
    const ProlongationSymbol ps = prolongation_symbol(p, nc);
    const CMatrix ff = fourier_matrix(nf);
    const CMatrix fc = fourier_matrix(nc);

    // (1/nf) Ff^* P Fc vs the two-nonzero-per-column structure
    CMatrix ffs(nf, std::vector<std::complex<double>>(nf));
    for (int i = 0; i < nf; ++i) {
      for (int j = 0; j < nf; ++j) ffs[i][j] = std::conj(ff[j][i]) / double(nf);
    }
    const CMatrix phat = cmatmul(cmatmul(ffs, to_complex(pr)), fc);
    double res = 0.0;
    for (int i = 0; i < nf; ++i) {
      for (int j = 0; j < nc; ++j) {
        std::complex<double> want = 0.0;
        if (i == j) want = ps.top[j];
        if (i == j + nc) want = ps.bottom[j];
        res = std::max(res, std::abs(phat[i][j] - want));
      }
    }
    c.rows.push_back(agree("|F_f^-1 P F_c - Phat|", res, tol, p, nc, 2.0 / nc));

    // (1/nc) Fc^* P^T Ff vs 2 Phat^*
    CMatrix fcs(nc, std::vector<std::complex<double>>(nc));
    for (int i = 0; i < nc; ++i) {
      for (int j = 0; j < nc; ++j) fcs[i][j] = std::conj(fc[j][i]) / double(nc);
    }
    const CMatrix ptf = cmatmul(cmatmul(fcs, to_complex(transpose(pr))), ff);
    res = 0.0;
    for (int j = 0; j < nc; ++j) {
      for (int i = 0; i < nf; ++i) {
        std::complex<double> want = 0.0;
        if (i == j) want = 2.0 * std::conj(ps.top[j]);
        if (i == j + nc) want = 2.0 * std::conj(ps.bottom[j]);
        res = std::max(res, std::abs(ptf[j][i] - want));
      }
    }
    c.rows.push_back(agree("|F_c^-1 P^T F_f - 2 Phat^*|", res, tol, p, nc,
                           2.0 / nc));
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

CriterionResult criterion_galerkin(const Ctx& ctx) {
  CriterionResult c{9, "Galerkin identity P^T K_fine P = K_coarse", true, {}};
  const double tol = ctx.tol(1e-11);
  for (int nc : ctx.n_or({8, 16, 32})) {
    for (int p = 1; p <= std::min(ctx.opts.p_max, 6); ++p) {
      if (nc <= 2 * p + 1) continue;
      const double hc = 2.0 / nc;
      const DenseMatrix kf = stiffness_circulant(p, hc / 2, 2 * nc).to_dense();
      const DenseMatrix kc = stiffness_circulant(p, hc, nc).to_dense();
      const DenseMatrix pr = prolongation(p, nc);
      const DenseMatrix gal = matmul(transpose(pr), matmul(kf, pr));
      c.rows.push_back(agree("|P^T K_{h/2} P - K_h|_max",
                             max_abs_diff(gal, kc), tol, p, nc, hc));
    }
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

CriterionResult criterion_sobolev_lift(const Ctx& ctx) {
  CriterionResult c{10, "Sobolev lift (q=2) and the composed L2 bound", true, {}};
  const double tol = ctx.tol(1e-9);
  const auto u = [](double x) { return std::cos(2.0 * kPi * x); };
  const auto up = [](double x) { return -2.0 * kPi * std::sin(2.0 * kPi * x); };
  const auto upp = [](double x) {
    return -4.0 * kPi * kPi * std::cos(2.0 * kPi * x);
  };
  for (int n : {8, 16}) {
    const double sem_h2 = function_l2(upp, 0.0, 1.0, std::max(n, 32), 12);
    for (int p = 2; p <= 5; ++p) {
      const double h = 1.0 / n;
      // degree-(p-1) approximant of u' in the reduced space, then its lift
      const SpaceSpec low = SpaceSpec::reduced(p - 1, n, 0.0, 1.0);
      const CoefVector v = l2_project(up, low);
      const CoefVector v_full{SpaceSpec::full(p - 1, n, 0.0, 1.0),
                              to_full_coefs(low, v.values)};
      CoefVector lift = sobolev_lift(v_full, 0.0);
      // integration constant: match the mean of u
      const QuadRule rule = gauss_rule(12);
      const SpaceBasis lift_basis(lift.spec);
      const double mean_gap = integrate_piecewise(
          [&](double x) { return u(x) - lift_basis.spline_value(lift.values, x); },
          0.0, 1.0, std::max(n, 32), rule);
      for (double& w : lift.values) w += mean_gap;

      const double h1_err = seminorm_error(up, lift, 1);
      c.rows.push_back(upper("|u - lift|_H1 <= sqrt(2) h |u|_H2", h1_err,
                             kSqrt2 * h * sem_h2, tol * kSqrt2 * h * sem_h2, p,
                             n, h));

      // composed bound: correct the lift by the L2 projection of the residual
      const SpaceSpec red = SpaceSpec::reduced(p, n, 0.0, 1.0);
      const auto residual = [&](double x) {
        return u(x) - lift_basis.spline_value(lift.values, x);
      };
      const CoefVector w = l2_project(residual, red);
      const double l2_err2 = l2_error(residual, w);
      c.rows.push_back(upper("||u - u_ph||_L2 <= 2 h^2 |u|_H2", l2_err2,
                             2.0 * h * h * sem_h2, tol * 2.0 * h * h * sem_h2,
                             p, n, h));
    }
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

CriterionResult criterion_tensor(const Ctx& ctx) {
  CriterionResult c{11, "tensor-product approximation in two dimensions", true, {}};
  const double tol = ctx.tol(1e-9);
  struct F2 {
    std::string name;
    RealFn2 f, fx, fy;
  };
  const std::vector<F2> battery = {
      {"cos(pi x)cos(pi y)",
       [](double x, double y) { return std::cos(kPi * x) * std::cos(kPi * y); },
       [](double x, double y) { return -kPi * std::sin(kPi * x) * std::cos(kPi * y); },
       [](double x, double y) { return -kPi * std::cos(kPi * x) * std::sin(kPi * y); }},
      {"x(1-x)y(1-y)",
       [](double x, double y) { return x * (1 - x) * y * (1 - y); },
       [](double x, double y) { return (1 - 2 * x) * y * (1 - y); },
       [](double x, double y) { return x * (1 - x) * (1 - 2 * y); }},
      {"exp(x+y)",
       [](double x, double y) { return std::exp(x + y); },
       [](double x, double y) { return std::exp(x + y); },
       [](double x, double y) { return std::exp(x + y); }},
  };
  for (int n : {8, 16}) {
    for (int p : {1, 2, 3}) {
      const SpaceSpec spec = SpaceSpec::reduced(p, n, 0.0, 1.0);
      const double h = spec.h();
      for (const F2& tf : battery) {
        const Tensor2dResult r = tensor2d_error(tf.f, tf.fx, tf.fy, spec);
        c.rows.push_back(upper("2D error <= 2 h |u|_H1 [" + tf.name + "]",
                               r.error, 2.0 * h * r.h1_seminorm,
                               tol * 2.0 * h * r.h1_seminorm, p, n, h));
        c.rows.push_back(upper(
            "2D error <= sqrt(2) h (||du/dy|| + ||du/dx||) [" + tf.name + "]",
            r.error, kSqrt2 * h * (r.dy_norm + r.dx_norm),
            tol * kSqrt2 * h * (r.dy_norm + r.dx_norm), p, n, h));
      }
      // separable member of the tensor space reproduces to quadrature accuracy
      std::mt19937_64 rng(1234 + p * 100 + n);
      std::uniform_real_distribution<double> unif(-1.0, 1.0);
      const SpaceBasis basis(spec);
      std::vector<double> g(spec.dimension());
      for (double& v : g) v = unif(rng);
      const auto gx = [&](double x) { return basis.spline_value(g, x); };
      const auto gdx = [&](double x) { return basis.spline_value(g, x, 1); };
      const Tensor2dResult rr = tensor2d_error(
          [&](double x, double y) { return gx(x) * gx(y); },
          [&](double x, double y) { return gdx(x) * gx(y); },
          [&](double x, double y) { return gx(x) * gdx(y); }, spec);
      c.rows.push_back(upper("2D separable member reproduction", rr.error,
                             0.0, ctx.tol(1e-10), p, n, h));
    }
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

CriterionResult criterion_dimensions(const Ctx& ctx) {
  CriterionResult c{12, "dimensions per Table 1; reduced boundary derivatives vanish", true, {}};
  for (int n : ctx.n_or({8, 16, 32})) {
    for (int p = 1; p <= 10; ++p) {
      {
        const SpaceSpec full = SpaceSpec::full(p, n, 0.0, 1.0);
        c.rows.push_back(agree("dim(full) - (n+p)",
                               full.dimension() - (n + p), 0.0, p, n, full.h()));
      }
      if (p < n) {
        const SpaceSpec per = SpaceSpec::periodic(p, n, 0.0, 1.0);
        c.rows.push_back(agree("dim(periodic) - n", per.dimension() - n, 0.0,
                               p, n, per.h()));
        const SpaceSpec red = SpaceSpec::reduced(p, n, 0.0, 1.0);
        const int want = (p % 2 == 0) ? n : n + 1;
        c.rows.push_back(agree("dim(reduced) - Table 1",
                               red.dimension() - want, 0.0, p, n, red.h()));
        c.rows.push_back(agree("reduced index count - dimension",
                               (red.index_hi() - red.index_lo() + 1) -
                                   red.dimension(),
                               0.0, p, n, red.h()));
        if (p > 2) {
          // constraint-eliminated space: numerical null space must match the
          // counting formula (throws on mismatch)
          const SpaceSpec rq = SpaceSpec::reduced_q(p, n, 0.0, 1.0, 2);
          elimination_basis(rq);
          const int expected = n + p - 2 * ((p - 2 + 1) / 2);
          c.rows.push_back(agree("dim(reduced_q, q=2) - formula",
                                 rq.dimension() - expected, 0.0, p, n, rq.h()));
        }
      }
    }
  }
  // vanishing odd boundary derivatives of random reduced members, measured in
  // the grid-normalized form h^l * d^l (the raw derivative scales as h^-l and
  // would drown in rounding noise at large l)
  const double tol = ctx.tol(1e-11);
  std::mt19937_64 rng(555);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int n : ctx.n_or({8, 16, 32})) {
    for (int p = 1; p <= 10; ++p) {
      if (p >= n) continue;
      const SpaceSpec red = SpaceSpec::reduced(p, n, 0.0, 1.0);
      std::vector<double> coefs(red.dimension());
      for (double& v : coefs) v = normal(rng);
      double coef_scale = 1.0;
      for (double v : coefs) coef_scale = std::max(coef_scale, std::abs(v));
      const double h = red.h();
      double worst = 0.0;
      for (int l = 1; l < p; l += 2) {
        const double da = boundary_derivative(red, coefs, l, Endpoint::left);
        const double db = boundary_derivative(red, coefs, l, Endpoint::right);
        const double hl = std::pow(h, l);
        worst = std::max({worst, std::abs(da) * hl, std::abs(db) * hl});
      }
      c.rows.push_back(agree("max_l |h^l d^l u(endpoint)| over odd l < p",
                             worst / coef_scale, tol, p, n, h));
    }
  }
  for (const auto& r : c.rows) c.pass = c.pass && r.pass;
  return c;
}

}  // namespace

bool VerifyResult::all_pass() const {
  for (const auto& c : criteria) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<BoundReport> VerifyResult::all_rows() const {
  std::vector<BoundReport> rows;
  for (const auto& c : criteria) {
    rows.insert(rows.end(), c.rows.begin(), c.rows.end());
  }
  return rows;
}

VerifyResult run_verification(const VerifyOptions& opts) {
  const Ctx ctx{opts};
  VerifyResult out;
  out.criteria.push_back(criterion_two_grid(ctx));
  out.criteria.push_back(criterion_psi(ctx));
  out.criteria.push_back(criterion_inverse(ctx));
  out.criteria.push_back(criterion_counterexample(ctx));
  out.criteria.push_back(criterion_approximation(ctx));
  out.criteria.push_back(criterion_mass_nesting(ctx));
  out.criteria.push_back(criterion_gram_agreement(ctx));
  out.criteria.push_back(criterion_diagonalization(ctx));
  out.criteria.push_back(criterion_galerkin(ctx));
  out.criteria.push_back(criterion_sobolev_lift(ctx));
  out.criteria.push_back(criterion_tensor(ctx));
  out.criteria.push_back(criterion_dimensions(ctx));
  return out;
}

}  // namespace maxsplines
