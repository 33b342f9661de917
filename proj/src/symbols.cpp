#include "maxsplines/symbols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "maxsplines/bspline.hpp"

namespace maxsplines {

namespace {
constexpr double kPi = std::numbers::pi;
}

SymbolSeq symbol_of(const Circulant& c) {
  SymbolSeq s;
  s.n = c.n;
  s.values.resize(c.n);
  for (int j = 0; j < c.n; ++j) {
    std::complex<double> v = 0.0;
    for (int l = 0; l < c.n; ++l) {
      if (c.col[l] == 0.0) continue;
      const double th = 2.0 * kPi * j * l / c.n;
      // eigenvalue of the shift: entry col[l] sits at row offset +l
      v += c.col[l] * std::complex<double>(std::cos(th), -std::sin(th));
    }
    s.values[j] = v;
  }
  return s;
}

std::vector<double> mass_symbol(int p, double h, int n) {
  if (p < 0 || p > bspline::kMaxDegree) {
    throw std::invalid_argument("mass_symbol: degree out of range");
  }
  if (n <= 2 * p + 1) {
    throw std::invalid_argument("mass_symbol: need n > 2p+1");
  }
  const std::vector<double> row = bspline::eulerian_row_normalized(2 * p + 1);
  std::vector<double> values(n);
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * kPi * j / n;
    double s = row[p];
    for (int l = 1; l <= p; ++l) {
      s += (row[p + l] + row[p - l]) * std::cos(l * th);
    }
    values[j] = h * s;
  }
  return values;
}

std::vector<std::complex<double>> gradient_symbol(double h, int n) {
  std::vector<std::complex<double>> values(n);
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * kPi * j / n;
    values[j] = (1.0 - std::complex<double>(std::cos(th), std::sin(th))) / h;
  }
  return values;
}

std::vector<double> stiffness_symbol(int p, double h, int n,
                                     EConvention conv) {
  if (p < 1) throw std::invalid_argument("stiffness_symbol: need p >= 1");
  const std::vector<double> mm = mass_symbol(p - 1, h, n);
  std::vector<double> values(n);
  for (int j = 0; j < n; ++j) {
    const double s = std::sin(kPi * j / n);
    const double dd = 4.0 * s * s / (h * h);  // |d_j|^2
    values[j] = dd * mm[j];
  }
  values[0] += (conv == EConvention::paper) ? h : h * h * n;
  return values;
}

ProlongationSymbol prolongation_symbol(int p, int n_coarse) {
  ProlongationSymbol ps;
  ps.n_coarse = n_coarse;
  ps.top.resize(n_coarse);
  ps.bottom.resize(n_coarse);
  for (int j = 0; j < n_coarse; ++j) {
    for (int half : {0, 1}) {
      // fine-grid angle at frequency j + half*n_coarse
      const double th = kPi * (j + half * n_coarse) / n_coarse;
      const std::complex<double> base =
          1.0 + std::complex<double>(std::cos(th), -std::sin(th));
      const std::complex<double> v =
          std::ldexp(1.0, -p - 1) * std::pow(base, p + 1);
      (half == 0 ? ps.top[j] : ps.bottom[j]) = v;
    }
  }
  return ps;
}

std::vector<double> g_poly_coeffs(int p) {
  if (p < 1) throw std::invalid_argument("g_poly_coeffs: need p >= 1");
  std::vector<double> a{1.0};  // g_0 == 1
  for (int m = 1; m <= p; ++m) {
    std::vector<double> next(m + 1, 0.0);
    const double den = m + 2.0 * m * m;
    for (int j = 0; j <= m; ++j) {
      const double pa = (j >= 1 && j - 1 < static_cast<int>(a.size()))
                            ? a[j - 1]
                            : 0.0;
      const double pb = (j < static_cast<int>(a.size())) ? a[j] : 0.0;
      const double pc = (j + 1 < static_cast<int>(a.size())) ? a[j + 1] : 0.0;
      const double A = (1.0 - j + m) * (1.0 - j + m) / den;
      const double B = (4.0 * j * (m - j) + j + m) / den;
      const double C = (2.0 + 6.0 * j + 4.0 * j * j) / den;
      next[j] = A * pa + B * pb + C * pc;
    }
    a = std::move(next);
  }
  return a;
}

double psi(int p, double c, double xi) {
  if (!(xi > 0.0)) throw std::invalid_argument("psi: need xi > 0");
  if (!(c > -1.0 && c < 1.0)) {
    throw std::invalid_argument("psi: need c in (-1,1)");
  }
  const double up = std::pow(1.0 + c, p - 1);
  const double um = std::pow(1.0 - c, p - 1);
  return (up + um * xi) / (2.0 * ((1.0 + c) * up + (1.0 - c) * um * xi));
}

TwoGridReport two_grid_constant(int p, int n_coarse, EConvention conv) {
  if (p < 1) throw std::invalid_argument("two_grid_constant: need p >= 1");
  if (p >= n_coarse) {
    throw std::invalid_argument(
        "two_grid_constant: coarse grid too coarse (need p < n)");
  }
  const double hc = 2.0 / n_coarse;  // domain fixed to (-1,1)
  const double hf = hc / 2.0;
  const int nf = 2 * n_coarse;

  const std::vector<double> mm = mass_symbol(p - 1, hf, nf);
  const std::vector<double> kk = stiffness_symbol(p, hf, nf, conv);
  const ProlongationSymbol ps = prolongation_symbol(p, n_coarse);

  TwoGridReport report;
  report.p = p;
  report.n_coarse = n_coarse;
  report.convention = conv;
  report.blocks.reserve(n_coarse);

  double max_rho = 0.0;
  for (int l = 0; l < n_coarse; ++l) {
    const int i0 = l;
    const int i1 = l + n_coarse;
    const std::complex<double> p0 = ps.top[l];
    const std::complex<double> p1 = ps.bottom[l];
    const double denom =
        std::norm(p0) * kk[i0] + std::norm(p1) * kk[i1];

    TwoGridBlock blk;
    blk.l = l;
    blk.c = std::cos(kPi * l / n_coarse);
    blk.xi = mm[i1] / mm[i0];
    const double scale = 1.0 / (hf * hf);
    blk.t[0] = scale * mm[i0] / kk[i0] * (1.0 - std::norm(p0) * kk[i0] / denom);
    blk.t[1] = scale * mm[i0] / kk[i0] * (-p0 * std::conj(p1) * kk[i1] / denom);
    blk.t[2] = scale * mm[i1] / kk[i1] * (-p1 * std::conj(p0) * kk[i0] / denom);
    blk.t[3] = scale * mm[i1] / kk[i1] * (1.0 - std::norm(p1) * kk[i1] / denom);

    if (l == 0) {
      // p1 vanishes, so the block is diagonal
      blk.rho = std::max(std::abs(blk.t[0]), std::abs(blk.t[3]));
    } else if (1.0 - std::abs(blk.c) < 1e-6) {
      // the closed form avoids cancellation in (1 +- z)^(2p)
      blk.rho = psi(p, blk.c, blk.xi);
    } else {
      // rank-one block: spectral radius equals |trace|
      blk.rho = std::abs(blk.t[0] + blk.t[3]);
    }
    max_rho = std::max(max_rho, blk.rho);
    report.blocks.push_back(blk);
  }
  report.q = std::sqrt(max_rho);
  return report;
}

CMatrix fourier_matrix(int n) {
  CMatrix f(n, std::vector<std::complex<double>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double th = 2.0 * kPi * i * j / n;
      f[i][j] = std::complex<double>(std::cos(th), std::sin(th));
    }
  }
  return f;
}

CMatrix to_complex(const DenseMatrix& m) {
  CMatrix c(m.rows, std::vector<std::complex<double>>(m.cols));
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) c[i][j] = m(i, j);
  }
  return c;
}

CMatrix cmatmul(const CMatrix& a, const CMatrix& b) {
  const int r = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int c = static_cast<int>(b[0].size());
  CMatrix out(r, std::vector<std::complex<double>>(c, 0.0));
  for (int i = 0; i < r; ++i) {
    for (int m = 0; m < k; ++m) {
      const std::complex<double> av = a[i][m];
      if (av == 0.0) continue;
      for (int j = 0; j < c; ++j) out[i][j] += av * b[m][j];
    }
  }
  return out;
}

CMatrix fourier_conjugate(const DenseMatrix& c) {
  const int n = c.rows;
  const CMatrix f = fourier_matrix(n);
  CMatrix fstar(n, std::vector<std::complex<double>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) fstar[i][j] = std::conj(f[j][i]) / double(n);
  }
  return cmatmul(cmatmul(fstar, to_complex(c)), f);
}

double diagonalization_residual(const CMatrix& a,
                                const std::vector<std::complex<double>>& d) {
  double r = 0.0;
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    for (int j = 0; j < static_cast<int>(a[i].size()); ++j) {
      const std::complex<double> want = (i == j) ? d[i] : 0.0;
      r = std::max(r, std::abs(a[i][j] - want));
    }
  }
  return r;
}

double diagonalization_residual(const CMatrix& a, const std::vector<double>& d) {
  std::vector<std::complex<double>> cd(d.begin(), d.end());
  return diagonalization_residual(a, cd);
}

}  // namespace maxsplines
