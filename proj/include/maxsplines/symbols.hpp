#pragma once

#include <array>
#include <complex>
#include <vector>

#include "maxsplines/circulant.hpp"
#include "maxsplines/dense.hpp"

// Exact Fourier diagonalization of the circulant operators. The Fourier
// vector at frequency j has entries exp(2*pi*I*i*j/n); with F collecting
// those columns, F^{-1} = (1/n) F^*. All closed-form symbols below are
// evaluated at the canonical angles theta_j = 2*pi*j/n.

namespace maxsplines {

enum class EConvention { paper, matrix };

// Eigenvalue sequence of a circulant operator.
struct SymbolSeq {
  int n = 0;
  std::vector<std::complex<double>> values;
};

// Symbol of an arbitrary circulant by direct evaluation of the eigenvalue
// sum (oracle path; the closed forms below are the production path).
SymbolSeq symbol_of(const Circulant& c);

// Mass symbol: h * sum_l b(2p+1, p+l) cos(l theta_j); strictly positive and
// monotone in cos(theta_j).
std::vector<double> mass_symbol(int p, double h, int n);

// Gradient symbol d_j = (1 - exp(I theta_j))/h.
std::vector<std::complex<double>> gradient_symbol(double h, int n);

// Stiffness symbol |d_j|^2 m_{p-1,j} + e_j. The rank-one term e has a single
// nonzero entry at j = 0 whose value depends on the convention: `paper` uses
// h, `matrix` uses h^2*n (the actual eigenvalue of E = h^2*ones*ones^T);
// the two differ by the factor h*n = |domain|.
std::vector<double> stiffness_symbol(int p, double h, int n, EConvention conv);

// Symbol of the prolongation (2n x n, two nonzeros per column): per column j
// the values at rows j (top) and j+n (bottom).
struct ProlongationSymbol {
  int n_coarse = 0;
  std::vector<std::complex<double>> top, bottom;
};
ProlongationSymbol prolongation_symbol(int p, int n_coarse);

// Coefficients a_{p,0..p} of the polynomial g_p with
// h * g_p(1 + cos theta_j) = mass symbol value at frequency j.
std::vector<double> g_poly_coeffs(int p);

// Spectral radius of the rank-one two-grid block in closed form:
// ((1+c)^{p-1} + (1-c)^{p-1} xi) / (2((1+c)^p + (1-c)^p xi)).
double psi(int p, double c, double xi);

// One 2x2 frequency block of the symbol of the two-grid error operator,
// normalized by the fine grid size so that rho equals Psi_p for l >= 1 and
// exactly 1/4 at l = 0.
struct TwoGridBlock {
  int l = 0;
  std::array<std::complex<double>, 4> t{};  // row-major 2x2
  double rho = 0.0;
  double c = 0.0;    // cos of the fine-grid angle at frequency l
  double xi = 0.0;   // mass-symbol ratio m_{p-1}(l+n)/m_{p-1}(l)
};

struct TwoGridReport {
  int p = 0;
  int n_coarse = 0;
  EConvention convention = EConvention::matrix;
  double q = 0.0;
  std::vector<TwoGridBlock> blocks;
};

// Two-grid approximation constant on (-1,1): coarse grid of n_coarse
// elements (h = 2/n_coarse), fine grid its dyadic refinement. q is the
// square root of the largest block spectral radius.
TwoGridReport two_grid_constant(int p, int n_coarse, EConvention conv);

// ---- dense Fourier oracles (small n, used by tests and the acceptance
// suite to certify the diagonalization claims) ----
using CMatrix = std::vector<std::vector<std::complex<double>>>;

CMatrix fourier_matrix(int n);
CMatrix to_complex(const DenseMatrix& m);
CMatrix cmatmul(const CMatrix& a, const CMatrix& b);
// (1/n) F^* C F
CMatrix fourier_conjugate(const DenseMatrix& c);
// max |A - diag(expected)|
double diagonalization_residual(const CMatrix& a,
                                const std::vector<std::complex<double>>& d);
double diagonalization_residual(const CMatrix& a,
                                const std::vector<double>& d);

}  // namespace maxsplines
