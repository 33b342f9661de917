#pragma once

#include "maxsplines/circulant.hpp"
#include "maxsplines/dense.hpp"
#include "maxsplines/spaces.hpp"

namespace maxsplines {

// Periodic mass matrix with the exact Eulerian-number entries
// m^{(j)} = h * E(2p+1, p+j)/(2p+1)! for |j| <= p. Requires n > 2p+1 so the
// bandwidth fits without cyclic aliasing.
Circulant mass_circulant(int p, double h, int n);

// Periodic gradient matrix: 1/h on the diagonal, -1/h on the first cyclic
// subdiagonal.
Circulant gradient_circulant(double h, int n);

// Periodic stiffness matrix assembled from the decomposition
// K = D M_{p-1} D^T + E with E = h^2 * ones*ones^T, never by quadrature.
Circulant stiffness_circulant(int p, double h, int n);

// Subdivision/embedding matrix (2n x n): column j carries the mask
// 2^{-p} * binom(p+1, l) at fine rows (2j+l) mod 2n.
DenseMatrix prolongation(int p, int n_coarse);

// Gram matrix (d^r b_i, d^r b_j)_{L2(a,b)} of any space kind by piecewise
// Gauss quadrature with quad_m points per element (default p+2, must be at
// least p+1). With h1circ set (requires r == 1) the rank-one mean-value term
// (int b_i)(int b_j) is added, yielding the H1-circle Gram.
DenseMatrix gram_matrix(const SpaceSpec& spec, int r, bool h1circ = false,
                        int quad_m = 0);

// Integrals of all basis functions over (a,b) by quadrature.
std::vector<double> basis_integrals(const SpaceSpec& spec, int quad_m = 0);

}  // namespace maxsplines
