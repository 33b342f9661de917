#pragma once

#include <span>
#include <vector>

#include "maxsplines/dense.hpp"

namespace maxsplines {

// n x n circulant operator stored by its first column: entry (i,j) equals
// col[(i-j) mod n].
struct Circulant {
  int n = 0;
  std::vector<double> col;

  std::vector<double> apply(std::span<const double> x) const;
  DenseMatrix to_dense() const;
};

// First column of the product of two circulants (cyclic convolution).
Circulant conv(const Circulant& a, const Circulant& b);
// First column of the transpose.
Circulant transpose(const Circulant& a);

}  // namespace maxsplines
