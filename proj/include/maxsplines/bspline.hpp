#pragma once

#include <array>
#include <vector>

// Cardinal B-splines on integer knots and the Eulerian-number combinatorics
// behind the exact mass-matrix entries. psi_p^{(i)} has support [i, i+p+1];
// the degree-0 spline is the characteristic function of (i, i+1].

namespace maxsplines::bspline {

inline constexpr int kMaxDegree = 20;

// Which half-open convention the degree-0 splines use. `left` is the native
// (i, i+1] convention; `right` ([i, i+1)) exists for one-sided evaluation at
// knots from the right, e.g. boundary derivatives at the left endpoint.
enum class HalfOpen { left, right };

// Normalized Eulerian row b(n,k) = E(n,k)/n!, k = 0..n. The recurrence is
// applied on the normalized values so rows stay in [0,1] for any n.
std::vector<double> eulerian_row_normalized(int n);

// Values of all p+1 cardinal splines whose support contains t:
// v[k] = psi_p^{(first+k)}(t), k = 0..p.
struct ActiveValues {
  int first = 0;
  int count = 0;
  std::array<double, kMaxDegree + 1> v{};
};

ActiveValues cardinal_active(int p, double t, HalfOpen side = HalfOpen::left);

// r-th derivative (with respect to t) of the p+1 active splines, computed by
// iterating the difference relation d/dt psi_p^{(i)} = psi_{p-1}^{(i)} -
// psi_{p-1}^{(i+1)}. r = 0 falls back to plain values; r > p yields zeros.
ActiveValues cardinal_active_derivative(int p, int r, double t,
                                        HalfOpen side = HalfOpen::left);

// psi_p^{(i)}(x)
double cardinal_eval(int p, int i, double x);

// d^r/dx^r psi_p^{(i)}(x) for r >= 1 (throws for r < 1); zero for r > p.
double cardinal_derivative(int p, int i, double x, int r);

}  // namespace maxsplines::bspline
