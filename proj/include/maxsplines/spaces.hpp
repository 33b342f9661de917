#pragma once

#include <span>
#include <utility>
#include <vector>

#include "maxsplines/bspline.hpp"
#include "maxsplines/dense.hpp"

namespace maxsplines {

// The four space families over a uniform grid on (a,b):
//   full      S_{p,h}:  all splines of degree p with C^{p-1} continuity
//   periodic  S^_{p,h}: derivatives up to order p-1 match at the endpoints
//   reduced   S~_{p,h}: odd derivatives of order < p vanish at both endpoints
//   reduced_q S~^(q):   derivatives of order 2l+q < p vanish at both endpoints
enum class SpaceKind { full, periodic, reduced, reduced_q };

enum class Endpoint { left, right };

struct SpaceSpec {
  int p = 0;
  int n = 0;
  double a = 0.0;
  double b = 1.0;
  SpaceKind kind = SpaceKind::full;
  int q = 1;  // only meaningful for reduced_q

  static SpaceSpec full(int p, int n, double a, double b);
  static SpaceSpec periodic(int p, int n, double a, double b);
  static SpaceSpec reduced(int p, int n, double a, double b);
  static SpaceSpec reduced_q(int p, int n, double a, double b, int q);

  double h() const { return (b - a) / n; }
  int dimension() const;

  // Signed index range: full starts at -p (the leftmost translate whose
  // support meets the domain), periodic at 0, reduced at -ceil(p/2). For
  // reduced_q (no explicit basis) indices are the ordinals 0..dim-1 of the
  // constraint-eliminated working basis.
  int index_lo() const;
  int index_hi() const;  // inclusive

  bool operator==(const SpaceSpec&) const = default;
};

// Every basis function is a finite combination of the full-space B-splines
// phi^{(-p)}..phi^{(n-1)}; entries are (position = shift + p, weight).
using CombinationRow = std::vector<std::pair<int, double>>;

// Resolved basis of a space: combination rows plus the reverse map used by
// assembly loops and spline evaluation.
class SpaceBasis {
 public:
  explicit SpaceBasis(const SpaceSpec& spec);

  const SpaceSpec& spec() const { return spec_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  const CombinationRow& row(int ordinal) const { return rows_[ordinal]; }
  // ordinals containing the full-space position pos = shift + p
  const CombinationRow& by_position(int pos) const { return by_pos_[pos]; }

  // All basis functions with support at x: pairs (ordinal, d^r value).
  std::vector<std::pair<int, double>> eval_active(
      double x, int r = 0,
      bspline::HalfOpen side = bspline::HalfOpen::left) const;

  double basis_value(int ordinal, double x, int r = 0,
                     bspline::HalfOpen side = bspline::HalfOpen::left) const;
  double spline_value(std::span<const double> coefs, double x, int r = 0,
                      bspline::HalfOpen side = bspline::HalfOpen::left) const;

 private:
  SpaceSpec spec_;
  std::vector<CombinationRow> rows_;
  std::vector<CombinationRow> by_pos_;
};

// Constraint-eliminated orthonormal basis of reduced_q spaces as columns of
// an (n+p) x dim matrix over the full-space basis. Memoized; deterministic.
const DenseMatrix& elimination_basis(const SpaceSpec& spec);

// Value (or r-th derivative) of the basis function with signed index i.
// Periodic indices wrap; other kinds reject out-of-range indices.
double basis_eval(const SpaceSpec& spec, int i, double x, int r = 0);

// One-sided l-th derivative of the spline at an endpoint (from inside the
// interval), so jumps of the highest derivative are resolved correctly.
double boundary_derivative(const SpaceSpec& spec, std::span<const double> coefs,
                           int l, Endpoint end);

// Coefficients over the full space S_{p,h}; rejects periodic specs.
std::vector<double> to_full_coefs(const SpaceSpec& spec,
                                  std::span<const double> coefs);

// Open-knot-vector (clamped) basis of S_{p,h}(a,b), the classical basis that
// interpolates at the endpoints. Minimal tabulator for comparison plots; the
// translate basis above is the working one everywhere else.
int clamped_dimension(int p, int n);
double clamped_basis_value(int p, int n, double a, double b, int i, double x);

}  // namespace maxsplines
