#include "maxsplines/spaces.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace maxsplines {

namespace {

void validate_common(int p, int n, double a, double b) {
  if (p < 0 || p > bspline::kMaxDegree) {
    throw std::invalid_argument("SpaceSpec: degree must be in [0, 20]");
  }
  if (n < 1) throw std::invalid_argument("SpaceSpec: need n >= 1");
  if (!(a < b)) throw std::invalid_argument("SpaceSpec: need a < b");
}

void validate_grid_condition(int p, int n) {
  // hp < b-a, i.e. no basis function straddles both endpoints
  if (p >= n) {
    throw std::invalid_argument("SpaceSpec: grid too coarse, need h*p < b-a");
  }
}

// number of boundary constraints per endpoint for reduced_q: #{l>=0: 2l+q<p}
int constraints_per_end(int p, int q) {
  if (p <= q) return 0;
  return (p - q + 1) / 2;
}

}  // namespace

SpaceSpec SpaceSpec::full(int p, int n, double a, double b) {
  validate_common(p, n, a, b);
  return SpaceSpec{p, n, a, b, SpaceKind::full, 1};
}

SpaceSpec SpaceSpec::periodic(int p, int n, double a, double b) {
  validate_common(p, n, a, b);
  validate_grid_condition(p, n);
  return SpaceSpec{p, n, a, b, SpaceKind::periodic, 1};
}

SpaceSpec SpaceSpec::reduced(int p, int n, double a, double b) {
  validate_common(p, n, a, b);
  validate_grid_condition(p, n);
  return SpaceSpec{p, n, a, b, SpaceKind::reduced, 1};
}

SpaceSpec SpaceSpec::reduced_q(int p, int n, double a, double b, int q) {
  validate_common(p, n, a, b);
  validate_grid_condition(p, n);
  if (q < 1) throw std::invalid_argument("SpaceSpec: need q >= 1");
  return SpaceSpec{p, n, a, b, SpaceKind::reduced_q, q};
}

int SpaceSpec::dimension() const {
  switch (kind) {
    case SpaceKind::full: return n + p;
    case SpaceKind::periodic: return n;
    case SpaceKind::reduced: return (p % 2 == 0) ? n : n + 1;
    case SpaceKind::reduced_q: return n + p - 2 * constraints_per_end(p, q);
  }
  return 0;
}

int SpaceSpec::index_lo() const {
  switch (kind) {
    case SpaceKind::full: return -p;
    case SpaceKind::periodic: return 0;
    case SpaceKind::reduced: return -((p + 1) / 2);
    case SpaceKind::reduced_q: return 0;
  }
  return 0;
}

int SpaceSpec::index_hi() const { return index_lo() + dimension() - 1; }

namespace {

// the cardinal shifts composing the reduced basis function with signed index i
std::vector<int> reduced_members(int p, int n, int i) {
  const std::set<int> all{-i - p - 1, i, 2 * n - i - p - 1};
  std::vector<int> out;
  for (int l : all) {
    if (-p <= l && l <= n - 1) out.push_back(l);
  }
  return out;
}

// One-sided derivative values of the full-space basis at an endpoint, in the
// cardinal coordinate t = (x-a)/h (multiply by h^-r for x-derivatives).
bspline::ActiveValues endpoint_active(const SpaceSpec& spec, int r,
                                      Endpoint end) {
  const double t = (end == Endpoint::left) ? 0.0 : static_cast<double>(spec.n);
  const auto side = (end == Endpoint::left) ? bspline::HalfOpen::right
                                            : bspline::HalfOpen::left;
  return bspline::cardinal_active_derivative(spec.p, r, t, side);
}

DenseMatrix build_elimination(const SpaceSpec& spec) {
  const int p = spec.p;
  const int n = spec.n;
  const int full_dim = n + p;
  const int per_end = constraints_per_end(p, spec.q);
  const int n_constraints = 2 * per_end;
  if (n_constraints == 0) return DenseMatrix::identity(full_dim);

  // constraint rows: d^{2l+q} of every full basis function at each endpoint,
  // in cardinal-coordinate derivatives (the common h^-d factor drops out)
  DenseMatrix c(n_constraints, full_dim);
  int row = 0;
  for (Endpoint end : {Endpoint::left, Endpoint::right}) {
    for (int l = 0; 2 * l + spec.q < p; ++l) {
      const int d = 2 * l + spec.q;
      const auto av = endpoint_active(spec, d, end);
      for (int k = 0; k < av.count; ++k) {
        const int pos = av.first + k + p;
        if (pos >= 0 && pos < full_dim) c(row, pos) = av.v[k];
      }
      // scale the row to unit norm
      double s = 0.0;
      for (int j = 0; j < full_dim; ++j) s += c(row, j) * c(row, j);
      s = std::sqrt(s);
      if (s > 0.0) {
        for (int j = 0; j < full_dim; ++j) c(row, j) /= s;
      }
      ++row;
    }
  }

  DenseMatrix basis = nullspace(c, 1e-13);
  if (basis.cols != spec.dimension()) {
    throw std::runtime_error(
        "elimination_basis: numerical null-space dimension " +
        std::to_string(basis.cols) + " does not match expected " +
        std::to_string(spec.dimension()));
  }
  return basis;
}

struct SpecKey {
  int p, n, q;
  double a, b;
  auto operator<=>(const SpecKey&) const = default;
};

}  // namespace

const DenseMatrix& elimination_basis(const SpaceSpec& spec) {
  if (spec.kind != SpaceKind::reduced_q) {
    throw std::invalid_argument("elimination_basis: reduced_q specs only");
  }
  static std::mutex mu;
  static std::map<SpecKey, DenseMatrix> cache;
  const SpecKey key{spec.p, spec.n, spec.q, spec.a, spec.b};
  std::scoped_lock lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, build_elimination(spec)).first;
  }
  return it->second;
}

SpaceBasis::SpaceBasis(const SpaceSpec& spec) : spec_(spec) {
  const int p = spec.p;
  const int n = spec.n;
  const int dim = spec.dimension();
  rows_.resize(dim);
  by_pos_.resize(n + p);

  switch (spec.kind) {
    case SpaceKind::full:
      for (int k = 0; k < dim; ++k) rows_[k] = {{k, 1.0}};
      break;
    case SpaceKind::periodic:
      for (int i = 0; i < n; ++i) {
        rows_[i] = {{i + p, 1.0}};
        if (i >= n - p) rows_[i].push_back({i - n + p, 1.0});
      }
      break;
    case SpaceKind::reduced:
      for (int k = 0; k < dim; ++k) {
        const int i = spec.index_lo() + k;
        for (int l : reduced_members(p, n, i)) rows_[k].push_back({l + p, 1.0});
      }
      break;
    case SpaceKind::reduced_q: {
      const DenseMatrix& e = elimination_basis(spec);
      for (int k = 0; k < dim; ++k) {
        for (int pos = 0; pos < n + p; ++pos) {
          if (e(pos, k) != 0.0) rows_[k].push_back({pos, e(pos, k)});
        }
      }
      break;
    }
  }

  for (int k = 0; k < dim; ++k) {
    for (const auto& [pos, w] : rows_[k]) by_pos_[pos].push_back({k, w});
  }
}

std::vector<std::pair<int, double>> SpaceBasis::eval_active(
    double x, int r, bspline::HalfOpen side) const {
  const double t = (x - spec_.a) / spec_.h();
  const auto av = bspline::cardinal_active_derivative(spec_.p, r, t, side);
  const double scale = std::pow(1.0 / spec_.h(), r);
  std::vector<std::pair<int, double>> out;
  for (int k = 0; k < av.count; ++k) {
    if (av.v[k] == 0.0) continue;
    const int pos = av.first + k + spec_.p;
    if (pos < 0 || pos >= static_cast<int>(by_pos_.size())) continue;
    for (const auto& [ordinal, w] : by_pos_[pos]) {
      out.push_back({ordinal, w * av.v[k] * scale});
    }
  }
  return out;
}

double SpaceBasis::basis_value(int ordinal, double x, int r,
                               bspline::HalfOpen side) const {
  const double t = (x - spec_.a) / spec_.h();
  const auto av = bspline::cardinal_active_derivative(spec_.p, r, t, side);
  const double scale = std::pow(1.0 / spec_.h(), r);
  double s = 0.0;
  for (const auto& [pos, w] : rows_[ordinal]) {
    const int k = pos - spec_.p - av.first;
    if (k >= 0 && k < av.count) s += w * av.v[k];
  }
  return s * scale;
}

double SpaceBasis::spline_value(std::span<const double> coefs, double x, int r,
                                bspline::HalfOpen side) const {
  if (static_cast<int>(coefs.size()) != dimension()) {
    throw std::invalid_argument("spline_value: coefficient count mismatch");
  }
  double s = 0.0;
  for (const auto& [ordinal, v] : eval_active(x, r, side)) {
    s += coefs[ordinal] * v;
  }
  return s;
}

double basis_eval(const SpaceSpec& spec, int i, double x, int r) {
  int ordinal;
  if (spec.kind == SpaceKind::periodic) {
    ordinal = ((i % spec.n) + spec.n) % spec.n;  // indices wrap
  } else {
    if (i < spec.index_lo() || i > spec.index_hi()) {
      throw std::out_of_range("basis_eval: index out of range");
    }
    ordinal = i - spec.index_lo();
  }
  const SpaceBasis basis(spec);
  return basis.basis_value(ordinal, x, r);
}

double boundary_derivative(const SpaceSpec& spec, std::span<const double> coefs,
                           int l, Endpoint end) {
  if (l < 0 || l > spec.p) {
    throw std::invalid_argument("boundary_derivative: need 0 <= l <= p");
  }
  if (static_cast<int>(coefs.size()) != spec.dimension()) {
    throw std::invalid_argument("boundary_derivative: coefficient mismatch");
  }
  const SpaceBasis basis(spec);
  const auto av = endpoint_active(spec, l, end);
  const double scale = std::pow(1.0 / spec.h(), l);
  double s = 0.0;
  for (int k = 0; k < av.count; ++k) {
    if (av.v[k] == 0.0) continue;
    const int pos = av.first + k + spec.p;
    if (pos < 0 || pos >= spec.n + spec.p) continue;
    for (const auto& [ordinal, w] : basis.by_position(pos)) {
      s += coefs[ordinal] * w * av.v[k];
    }
  }
  return s * scale;
}

int clamped_dimension(int p, int n) { return n + p; }

double clamped_basis_value(int p, int n, double a, double b, int i, double x) {
  if (p < 0 || p > bspline::kMaxDegree || n < 1) {
    throw std::invalid_argument("clamped_basis_value: bad parameters");
  }
  if (i < 0 || i >= n + p) {
    throw std::out_of_range("clamped_basis_value: index out of range");
  }
  if (x < a || x > b) return 0.0;
  const double h = (b - a) / n;
  // open knot vector: a repeated p+1 times, interior knots, b repeated p+1
  const int m = n + 2 * p + 1;  // number of knots
  const auto knot = [&](int k) {
    if (k <= p) return a;
    if (k >= n + p) return b;
    return a + (k - p) * h;
  };
  (void)m;
  // span index k with x in [t_k, t_{k+1}); the right endpoint folds into the
  // last nonempty span
  int span = p + std::min(static_cast<int>((x - a) / h), n - 1);
  // de Boor triangle for the p+1 nonzero functions N_{span-p..span}
  std::array<double, bspline::kMaxDegree + 1> vals{};
  vals[0] = 1.0;
  for (int d = 1; d <= p; ++d) {
    double saved = 0.0;
    for (int r = 0; r < d; ++r) {
      const double tl = knot(span - d + 1 + r + d) - knot(span - d + 1 + r);
      const double alpha =
          (tl > 0.0) ? (x - knot(span - d + 1 + r)) / tl : 0.0;
      const double tmp = vals[r];
      vals[r] = saved + (1.0 - alpha) * tmp;
      saved = alpha * tmp;
    }
    vals[d] = saved;
  }
  const int k = i - (span - p);
  if (k < 0 || k > p) return 0.0;
  return vals[k];
}

std::vector<double> to_full_coefs(const SpaceSpec& spec,
                                  std::span<const double> coefs) {
  if (spec.kind == SpaceKind::periodic) {
    throw std::invalid_argument(
        "to_full_coefs: periodic splines have no full-space representation");
  }
  if (static_cast<int>(coefs.size()) != spec.dimension()) {
    throw std::invalid_argument("to_full_coefs: coefficient mismatch");
  }
  const SpaceBasis basis(spec);
  std::vector<double> full(spec.n + spec.p, 0.0);
  for (int k = 0; k < spec.dimension(); ++k) {
    for (const auto& [pos, w] : basis.row(k)) full[pos] += coefs[k] * w;
  }
  return full;
}

}  // namespace maxsplines
