#include "maxsplines/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace maxsplines::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double dot3(const double* w, const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

double sum(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void rot(double* x, double* y, double c, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = -s * xi + c * yi;
  }
}

}  // namespace scalar

namespace {

struct Table {
  Backend backend;
  double (*dot)(const double*, const double*, std::size_t);
  double (*dot3)(const double*, const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*rot)(double*, double*, double, double, std::size_t);
};

Table make_table() {
  Table t{Backend::scalar, &scalar::dot, &scalar::dot3, &scalar::sum,
          &scalar::axpy, &scalar::rot};
  const char* want = std::getenv("MAXSPLINES_KERNELS");
  const bool force_scalar = want && std::strcmp(want, "scalar") == 0;
#ifdef MAXSPLINES_HAVE_AVX2
  const bool force_avx2 = want && std::strcmp(want, "avx2") == 0;
  if (!force_scalar && (force_avx2 || avx2_supported())) {
    t = Table{Backend::avx2, &avx2::dot, &avx2::dot3, &avx2::sum,
              &avx2::axpy, &avx2::rot};
  }
#else
  (void)force_scalar;
#endif
  return t;
}

const Table& table() {
  static const Table t = make_table();
  return t;
}

}  // namespace

Backend active_backend() { return table().backend; }

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

double dot(const double* a, const double* b, std::size_t n) {
  return table().dot(a, b, n);
}

double dot3(const double* w, const double* a, const double* b, std::size_t n) {
  return table().dot3(w, a, b, n);
}

double sum(const double* a, std::size_t n) { return table().sum(a, n); }

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  table().axpy(alpha, x, y, n);
}

void rot(double* x, double* y, double c, double s, std::size_t n) {
  table().rot(x, y, c, s, n);
}

}  // namespace maxsplines::kernels
