#pragma once

#include <cstddef>

// Vector kernels used by the dense linear algebra and quadrature loops.
// A scalar reference implementation always exists; on x86-64 an AVX2/FMA
// variant is compiled into its own translation unit and selected at runtime.
// The environment variable MAXSPLINES_KERNELS=scalar|avx2|auto overrides the
// automatic choice (unknown values fall back to auto).

namespace maxsplines::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
const char* backend_name(Backend b);

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);
// sum_i w[i]*a[i]*b[i]
double dot3(const double* w, const double* a, const double* b, std::size_t n);
// sum_i a[i]
double sum(const double* a, std::size_t n);
// y[i] += alpha*x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);
// plane rotation: (x[i], y[i]) <- (c*x[i] + s*y[i], -s*x[i] + c*y[i])
void rot(double* x, double* y, double c, double s, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double dot3(const double* w, const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void rot(double* x, double* y, double c, double s, std::size_t n);
}  // namespace scalar

#ifdef MAXSPLINES_HAVE_AVX2
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double dot3(const double* w, const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void rot(double* x, double* y, double c, double s, std::size_t n);
}  // namespace avx2

// True when the running CPU supports AVX2 and FMA.
bool avx2_supported();
#endif

}  // namespace maxsplines::kernels
