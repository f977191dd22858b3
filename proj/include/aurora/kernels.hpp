#pragma once

#include <cstddef>
#include <string>
#include <utility>

// Data-parallel inner loops used by the field and quadrature code. Every
// kernel has a scalar reference implementation and (on x86-64 with AVX2+FMA)
// a vectorized variant; the active one is picked at runtime. The two paths
// agree to rounding (reductions may reassociate), which the kernel tests
// check explicitly.
namespace aurora::kernels {

enum class Isa { scalar, avx2 };

// Best ISA the host supports.
Isa detected();
// Currently dispatched ISA.
Isa active();
// Force a path (tests; also honored from the AURORA_KERNELS env var:
// "scalar", "avx2" or "auto"). Throws ParameterError if unsupported.
void force(Isa isa);
void force_auto();
std::string isa_name(Isa isa);

// y[i] += a*x[i]
void axpy(double a, const double* x, double* y, std::size_t n);
// z[i] = x[i]*y[i]
void mul(const double* x, const double* y, double* z, std::size_t n);
// z[i] += x[i]*y[i]
void mul_add(const double* x, const double* y, double* z, std::size_t n);
// y[i] = s*(p[i] - m[i])   (centered-difference stencil core)
void scaled_diff(double s, const double* p, const double* m, double* y, std::size_t n);
// sum_i x[i]
double sum(const double* x, std::size_t n);
// sum_i x[i]*y[i]
double dot(const double* x, const double* y, std::size_t n);
// sum_i x[i]*y[i]*z[i]  (weighted inner products, mass matrices)
double dot3(const double* x, const double* y, const double* z, std::size_t n);
// {min, max}
std::pair<double, double> minmax(const double* x, std::size_t n);

} // namespace aurora::kernels
