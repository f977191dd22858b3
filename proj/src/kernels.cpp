#include "aurora/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#include "aurora/errors.hpp"

namespace aurora::kernels {

namespace scalar {

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void mul(const double* x, const double* y, double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) z[i] = x[i] * y[i];
}

void mul_add(const double* x, const double* y, double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) z[i] += x[i] * y[i];
}

void scaled_diff(double s, const double* p, const double* m, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = s * (p[i] - m[i]);
}

double sum(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double dot3(const double* x, const double* y, const double* z, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i] * z[i];
    return acc;
}

std::pair<double, double> minmax(const double* x, std::size_t n) {
    double lo = x[0], hi = x[0];
    for (std::size_t i = 1; i < n; ++i) {
        lo = std::min(lo, x[i]);
        hi = std::max(hi, x[i]);
    }
    return {lo, hi};
}

} // namespace scalar

namespace avx2 {
// Defined in kernels_avx2.cpp; only called when the CPU supports AVX2+FMA.
void axpy(double a, const double* x, double* y, std::size_t n);
void mul(const double* x, const double* y, double* z, std::size_t n);
void mul_add(const double* x, const double* y, double* z, std::size_t n);
void scaled_diff(double s, const double* p, const double* m, double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double dot3(const double* x, const double* y, const double* z, std::size_t n);
std::pair<double, double> minmax(const double* x, std::size_t n);
bool available();
} // namespace avx2

namespace {

Isa detect_host() {
    return avx2::available() ? Isa::avx2 : Isa::scalar;
}

Isa initial_isa() {
    Isa host = detect_host();
    if (const char* env = std::getenv("AURORA_KERNELS")) {
        std::string v(env);
        if (v == "scalar") return Isa::scalar;
        if (v == "avx2" && host == Isa::avx2) return Isa::avx2;
        // "auto" or anything unusable falls through to detection
    }
    return host;
}

std::atomic<Isa> g_active{initial_isa()};

} // namespace

Isa detected() { return detect_host(); }
Isa active() { return g_active.load(std::memory_order_relaxed); }

void force(Isa isa) {
    if (isa == Isa::avx2 && detect_host() != Isa::avx2)
        throw ParameterError("kernels: avx2 not supported on this host");
    g_active.store(isa, std::memory_order_relaxed);
}

void force_auto() { g_active.store(initial_isa(), std::memory_order_relaxed); }

std::string isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void axpy(double a, const double* x, double* y, std::size_t n) {
    if (n == 0) return;
    active() == Isa::avx2 ? avx2::axpy(a, x, y, n) : scalar::axpy(a, x, y, n);
}

void mul(const double* x, const double* y, double* z, std::size_t n) {
    if (n == 0) return;
    active() == Isa::avx2 ? avx2::mul(x, y, z, n) : scalar::mul(x, y, z, n);
}

void mul_add(const double* x, const double* y, double* z, std::size_t n) {
    if (n == 0) return;
    active() == Isa::avx2 ? avx2::mul_add(x, y, z, n) : scalar::mul_add(x, y, z, n);
}

void scaled_diff(double s, const double* p, const double* m, double* y, std::size_t n) {
    if (n == 0) return;
    active() == Isa::avx2 ? avx2::scaled_diff(s, p, m, y, n) : scalar::scaled_diff(s, p, m, y, n);
}

double sum(const double* x, std::size_t n) {
    if (n == 0) return 0.0;
    return active() == Isa::avx2 ? avx2::sum(x, n) : scalar::sum(x, n);
}

double dot(const double* x, const double* y, std::size_t n) {
    if (n == 0) return 0.0;
    return active() == Isa::avx2 ? avx2::dot(x, y, n) : scalar::dot(x, y, n);
}

double dot3(const double* x, const double* y, const double* z, std::size_t n) {
    if (n == 0) return 0.0;
    return active() == Isa::avx2 ? avx2::dot3(x, y, z, n) : scalar::dot3(x, y, z, n);
}

std::pair<double, double> minmax(const double* x, std::size_t n) {
    if (n == 0) return {0.0, 0.0};
    return active() == Isa::avx2 ? avx2::minmax(x, n) : scalar::minmax(x, n);
}

} // namespace aurora::kernels
