// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; nothing here runs unless avx2::available() said yes.

#include <cstddef>
#include <utility>

#if defined(__x86_64__) || defined(_M_X64)
#define AURORA_X86 1
#include <immintrin.h>
#else
#define AURORA_X86 0
#endif

namespace aurora::kernels::avx2 {

#if AURORA_X86

bool available() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void mul(const double* x, const double* y, double* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(z + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) z[i] = x[i] * y[i];
}

void mul_add(const double* x, const double* y, double* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vz = _mm256_loadu_pd(z + i);
        vz = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), vz);
        _mm256_storeu_pd(z + i, vz);
    }
    for (; i < n; ++i) z[i] += x[i] * y[i];
}

void scaled_diff(double s, const double* p, const double* m, double* y, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(p + i), _mm256_loadu_pd(m + i));
        _mm256_storeu_pd(y + i, _mm256_mul_pd(vs, d));
    }
    for (; i < n; ++i) y[i] = s * (p[i] - m[i]);
}

namespace {
inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}
} // namespace

double sum(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double r = hsum(acc);
    for (; i < n; ++i) r += x[i];
    return r;
}

double dot(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
    double r = hsum(acc);
    for (; i < n; ++i) r += x[i] * y[i];
    return r;
}

double dot3(const double* x, const double* y, const double* z, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xy = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_fmadd_pd(xy, _mm256_loadu_pd(z + i), acc);
    }
    double r = hsum(acc);
    for (; i < n; ++i) r += x[i] * y[i] * z[i];
    return r;
}

std::pair<double, double> minmax(const double* x, std::size_t n) {
    std::size_t i = 0;
    double lo, hi;
    if (n >= 4) {
        __m256d vlo = _mm256_loadu_pd(x);
        __m256d vhi = vlo;
        for (i = 4; i + 4 <= n; i += 4) {
            __m256d v = _mm256_loadu_pd(x + i);
            vlo = _mm256_min_pd(vlo, v);
            vhi = _mm256_max_pd(vhi, v);
        }
        alignas(32) double a[4], b[4];
        _mm256_store_pd(a, vlo);
        _mm256_store_pd(b, vhi);
        lo = a[0];
        hi = b[0];
        for (int k = 1; k < 4; ++k) {
            lo = a[k] < lo ? a[k] : lo;
            hi = b[k] > hi ? b[k] : hi;
        }
    } else {
        lo = hi = x[0];
        i = 1;
    }
    for (; i < n; ++i) {
        lo = x[i] < lo ? x[i] : lo;
        hi = x[i] > hi ? x[i] : hi;
    }
    return {lo, hi};
}

#else // !AURORA_X86

bool available() { return false; }
void axpy(double, const double*, double*, std::size_t) {}
void mul(const double*, const double*, double*, std::size_t) {}
void mul_add(const double*, const double*, double*, std::size_t) {}
void scaled_diff(double, const double*, const double*, double*, std::size_t) {}
double sum(const double*, std::size_t) { return 0.0; }
double dot(const double*, const double*, std::size_t) { return 0.0; }
double dot3(const double*, const double*, const double*, std::size_t) { return 0.0; }
std::pair<double, double> minmax(const double*, std::size_t) { return {0.0, 0.0}; }

#endif

} // namespace aurora::kernels::avx2
