#include "aurora/transforms.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <numbers>

#include <fftw3.h>

#include "aurora/errors.hpp"

namespace aurora {

namespace {

constexpr double kPi = std::numbers::pi;

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct R2rPlan {
    fftw_plan plan = nullptr;
    double* in = nullptr;
    double* out = nullptr;
    std::size_t n = 0;

    R2rPlan(int nx, int ny, fftw_r2r_kind kind) {
        n = static_cast<std::size_t>(nx) * ny;
        in = fftw_alloc_real(n);
        out = fftw_alloc_real(n);
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_r2r_2d(ny, nx, in, out, kind, kind, FFTW_ESTIMATE);
        if (!plan) throw NumericalError("fftw: r2r plan creation failed");
    }
    ~R2rPlan() {
        if (plan) {
            std::lock_guard<std::mutex> lock(planner_mutex());
            fftw_destroy_plan(plan);
        }
        fftw_free(in);
        fftw_free(out);
    }
    R2rPlan(const R2rPlan&) = delete;
    R2rPlan& operator=(const R2rPlan&) = delete;

    void run(const double* src, double* dst) {
        std::memcpy(in, src, n * sizeof(double));
        fftw_execute(plan);
        std::memcpy(dst, out, n * sizeof(double));
    }
};

R2rPlan& plan_cache(int nx, int ny, fftw_r2r_kind kind) {
    thread_local std::map<std::tuple<int, int, int>, std::unique_ptr<R2rPlan>> cache;
    auto key = std::make_tuple(nx, ny, static_cast<int>(kind));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<R2rPlan>(nx, ny, kind)).first;
    return *it->second;
}

struct C2cPlan {
    fftw_plan plan = nullptr;
    fftw_complex* buf = nullptr;
    std::size_t n = 0;

    C2cPlan(int nx, int ny, int sign) {
        n = static_cast<std::size_t>(nx) * ny;
        buf = fftw_alloc_complex(n);
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_2d(ny, nx, buf, buf, sign, FFTW_ESTIMATE);
        if (!plan) throw NumericalError("fftw: dft plan creation failed");
    }
    ~C2cPlan() {
        if (plan) {
            std::lock_guard<std::mutex> lock(planner_mutex());
            fftw_destroy_plan(plan);
        }
        fftw_free(buf);
    }
    C2cPlan(const C2cPlan&) = delete;
    C2cPlan& operator=(const C2cPlan&) = delete;
};

C2cPlan& c2c_cache(int nx, int ny, int sign) {
    thread_local std::map<std::tuple<int, int, int>, std::unique_ptr<C2cPlan>> cache;
    auto key = std::make_tuple(nx, ny, sign);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<C2cPlan>(nx, ny, sign)).first;
    return *it->second;
}

} // namespace

std::vector<double> dst2_forward(const ScalarField& f) {
    const Domain& d = f.domain();
    std::vector<double> modal(d.size());
    plan_cache(d.nx, d.ny, FFTW_RODFT10).run(f.data(), modal.data());
    // c_{k,l} = (hx sqrt(2/Lx)/2)(hy sqrt(2/Ly)/2) * X
    const double s = 0.25 * d.hx() * d.hy() * std::sqrt(4.0 / (d.Lx * d.Ly));
    for (double& v : modal) v *= s;
    return modal;
}

ScalarField dst2_inverse(const Domain& dom, const std::vector<double>& modal) {
    if (modal.size() != dom.size()) throw ShapeError("dst2_inverse: modal size mismatch");
    // RODFT01(RODFT10(x)) = (2 nx)(2 ny) x
    const double fwd = 0.25 * dom.hx() * dom.hy() * std::sqrt(4.0 / (dom.Lx * dom.Ly));
    const double s = 1.0 / (fwd * 4.0 * dom.nx * dom.ny);
    std::vector<double> scaled(modal);
    for (double& v : scaled) v *= s;
    ScalarField out(dom, Bc::dirichlet0);
    plan_cache(dom.nx, dom.ny, FFTW_RODFT01).run(scaled.data(), out.data());
    return out;
}

std::vector<double> dct2_forward(const ScalarField& f) {
    const Domain& d = f.domain();
    std::vector<double> modal(d.size());
    plan_cache(d.nx, d.ny, FFTW_REDFT10).run(f.data(), modal.data());
    const double s = 0.25 * d.hx() * d.hy() * std::sqrt(4.0 / (d.Lx * d.Ly));
    const double r = 1.0 / std::sqrt(2.0); // k=0 basis function is sqrt(1/L), not sqrt(2/L)
    for (std::size_t id = 0; id < modal.size(); ++id) {
        int k = static_cast<int>(id % d.nx);
        int l = static_cast<int>(id / d.nx);
        modal[id] *= s * (k == 0 ? r : 1.0) * (l == 0 ? r : 1.0);
    }
    return modal;
}

ScalarField dct2_inverse(const Domain& dom, const std::vector<double>& modal) {
    if (modal.size() != dom.size()) throw ShapeError("dct2_inverse: modal size mismatch");
    const double fwd = 0.25 * dom.hx() * dom.hy() * std::sqrt(4.0 / (dom.Lx * dom.Ly));
    const double s = 1.0 / (fwd * 4.0 * dom.nx * dom.ny);
    const double r = std::sqrt(2.0);
    std::vector<double> scaled(modal);
    for (std::size_t id = 0; id < scaled.size(); ++id) {
        int k = static_cast<int>(id % dom.nx);
        int l = static_cast<int>(id / dom.nx);
        scaled[id] *= s * (k == 0 ? r : 1.0) * (l == 0 ? r : 1.0);
    }
    ScalarField out(dom, Bc::neumann0);
    plan_cache(dom.nx, dom.ny, FFTW_REDFT01).run(scaled.data(), out.data());
    return out;
}

double sine_eigenvalue(const Domain& dom, int k, int l) {
    return kPi * kPi * (double(k) * k / (dom.Lx * dom.Lx) + double(l) * l / (dom.Ly * dom.Ly));
}

void apply_heat_semigroup(ScalarField& f, double t) {
    const Domain& d = f.domain();
    if (f.bc() == Bc::dirichlet0) {
        std::vector<double> modal = dst2_forward(f);
        for (int l = 1; l <= d.ny; ++l)
            for (int k = 1; k <= d.nx; ++k)
                modal[(k - 1) + static_cast<std::size_t>(d.nx) * (l - 1)] *=
                    std::exp(-t * sine_eigenvalue(d, k, l));
        f = dst2_inverse(d, modal);
    } else {
        std::vector<double> modal = dct2_forward(f);
        for (int l = 0; l < d.ny; ++l)
            for (int k = 0; k < d.nx; ++k)
                modal[k + static_cast<std::size_t>(d.nx) * l] *=
                    std::exp(-t * sine_eigenvalue(d, k, l));
        f = dct2_inverse(d, modal);
    }
}

ScalarField spectral_laplacian(const ScalarField& f) {
    const Domain& d = f.domain();
    if (f.bc() == Bc::dirichlet0) {
        std::vector<double> modal = dst2_forward(f);
        for (int l = 1; l <= d.ny; ++l)
            for (int k = 1; k <= d.nx; ++k)
                modal[(k - 1) + static_cast<std::size_t>(d.nx) * (l - 1)] *= -sine_eigenvalue(d, k, l);
        return dst2_inverse(d, modal);
    }
    std::vector<double> modal = dct2_forward(f);
    for (int l = 0; l < d.ny; ++l)
        for (int k = 0; k < d.nx; ++k)
            modal[k + static_cast<std::size_t>(d.nx) * l] *= -sine_eigenvalue(d, k, l);
    return dct2_inverse(d, modal);
}

void apply_schroedinger_propagator(ComplexField& psi, double t) {
    const Domain& d = psi.domain();
    std::vector<double> a = dst2_forward(psi.re);
    std::vector<double> b = dst2_forward(psi.im);
    for (int l = 1; l <= d.ny; ++l) {
        for (int k = 1; k <= d.nx; ++k) {
            std::size_t id = (k - 1) + static_cast<std::size_t>(d.nx) * (l - 1);
            double th = t * sine_eigenvalue(d, k, l);
            double c = std::cos(th), s = std::sin(th);
            // (a + ib) * exp(-i theta)
            double na = a[id] * c + b[id] * s;
            double nb = b[id] * c - a[id] * s;
            a[id] = na;
            b[id] = nb;
        }
    }
    psi.re = dst2_inverse(d, a);
    psi.im = dst2_inverse(d, b);
}

void fft2(std::vector<std::complex<double>>& arr, int nx, int ny, bool inverse) {
    if (arr.size() != static_cast<std::size_t>(nx) * ny)
        throw ShapeError("fft2: array size mismatch");
    C2cPlan& p = c2c_cache(nx, ny, inverse ? FFTW_BACKWARD : FFTW_FORWARD);
    // std::complex<double> is layout-compatible with fftw_complex
    std::memcpy(static_cast<void*>(p.buf), static_cast<const void*>(arr.data()),
                arr.size() * sizeof(fftw_complex));
    fftw_execute(p.plan);
    std::memcpy(static_cast<void*>(arr.data()), static_cast<const void*>(p.buf),
                arr.size() * sizeof(fftw_complex));
    if (inverse) {
        double s = 1.0 / (static_cast<double>(nx) * ny);
        for (auto& z : arr) z *= s;
    }
}

} // namespace aurora
