#include "aurora/fields.hpp"

#include <cmath>
#include <numbers>

#include "aurora/errors.hpp"
#include "aurora/kernels.hpp"
#include "aurora/transforms.hpp"

namespace aurora {

double ScalarField::at_ext(int i, int j) const {
    double sign = 1.0;
    const int nx = dom_.nx, ny = dom_.ny;
    // Fold across the walls; cell-centered reflection pairs node m with
    // node -1-m (left) and 2n-1-m (right).
    while (i < 0 || i >= nx) {
        if (i < 0)
            i = -1 - i;
        else
            i = 2 * nx - 1 - i;
        if (bc_ == Bc::dirichlet0) sign = -sign;
    }
    while (j < 0 || j >= ny) {
        if (j < 0)
            j = -1 - j;
        else
            j = 2 * ny - 1 - j;
        if (bc_ == Bc::dirichlet0) sign = -sign;
    }
    return sign * v_[dom_.idx(i, j)];
}

bool ScalarField::finite() const {
    for (double x : v_)
        if (!std::isfinite(x)) return false;
    return true;
}

double integrate_midpoint(const ScalarField& f) {
    return f.domain().cell_area() * kernels::sum(f.data(), f.size());
}

double integrate(const ScalarField& f) {
    double base = integrate_midpoint(f);
    if (f.bc() == Bc::neumann0) return base; // wall derivative vanishes by tag
    const Domain& d = f.domain();
    const double hx = d.hx(), hy = d.hy();
    // Euler-Maclaurin midpoint correction
    //   int = h*sum + (h^2/24)(f'(L) - f'(0)) per direction,
    // wall derivatives estimated one-sided against the known zero value:
    // f'(0) ~ (9 f(h/2) - f(3h/2)) / (3h).
    double cx = 0.0;
    for (int j = 0; j < d.ny; ++j) {
        double left = (9.0 * f(0, j) - f(1, j)) / (3.0 * hx);
        double right = -(9.0 * f(d.nx - 1, j) - f(d.nx - 2, j)) / (3.0 * hx);
        cx += right - left;
    }
    double cy = 0.0;
    for (int i = 0; i < d.nx; ++i) {
        double bottom = (9.0 * f(i, 0) - f(i, 1)) / (3.0 * hy);
        double top = -(9.0 * f(i, d.ny - 1) - f(i, d.ny - 2)) / (3.0 * hy);
        cy += top - bottom;
    }
    return base + (hx * hx / 24.0) * cx * hy + (hy * hy / 24.0) * cy * hx;
}

double inner(const ScalarField& f, const ScalarField& g) {
    if (!f.same_grid(g)) throw ShapeError("inner: mismatched grids");
    return f.domain().cell_area() * kernels::dot(f.data(), g.data(), f.size());
}

double lp_norm(const ScalarField& f, double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw ParameterError("lp_norm: p must be finite and >= 1");
    double s;
    if (p == 2.0) {
        s = kernels::dot(f.data(), f.data(), f.size());
    } else {
        s = 0.0;
        for (double x : f.values()) s += std::pow(std::abs(x), p);
    }
    return std::pow(f.domain().cell_area() * s, 1.0 / p);
}

namespace {

// out(i,j) = s * (f(i+di, j+dj) - f(i-di, j-dj)); vectorized on the interior,
// ghost-resolved on the affected boundary band.
ScalarField centered(const ScalarField& f, int di, int dj, double s) {
    const Domain& d = f.domain();
    ScalarField out(d, Bc::neumann0);
    const int nx = d.nx, ny = d.ny;
    if (di == 1) {
        for (int j = 0; j < ny; ++j) {
            const double* row = f.data() + d.idx(0, j);
            double* orow = out.data() + d.idx(0, j);
            kernels::scaled_diff(s, row + 2, row, orow + 1, nx - 2);
            orow[0] = s * (f.at_ext(1, j) - f.at_ext(-1, j));
            orow[nx - 1] = s * (f.at_ext(nx, j) - f.at_ext(nx - 2, j));
        }
    } else {
        for (int j = 1; j < ny - 1; ++j) {
            const double* up = f.data() + d.idx(0, j + 1);
            const double* dn = f.data() + d.idx(0, j - 1);
            kernels::scaled_diff(s, up, dn, out.data() + d.idx(0, j), nx);
        }
        for (int i = 0; i < nx; ++i) {
            out(i, 0) = s * (f.at_ext(i, 1) - f.at_ext(i, -1));
            out(i, ny - 1) = s * (f.at_ext(i, ny) - f.at_ext(i, ny - 2));
        }
    }
    (void)dj;
    return out;
}

} // namespace

ScalarField ddx(const ScalarField& f) { return centered(f, 1, 0, 0.5 / f.domain().hx()); }
ScalarField ddy(const ScalarField& f) { return centered(f, 0, 1, 0.5 / f.domain().hy()); }

double h1_seminorm(const ScalarField& f) {
    ScalarField fx = ddx(f), fy = ddy(f);
    double s = kernels::dot(fx.data(), fx.data(), fx.size()) +
               kernels::dot(fy.data(), fy.data(), fy.size());
    return std::sqrt(f.domain().cell_area() * s);
}

ScalarField divergence(const VectorField3& u) {
    ScalarField d = ddx(u[0]);
    ScalarField dy = ddy(u[1]);
    kernels::axpy(1.0, dy.data(), d.data(), d.size());
    return d;
}

VectorField3 curl(const VectorField3& f) {
    VectorField3 out(f.domain(), Bc::neumann0);
    out[0] = ddy(f[2]);
    out[1] = ddx(f[2]);
    for (double& v : out[1].values()) v = -v;
    out[2] = ddx(f[1]);
    ScalarField t = ddy(f[0]);
    kernels::axpy(-1.0, t.data(), out[2].data(), out[2].size());
    return out;
}

void add_scaled(ScalarField& y, double a, const ScalarField& x) {
    if (!y.same_grid(x)) throw ShapeError("add_scaled: mismatched grids");
    kernels::axpy(a, x.data(), y.data(), y.size());
}

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
    if (!a.same_grid(b)) throw ShapeError("multiply: mismatched grids");
    ScalarField out(a.domain(), a.bc());
    kernels::mul(a.data(), b.data(), out.data(), out.size());
    return out;
}

double sup_norm(const ScalarField& f) {
    auto [lo, hi] = kernels::minmax(f.data(), f.size());
    return std::max(std::abs(lo), std::abs(hi));
}

double sup_norm_planar(const VectorField3& u) {
    double best = 0.0;
    for (std::size_t i = 0; i < u[0].size(); ++i) {
        double a = u[0].values()[i], b = u[1].values()[i];
        best = std::max(best, a * a + b * b);
    }
    return std::sqrt(best);
}

VectorField3 helmholtz_clean(const VectorField3& H) {
    const Domain& d = H.domain();
    ScalarField div = divergence(H);
    std::vector<double> modal = dct2_forward(div);
    const double hx = d.hx(), hy = d.hy();
    for (int l = 0; l < d.ny; ++l) {
        double sy = std::sin(l * std::numbers::pi * hy / d.Ly) / hy;
        for (int k = 0; k < d.nx; ++k) {
            double sx = std::sin(k * std::numbers::pi * hx / d.Lx) / hx;
            double sym = sx * sx + sy * sy;
            std::size_t id = static_cast<std::size_t>(l) * d.nx + k;
            modal[id] = (k == 0 && l == 0) ? 0.0 : -modal[id] / sym;
        }
    }
    ScalarField phi = dct2_inverse(d, modal);
    ScalarField gx = ddx(phi), gy = ddy(phi);

    VectorField3 out = H;
    kernels::axpy(-1.0, gx.data(), out[0].data(), out[0].size());
    kernels::axpy(-1.0, gy.data(), out[1].data(), out[1].size());
    double res = divergence_l2(out);
    double scale = std::sqrt(kernels::dot(out[0].data(), out[0].data(), out[0].size()) *
                                 d.cell_area() +
                             1.0);
    if (!(res < 1e-8 * scale))
        throw NumericalError("helmholtz_clean: projection residual " + std::to_string(res));
    return out;
}

double divergence_l2(const VectorField3& H) {
    ScalarField div = divergence(H);
    return lp_norm(div, 2.0);
}

namespace {

inline double catmull_rom(double fm1, double f0, double f1, double f2, double t) {
    double a0 = f0;
    double a1 = 0.5 * (f1 - fm1);
    double a2 = fm1 - 2.5 * f0 + 2.0 * f1 - 0.5 * f2;
    double a3 = 0.5 * (f2 - fm1) + 1.5 * (f0 - f1);
    return a0 + t * (a1 + t * (a2 + t * a3));
}

} // namespace

double interpolate_at(const ScalarField& f, double x, double y) {
    const Domain& d = f.domain();
    constexpr double tol = 1e-12;
    if (x < -tol || x > d.Lx + tol || y < -tol || y > d.Ly + tol)
        throw DomainError("interpolate: point outside closure of the domain");
    x = std::min(std::max(x, 0.0), d.Lx);
    y = std::min(std::max(y, 0.0), d.Ly);

    double sx = x / d.hx() - 0.5;
    double sy = y / d.hy() - 0.5;
    int i0 = static_cast<int>(std::floor(sx));
    int j0 = static_cast<int>(std::floor(sy));
    double tx = sx - i0, ty = sy - j0;

    double col[4];
    for (int r = -1; r <= 2; ++r) {
        col[r + 1] = catmull_rom(f.at_ext(i0 - 1, j0 + r), f.at_ext(i0, j0 + r),
                                 f.at_ext(i0 + 1, j0 + r), f.at_ext(i0 + 2, j0 + r), tx);
    }
    return catmull_rom(col[0], col[1], col[2], col[3], ty);
}

std::vector<double> interpolate(const ScalarField& f, const std::vector<Point>& pts) {
    std::vector<double> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = interpolate_at(f, pts[i].x, pts[i].y);
    return out;
}

} // namespace aurora
