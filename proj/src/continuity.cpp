#include "aurora/continuity.hpp"

#include <algorithm>
#include <cmath>

#include "aurora/errors.hpp"
#include "aurora/kernels.hpp"
#include "aurora/transforms.hpp"

namespace aurora {

ScalarField advection_divergence(const ScalarField& rho, const VectorField3& u) {
    if (!rho.same_grid(u[0])) throw ShapeError("advection: mismatched grids");
    const Domain& d = rho.domain();
    const int nx = d.nx, ny = d.ny;
    const double ihx = 1.0 / d.hx(), ihy = 1.0 / d.hy();
    ScalarField out(d, Bc::neumann0);
    // Face flux F_{i+1/2} = avg(rho)*avg(u); the wall faces use the odd
    // velocity ghost, which zeroes the flux there exactly.
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            double fxr = (i == nx - 1) ? 0.0
                                       : 0.25 * (rho(i, j) + rho(i + 1, j)) * (u[0](i, j) + u[0](i + 1, j));
            double fxl = (i == 0) ? 0.0
                                  : 0.25 * (rho(i - 1, j) + rho(i, j)) * (u[0](i - 1, j) + u[0](i, j));
            double fyt = (j == ny - 1) ? 0.0
                                       : 0.25 * (rho(i, j) + rho(i, j + 1)) * (u[1](i, j) + u[1](i, j + 1));
            double fyb = (j == 0) ? 0.0
                                  : 0.25 * (rho(i, j - 1) + rho(i, j)) * (u[1](i, j - 1) + u[1](i, j));
            out(i, j) = -((fxr - fxl) * ihx + (fyt - fyb) * ihy);
        }
    }
    return out;
}

ScalarField step_density(const ScalarField& rho, const VectorField3& u,
                         const ContinuityParams& p, long* clips) {
    if (rho.bc() != Bc::neumann0) throw PreconditionError("step_density: rho must carry neumann0");
    if (u[0].bc() != Bc::dirichlet0) throw PreconditionError("step_density: u must carry dirichlet0");
    if (!(p.dt > 0.0)) throw StepSizeError("step_density: dt must be positive");
    auto [lo, hi] = kernels::minmax(rho.data(), rho.size());
    (void)hi;
    if (lo < 0.0) throw PreconditionError("step_density: negative input density");

    const Domain& d = rho.domain();
    double umax = sup_norm_planar(u);
    double hmin = std::min(d.hx(), d.hy());
    if (umax > 0.0 && p.dt > p.c_adv * hmin / umax)
        throw StepSizeError("step_density: advective CFL violated (dt too large)");

    ScalarField adv = advection_divergence(rho, u);
    ScalarField next = rho;
    kernels::axpy(p.dt, adv.data(), next.data(), next.size());

    // Clip undershoots at zero, give the deficit back pro rata: Theorem-style
    // nonnegativity with exact conservation of the discrete mass.
    double clipped = 0.0;
    long events = 0;
    for (double& v : next.values()) {
        if (v < 0.0) {
            clipped += v;
            v = 0.0;
            ++events;
        }
    }
    if (events > 0) {
        double pos = kernels::sum(next.data(), next.size());
        if (pos > 0.0) {
            double f = 1.0 + clipped / pos; // clipped < 0
            for (double& v : next.values()) v *= f;
        }
    }
    if (clips) *clips += events;

    if (p.eps > 0.0) apply_heat_semigroup(next, p.eps * p.dt);
    return next;
}

std::pair<std::vector<double>, std::vector<double>> max_principle_envelope(
    const ScalarField& rho0, const std::vector<double>& divu_sup_history, double dt) {
    auto [lo, hi] = kernels::minmax(rho0.data(), rho0.size());
    if (!(lo > 0.0)) throw PreconditionError("max_principle_envelope: rho0 must be positive");
    std::vector<double> lower(divu_sup_history.size() + 1, lo);
    std::vector<double> upper(divu_sup_history.size() + 1, hi);
    double acc = 0.0;
    for (std::size_t k = 0; k < divu_sup_history.size(); ++k) {
        acc += dt * divu_sup_history[k];
        lower[k + 1] = lo * std::exp(-acc);
        upper[k + 1] = hi * std::exp(acc);
    }
    return {lower, upper};
}

} // namespace aurora
