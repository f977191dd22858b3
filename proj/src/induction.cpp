#include "aurora/induction.hpp"

#include <algorithm>
#include <cmath>

#include "aurora/errors.hpp"
#include "aurora/kernels.hpp"
#include "aurora/transforms.hpp"

namespace aurora {

VectorField3 curl_of_cross(const VectorField3& u, const VectorField3& H) {
    if (!u[0].same_grid(H[0])) throw ShapeError("curl_of_cross: mismatched grids");
    const Domain& d = u.domain();
    VectorField3 E(d, Bc::dirichlet0); // u x H vanishes on the walls
    for (std::size_t i = 0; i < E[0].size(); ++i) {
        double u1 = u[0].values()[i], u2 = u[1].values()[i], u3 = u[2].values()[i];
        double h1 = H[0].values()[i], h2 = H[1].values()[i], h3 = H[2].values()[i];
        E[0].values()[i] = u2 * h3 - u3 * h2;
        E[1].values()[i] = u3 * h1 - u1 * h3;
        E[2].values()[i] = u1 * h2 - u2 * h1;
    }
    return curl(E);
}

VectorField3 step_magnetic(const VectorField3& H, const VectorField3& u, const InductionParams& p) {
    if (!(p.nu > 0.0)) throw ParameterError("step_magnetic: nu must be positive");
    if (!(p.dt > 0.0)) throw StepSizeError("step_magnetic: dt must be positive");
    const Domain& d = H.domain();
    double umax = sup_norm_planar(u);
    double hmin = std::min(d.hx(), d.hy());
    if (umax > 0.0 && p.dt > p.c_adv * hmin / umax)
        throw StepSizeError("step_magnetic: advective CFL violated (dt too large)");

    VectorField3 next = H;
    VectorField3 transport = curl_of_cross(u, H);
    for (int m = 0; m < 3; ++m) {
        kernels::axpy(p.dt, transport[m].data(), next[m].data(), next[m].size());
        next[m].set_bc(Bc::dirichlet0);
        apply_heat_semigroup(next[m], p.nu * p.dt);
    }
    return helmholtz_clean(next);
}

} // namespace aurora
