#pragma once

#include <vector>

#include "aurora/fields.hpp"

namespace aurora {

struct ContinuityParams {
    double eps = 1e-2; // artificial viscosity (>= 0; diagnostics may use 0)
    double dt = 1e-3;
    double c_adv = 0.4; // advective CFL fraction: dt <= c_adv * h / ||u||_inf
};

struct ContinuityDiag {
    double t = 0.0;
    double mass = 0.0;
    double min_rho = 0.0;
    double max_rho = 0.0;
    double env_lower = 0.0;
    double env_upper = 0.0;
    long clip_count = 0;
};

// One IMEX step of rho_t + div(rho u) = eps Laplace(rho), Neumann walls:
// explicit flux-form advection (face fluxes vanish on the walls, so the
// discrete mass h^2 sum rho is conserved exactly), then the exact spectral
// Neumann heat semigroup. Negative undershoots are clipped at zero and the
// clipped mass restored proportionally over the positive part; the event
// count lands in *clips when given.
ScalarField step_density(const ScalarField& rho, const VectorField3& u,
                         const ContinuityParams& p, long* clips = nullptr);

// Explicit advection operator -div(rho u) in flux form (the spatial operator
// the stepper uses; exposed for the semi-discrete oracle).
ScalarField advection_divergence(const ScalarField& rho, const VectorField3& u);

// Maximum-principle envelope: after k steps,
//   lower_k = (inf rho0) exp(-sum_{i<=k} dt ||div u||_inf,i),
//   upper_k = (sup rho0) exp(+ ... ).
// Entry 0 is the bare (inf, sup).
std::pair<std::vector<double>, std::vector<double>> max_principle_envelope(
    const ScalarField& rho0, const std::vector<double>& divu_sup_history, double dt);

} // namespace aurora
