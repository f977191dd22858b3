#pragma once

#include "aurora/fields.hpp"

namespace aurora {

struct InductionParams {
    double nu = 1e-2; // magnetic diffusivity, > 0
    double dt = 1e-3;
    double c_adv = 0.4;
};

struct InductionDiag {
    double t = 0.0;
    double h_l2sq = 0.0;     // ||H||_L2^2
    double div_residual = 0.0;
    double curl_dissipation = 0.0; // nu ||curl H||_L2^2 at this state
};

// curl(u x H) with the 2.5D curl convention (spatial operator of the
// induction step; exposed for the semi-discrete oracle).
VectorField3 curl_of_cross(const VectorField3& u, const VectorField3& H);

// One IMEX step of H_t - curl(u x H) = -curl(nu curl H), H|wall = 0,
// div H = 0: explicit transport term, exact sine-spectral diffusion per
// component (curl curl = -Laplace on divergence-free fields), then a
// Helmholtz cleaning pass. Output discrete divergence is at rounding level.
VectorField3 step_magnetic(const VectorField3& H, const VectorField3& u, const InductionParams& p);

} // namespace aurora
