#pragma once

#include <array>
#include <vector>

#include "aurora/fields.hpp"
#include "aurora/geometry.hpp"

namespace aurora {

// Pointwise planar velocity with an analytic divergence; the flow machinery
// integrates trajectories of these. The production implementation is the
// modal synthesis of a Galerkin state (smooth by construction); tests also
// use manufactured velocities.
class PointVelocity {
public:
    virtual ~PointVelocity() = default;
    virtual std::array<double, 2> eval(double x, double y) const = 0;
    virtual double div(double x, double y) const = 0;
};

// u^N(x) = sum_{j<N} c_j eta_j(x), evaluated with exact trigonometry.
class ModalVelocity : public PointVelocity {
public:
    ModalVelocity(const SineBasis& basis, const GalerkinState& state, int N);
    std::array<double, 2> eval(double x, double y) const override;
    double div(double x, double y) const override;

private:
    const SineBasis* basis_;
    std::vector<std::array<double, 2>> c_;
};

// Approximate Lagrangian state: forward particle positions Phi and the
// accumulated a(t;x) = int div u^N along trajectories on the Lagrangian
// (initial) grid, plus the Eulerian label displacement Y(t,x) - x and the
// accumulator A solving A_t + u^N . grad A = div u^N. With identity initial
// labels, J_y = exp(-a) along trajectories and exp(-A) as an Eulerian field.
struct FlowState {
    Domain dom;
    std::vector<double> phi_x, phi_y; // forward positions, Lagrangian nodes
    std::vector<double> acc_a;        // int_0^t div u^N(s, Phi(s;x)) ds
    ScalarField disp_x, disp_y;       // Y - id (dirichlet0: walls are fixed)
    ScalarField acc_A;                // neumann0
    double time = 0.0;

    explicit FlowState(const Domain& d);
    FlowState() = default;
};

// One step: RK4 on every forward trajectory with trapezoid accumulation of
// a; one backward RK2 trace plus bicubic interpolation per node for Y and A.
// Throws GeometryError if a trajectory leaves the closed rectangle by more
// than 1e-8 (cannot happen for wall-vanishing u^N).
FlowState step_flow(const FlowState& fs, const PointVelocity& uN, double dt);

struct JacobianCheck {
    bool holds = false;
    double margin = 0.0; // log-distance to the nearest bound
};

// Verifies exp(-C_N (t + int ||u||_{H_0^1}^2)) <= J_y <= exp(+...) with
// J_y = exp(-a) over the Lagrangian nodes. u_h1_integral is the accumulated
// int_0^t ||u(s)||_{H_0^1}^2 ds.
JacobianCheck jacobian_bound_check(const FlowState& fs, double C_N, double u_h1_integral);

// v(t,w) = 1 / rho(t, Phi(t;w)) on the Lagrangian grid, capped at
// 1/rho_floor wherever the interpolated density falls at or below the floor
// (the cap lands in the flat tail of g, so it is inert).
ScalarField specific_volume(const ScalarField& rho, const FlowState& fs, double rho_floor = 1e-8);

// |psi(t, Y(t,x))|^2 on the Eulerian grid.
ScalarField pullback_wave_sq(const ComplexField& psi, const FlowState& fs);

// exp(-A) as an Eulerian field.
ScalarField jacobian_eulerian(const FlowState& fs);

// det(dY/dx) by centered differences of the label field (diagnostic; the
// identity det = exp(-A) is what the flow tests probe).
ScalarField label_jacobian_det(const FlowState& fs);

} // namespace aurora
