#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "aurora/geometry.hpp"

namespace aurora {

// Boundary tag of a grid field: dirichlet0 fields vanish on the walls (odd
// ghost reflection), neumann0 fields have zero normal derivative (even
// reflection). Stencils, quadrature corrections, transforms and
// interpolation all honor the tag.
enum class Bc { dirichlet0, neumann0 };

struct Point {
    double x = 0.0;
    double y = 0.0;
};

class ScalarField {
public:
    ScalarField() = default;
    ScalarField(const Domain& dom, Bc bc, double fill = 0.0)
        : dom_(dom), bc_(bc), v_(dom.size(), fill) {}

    const Domain& domain() const { return dom_; }
    Bc bc() const { return bc_; }
    void set_bc(Bc bc) { bc_ = bc; }

    double& operator()(int i, int j) { return v_[dom_.idx(i, j)]; }
    double operator()(int i, int j) const { return v_[dom_.idx(i, j)]; }
    std::span<double> values() { return v_; }
    std::span<const double> values() const { return v_; }
    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::size_t size() const { return v_.size(); }

    // Ghost-aware access: any (i,j) is resolved by reflecting across the
    // walls with the tag's parity. Valid for offsets up to one full domain.
    double at_ext(int i, int j) const;

    bool same_grid(const ScalarField& o) const { return dom_ == o.dom_; }
    bool finite() const;

private:
    Domain dom_;
    Bc bc_ = Bc::dirichlet0;
    std::vector<double> v_;
};

// Three components on a shared 2D grid; nothing depends on the third
// coordinate but the third component participates in cross products.
struct VectorField3 {
    std::array<ScalarField, 3> c;

    VectorField3() = default;
    VectorField3(const Domain& dom, Bc bc) : c{ScalarField(dom, bc), ScalarField(dom, bc), ScalarField(dom, bc)} {}

    const Domain& domain() const { return c[0].domain(); }
    ScalarField& operator[](int m) { return c[m]; }
    const ScalarField& operator[](int m) const { return c[m]; }
};

// psi = re + i*im with homogeneous Dirichlet data.
struct ComplexField {
    ScalarField re;
    ScalarField im;

    ComplexField() = default;
    explicit ComplexField(const Domain& dom)
        : re(dom, Bc::dirichlet0), im(dom, Bc::dirichlet0) {}

    const Domain& domain() const { return re.domain(); }
    std::size_t size() const { return re.size(); }
};

// ---------------------------------------------------------------------------
// Quadrature and norms
// ---------------------------------------------------------------------------

// Composite midpoint quadrature over the rectangle with a tag-aware
// Euler-Maclaurin end correction: dirichlet0 fields get the O(h^2) boundary
// derivative correction (one-sided estimates against the known zero wall
// value), neumann0 fields need none. Exact for constants.
double integrate(const ScalarField& f);

// Plain midpoint sum h^2 * sum f (no boundary correction). This is the
// quadrature shared by inner products, energies and the mass operator; it
// keeps the sampled sine modes exactly orthonormal.
double integrate_midpoint(const ScalarField& f);

// Discrete inner product h^2 * sum f*g.
double inner(const ScalarField& f, const ScalarField& g);

// (int |f|^p)^(1/p), p >= 1 finite (midpoint weights).
double lp_norm(const ScalarField& f, double p);

// (int |grad f|^2)^(1/2) with centered differences and tag ghosts.
double h1_seminorm(const ScalarField& f);

// Centered-difference derivatives with tag ghosts (second order).
ScalarField ddx(const ScalarField& f);
ScalarField ddy(const ScalarField& f);

// Planar divergence d/dx c0 + d/dy c1 of the first two components.
ScalarField divergence(const VectorField3& u);

// 2.5D curl: (d_y F3, -d_x F3, d_x F2 - d_y F1).
VectorField3 curl(const VectorField3& f);

// Pointwise algebra helpers.
void add_scaled(ScalarField& y, double a, const ScalarField& x); // y += a*x
ScalarField multiply(const ScalarField& a, const ScalarField& b);

// sup norm of |u| over nodes (planar components).
double sup_norm_planar(const VectorField3& u);
double sup_norm(const ScalarField& f);

// ---------------------------------------------------------------------------
// Helmholtz divergence cleaning
// ---------------------------------------------------------------------------

// Replaces the planar part (H1,H2) by its discretely divergence-free
// projection: solve the wide-stencil Neumann Poisson problem
// div_h grad_h phi = div_h (H1,H2) spectrally (DCT-II), subtract grad_h phi.
// The third component is untouched. Discrete divergence of the output is at
// rounding level.
VectorField3 helmholtz_clean(const VectorField3& H);

// L2 norm of the planar discrete divergence (the cleaning residual metric).
double divergence_l2(const VectorField3& H);

// ---------------------------------------------------------------------------
// Interpolation
// ---------------------------------------------------------------------------

// Bicubic (Catmull-Rom) interpolation honoring the tag via ghost
// reflection: odd extension for dirichlet0, even for neumann0. Points must
// lie in the closed rectangle (DomainError otherwise; boundary round-off up
// to 1e-12 is forgiven). Reproduces nodal values exactly at the nodes.
double interpolate_at(const ScalarField& f, double x, double y);
std::vector<double> interpolate(const ScalarField& f, const std::vector<Point>& pts);

} // namespace aurora
