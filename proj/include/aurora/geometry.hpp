#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace aurora {

// Rectangular domain (0,Lx)x(0,Ly) discretized by nx*ny cell-centered nodes,
// x_i = (i+1/2)*hx, y_j = (j+1/2)*hy with hx = Lx/nx. Cell-centered nodes
// make the sine/cosine eigenfunction samples exactly orthogonal under the
// midpoint weights and put both boundary conditions exactly on the walls.
struct Domain {
    double Lx = 1.0;
    double Ly = 1.0;
    int nx = 64;
    int ny = 64;

    double hx() const { return Lx / nx; }
    double hy() const { return Ly / ny; }
    double cell_area() const { return hx() * hy(); }
    double area() const { return Lx * Ly; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    double x(int i) const { return (i + 0.5) * hx(); }
    double y(int j) const { return (j + 0.5) * hy(); }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }

    void validate() const; // throws DomainError on bad sizes

    bool operator==(const Domain& o) const {
        return Lx == o.Lx && Ly == o.Ly && nx == o.nx && ny == o.ny;
    }
};

// One Dirichlet-Laplacian eigenpair eta_{k,l}(x,y) =
// (2/sqrt(Lx*Ly)) sin(k pi x/Lx) sin(l pi y/Ly), eigenvalue
// pi^2 (k^2/Lx^2 + l^2/Ly^2).
struct SineMode {
    int k = 1;
    int l = 1;
    double eigenvalue = 0.0;
    double grad_sup = 0.0; // ||grad eta||_Linf over the closed rectangle
};

// First n eigenpairs ordered by ascending eigenvalue, (k,l)-lexicographic on
// ties. Also caches node tables of eta and its gradient for Galerkin
// quadratures.
class SineBasis {
public:
    SineBasis() = default;
    SineBasis(const Domain& dom, std::vector<SineMode> modes);

    const Domain& domain() const { return dom_; }
    int size() const { return static_cast<int>(modes_.size()); }
    const SineMode& mode(int j) const { return modes_[j]; }
    double normalization() const; // 2/sqrt(Lx*Ly)

    // Pointwise evaluation (exact trig; usable at arbitrary points).
    double eval(int j, double x, double y) const;
    double eval_dx(int j, double x, double y) const;
    double eval_dy(int j, double x, double y) const;

    // Node tables, one value per grid node (built lazily on first use).
    const std::vector<double>& node_values(int j) const;
    const std::vector<double>& node_dx(int j) const;
    const std::vector<double>& node_dy(int j) const;

    // CSV summary: j,k,l,eigenvalue,grad_sup
    std::string summary_csv() const;

private:
    void build_tables() const;

    Domain dom_;
    std::vector<SineMode> modes_;
    mutable std::vector<std::vector<double>> val_, dx_, dy_;
};

// Galerkin coefficients of the three velocity components on the first n
// modes; u^N(x,t) = sum_j u_j(t) eta_j(x).
struct GalerkinState {
    int n = 0;
    std::vector<std::array<double, 3>> coeffs;
    double time = 0.0;

    double l2_norm() const; // (sum_j |u_j|^2)^(1/2)
};

// First n eigenpairs; throws CapacityError when n exceeds the mode capacity
// (k <= nx-1, l <= ny-1 keeps every sampled mode exactly unit-norm).
SineBasis build_basis(const Domain& dom, int n);

// C_N = N * max_{j<=N} ||grad eta_j||_Linf; the sup is taken over a refined
// evaluation grid (refine factor configurable) plus the analytic boundary
// extrema candidates.
double grad_sup_constant(const SineBasis& basis, int N, int refine = 4);

} // namespace aurora
