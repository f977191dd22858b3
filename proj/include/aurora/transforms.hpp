#pragma once

#include <complex>
#include <vector>

#include "aurora/fields.hpp"

// Fast orthogonal transforms on the cell-centered grid (FFTW-backed).
//
// dst2: coefficients against the L2-orthonormal sine modes
//   e_{k,l}(x,y) = sqrt(2/Lx) sin(k pi x/Lx) * sqrt(2/Ly) sin(l pi y/Ly),
//   k=1..nx, l=1..ny. Forward is the midpoint-weighted inner product; the
//   pair is an isometry: sum c^2 = h^2 sum f^2 and inverse(forward(f)) = f.
// dct2: same against cosine modes, k=0..nx-1, l=0..ny-1.
//
// Modal index layout: c[(k-1) + nx*(l-1)] for dst2, c[k + nx*l] for dct2.
namespace aurora {

std::vector<double> dst2_forward(const ScalarField& f);
ScalarField dst2_inverse(const Domain& dom, const std::vector<double>& modal);
std::vector<double> dct2_forward(const ScalarField& f);
ScalarField dct2_inverse(const Domain& dom, const std::vector<double>& modal);

// Continuum eigenvalue of -Laplacian for the sine mode (k,l), k,l >= 1:
// pi^2 (k^2/Lx^2 + l^2/Ly^2). Cosine modes use the same formula with
// k,l >= 0.
double sine_eigenvalue(const Domain& dom, int k, int l);

// f <- exp(t * Laplacian) f spectrally, per the field's own boundary family
// (sine for dirichlet0, cosine for neumann0). Exact heat semigroup of the
// spectral Laplacian; conserves the cosine zero mode.
void apply_heat_semigroup(ScalarField& f, double t);

// Spectral Laplacian (the generator the semigroup above exponentiates).
ScalarField spectral_laplacian(const ScalarField& f);

// One exact linear Schroedinger step: psi <- exp(i t Laplacian) psi on the
// Dirichlet sine basis. Unitary: both substep transforms are orthogonal.
void apply_schroedinger_propagator(ComplexField& psi, double t);

// 2D complex FFT on an arbitrary rectangular array (row-major, x fastest),
// used by the Riesz operator on its zero-padded periodic box.
void fft2(std::vector<std::complex<double>>& a, int nx, int ny, bool inverse);

} // namespace aurora
