// The four model drifts.
//
// Burgers:          F_N(x)_k  = ik sum_{k1+k2=k} x_{k1} x_{k2},  all |.| <= N
// Smoothed variant: F_sigma   = A^-sigma F_N(A^-sigma x)
// Lattice model:    Fb_N(x)_k = sum x_{k1} x_{k2} [g_N(k) - g_N(k)* + g_N(k1) - g_N(k2)*]
// 2d Navier-Stokes: B_N(x)_k  = sum b(k,k1,k2) x_{k1} x_{k2},
//                   b = (k_perp . k1)(k . k2)/|k|^2, k_perp = (k_y, -k_x),
//                   modes in the Euclidean ball Z^2_N minus 0.
//
// All convolutions are direct O(N^2) sums with sharp-cutoff semantics; the
// cutoff indicators are part of the model, not an approximation artifact.
// Each drift conserves its model's quadratic invariant (L^2 mass in 1d,
// kinetic energy sum |k|^2 |x_k|^2 in 2d) and x_k never enters its own
// coordinate (divergence-free), which together make the Gaussian invariant
// measures of the linear parts invariant for the full dynamics.
#pragma once

#include "sbe/field.hpp"
#include "sbe/quadratic.hpp"

namespace sbe {

SpectralField burgers_nonlinearity(const SpectralField& x, int N);
SpectralField ddt_nonlinearity(const SpectralField& x, int N, double sigma);
SpectralField ss_nonlinearity(const SpectralField& x, int N);
Field2d ns_nonlinearity(const Field2d& x, int N);

// The same drifts as coefficient functions, for generator/energy calculus.
QuadraticForm burgers_form(int N);
QuadraticForm ddt_form(int N, double sigma);
QuadraticForm ss_form(int N);

// 2d interaction coefficient b(k,k1,k2).
double ns_coefficient(Mode2d k, Mode2d k1, Mode2d k2);

// Plain truncated convolution conv(a,b)_k = sum_{k1+k2=k} a_{k1} b_{k2} over
// 0 < |k|,|k1|,|k2| <= N; building block for the drifts above.
SpectralField convolve(const SpectralField& a, const SpectralField& b, int N);

}  // namespace sbe
