// Ornstein-Uhlenbeck generator calculus on quadratic observables.
//
//   L0 phi = sum_k |k|^(2 theta) (-x_k D_k phi + 1/2 D_{-k} D_k phi)
//
// with D_k the partial derivative in the coordinate x_k (modes treated as
// algebraically independent; the state space is the Hermitian slice). For a
// quadratic form's output coordinate k != 0 the diffusion part vanishes
// identically: D_{-q} D_q picks the pair {q,-q}, which sums to 0, never to k.
//
// Real observables are the parts of a complex coordinate G: with
// G*(x) = conj(G(x)) on Hermitian points, D_q G* = conj(D_{-q} G), so
//   D_q Re G = (D_q G + conj(D_{-q} G))/2,
//   D_q Im G = (D_q G - conj(D_{-q} G))/(2i),
// and L0 commutes with taking parts. The Dirichlet energy uses the 1/2
// convention: E^theta(h) = 1/2 sum_k |k|^(2 theta) |D_k h|^2; the martingale
// quadratic variation of h along the stationary dynamics is then
// 4 E^theta(h) per unit time (noise normalization makes E|eta_k|^2 ~
// 2 |k|^(2 theta) dt).
#pragma once

#include "sbe/field.hpp"
#include "sbe/measures.hpp"
#include "sbe/quadratic.hpp"

namespace sbe {

enum class Part { plus, minus };  // real / imaginary part of a coordinate

// L0 applied to every output coordinate of q, evaluated at x.
SpectralField generator_apply(const QuadraticForm& q, const SpectralField& x, double theta);
cplx generator_apply_coord(const QuadraticForm& q, const SpectralField& x, int k, double theta);

// D_q of the chosen part of coordinate k, at x.
cplx part_derivative(const QuadraticForm& q, const SpectralField& x, int k, Part part, int dq);

// E^theta of the chosen part of coordinate k, at x.
double dirichlet_energy(const QuadraticForm& q, int k, Part part, const SpectralField& x,
                        double theta);

// Closed-form E_mu[E^theta(part of (Qx)_k)] for a centered product measure
// with per-mode variances from spec; exact for quadratic-plus-linear forms
// (the derivatives are affine with disjoint variables).
double expected_dirichlet_energy(const QuadraticForm& q, int k, Part part, double theta,
                                 const MeasureSpec& spec);

}  // namespace sbe
