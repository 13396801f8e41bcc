// The Poisson-equation solution H_N and the energy sums I_N(k).
//
// H_N solves L0 H_N = F_N for the Ornstein-Uhlenbeck generator L0 with rates
// |k|^(2 theta). From the integral representation H_N(x) = -int_0^inf
// F_N(e^(-A^theta t) x) dt, its coefficients are
//   h(k,k1,k2) = -ik / (|k1|^(2 theta) + |k2|^(2 theta)),
// truncated like F_N. The sums I_N(k) = sum c(k,k1,k2) collect the mode-wise
// Dirichlet energies of (H_N)_k; their growth in |k| (about |k|^(3-2 theta)
// for the fractional model, |k|^(-2 sigma) for 2d Navier-Stokes) is the
// scaling fingerprint behind every drift bound here.
#pragma once

#include <string>

#include "sbe/field.hpp"
#include "sbe/quadratic.hpp"

namespace sbe {

QuadraticForm poisson_form(int N, double theta);
// Evaluates the form: (H_N(x))_k = -ik sum x_{k1} x_{k2}/(|k1|^2theta + |k2|^2theta).
SpectralField h_poisson(const SpectralField& x, int N, double theta);

enum class IsumKind {
    fractional,  // c = |k|^2 / (|k1|^2theta + |k2|^2theta), param = theta
    ddt,         // c = |k|^(2-4sigma) / (|k1|^4sigma |k2|^4sigma (|k1|^2+|k2|^2)), param = sigma
};

struct IsumResult {
    double value = 0;
    // Nonempty when the coefficient needed an interpretation choice.
    std::string note;
};

// I_N(k) = sum over k1+k2=k, 0<|k|,|k1|,|k2|<=N of c(k,k1,k2).
IsumResult i_sum(int k, int N, IsumKind kind, double param);
// I_{N,M}(k) = sum c * (indicator_N - indicator_M)^2 (cutoff-difference sum).
IsumResult i_sum_diff(int k, int N, int M, IsumKind kind, double param);

// 2d Navier-Stokes energy sum: summand |k1|^(2+2sigma) /
// (|k1|^(2+2sigma) + |k2|^(2+2sigma))^2 over the Euclidean ball.
double i_sum_ns2d(Mode2d k, int N, double sigma);

}  // namespace sbe
