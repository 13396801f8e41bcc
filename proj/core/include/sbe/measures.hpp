// The invariant Gaussian measures and their moment calculus.
//
// White noise mu (1d): independent complex modes with E|x_k|^2 = 1, the
// invariant law of the Burgers-type models. Enstrophy-Gibbs gamma (2d):
// density per mode proportional to exp(-|k|^2 |x_k|^2), i.e. E|x_k|^2 =
// 1/|k|^2, invariant for the hyperviscous Navier-Stokes dynamics. Both are
// circularly symmetric: real and imaginary parts carry half the mode variance
// each, forced by x_{-k} = conj(x_k) together with the stated E|x_k|^2.
#pragma once

#include <cstdint>
#include <vector>

#include "sbe/field.hpp"
#include "sbe/rng.hpp"

namespace sbe {

enum class MeasureKind { white_noise_1d, ns_gibbs_2d };

struct MeasureSpec {
    MeasureKind kind = MeasureKind::white_noise_1d;
    int cutoff = 0;

    // Per-mode variance E|x_k|^2.
    double variance(int k) const;
    double variance(Mode2d k) const;
};

// Draws x with independent representative modes, x_{-k} = conj(x_k); each
// mode uses its own (purpose = init) stream from the family.
SpectralField sample(const MeasureSpec& spec, const StreamFamily& rng);
Field2d sample_2d(const MeasureSpec& spec, const StreamFamily& rng);

// Increment of a unit-rate complex Brownian motion over time delta:
// E|db|^2 = delta, independent real/imaginary parts of variance delta/2.
cplx complex_bm_increment(double delta, RngStream& rng);

// One factor of a Gaussian monomial: x_k, or conj(x_k) when conjugated.
struct MonomialFactor {
    int k = 0;
    bool conjugated = false;
};
struct MonomialFactor2d {
    Mode2d k;
    bool conjugated = false;
};

// Exact Gaussian moment E[prod factors] under the measure, by summing Wick
// pairings with the per-mode covariances E[x_a x_b] = 1_{a+b=0} v(a).
// Odd degree or no admissible pairing gives 0. Degree <= 8.
double wick_moment_oracle(const MeasureSpec& spec, const std::vector<MonomialFactor>& monomial);
double wick_moment_oracle(const MeasureSpec& spec, const std::vector<MonomialFactor2d>& monomial);

}  // namespace sbe
