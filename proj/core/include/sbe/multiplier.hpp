// Fourier multipliers m: k -> m(k) acting coefficient-wise, (m x)_k = m(k) x_k.
// A multiplier preserves real-valued physical fields iff m(-k) = conj(m(k));
// that rule is enforced at construction. Covers the dissipation |k|^(2 theta),
// its semigroup, the derivative ik, fractional smoothing, the mollifier
// rho_hat(eps k), and the lattice gradient symbol g_N.
#pragma once

#include <functional>
#include <string>

#include "sbe/field.hpp"

namespace sbe {

class Multiplier {
  public:
    // Verifies symbol(-k) == conj(symbol(k)) for 1 <= k <= check_band and
    // throws std::invalid_argument on violation.
    Multiplier(std::string label, std::function<cplx(int)> symbol, int check_band = 64);

    cplx operator()(int k) const { return symbol_(k); }
    const std::string& label() const { return label_; }

  private:
    std::string label_;
    std::function<cplx(int)> symbol_;
};

SpectralField apply_multiplier(const SpectralField& x, const Multiplier& m);

// |k|^(2 theta), the dissipation A^theta.
Multiplier dissipation_multiplier(double theta);
// e^(-|k|^(2 theta) t), the dissipation semigroup.
Multiplier semigroup_multiplier(double theta, double t);
// |k|^(-2 sigma), fractional smoothing A^(-sigma).
Multiplier smoothing_multiplier(double sigma);
// ik, the spatial derivative.
Multiplier derivative_multiplier();
// rho_hat(eps k), compact-support smoothing (see mollifier_hat).
Multiplier mollifier_multiplier(double eps);

// The mollifier profile: 1 on |xi| <= 1, exp(1 - 1/(1 - (|xi|-1)^2)) on
// 1 < |xi| < 2, 0 beyond. Smooth, monotone on the shoulder.
double mollifier_hat(double xi);
// rho_hat(eps k) for a mode index; requires eps > 0.
double mollifier_symbol(double eps, int k);

// Lattice gradient symbol g_N(k) = (e^(i k h) - 1)/h with grid spacing
// h = 2 pi / (2N + 1); g_N(k) -> ik as N grows.
cplx lattice_g(int N, int k);
// |g_N(k)|^2 = 2 (1 - cos(k h)) / h^2, the lattice dissipation rate.
double lattice_lambda(int N, int k);

}  // namespace sbe
