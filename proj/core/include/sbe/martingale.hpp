// Discrete forward/backward martingale decomposition of a real observable
// h = Re or Im of one coordinate of a quadratic form, along a recorded path.
//
// Forward residual increments (Ito/left-endpoint convention):
//   M+_{n+1} - M+_n = h(u_{n+1}) - h(u_n) - d (L h)(u_n),
// with L = L0 for the pure Ornstein-Uhlenbeck dynamics and L = L0 + F.D for
// the nonlinear models (F.D the directional derivative along the drift). The
// backward martingale M- runs the same construction over the reversed path
// with the reversed-time generator Lhat = L0 - F.D: reversing a stationary
// trajectory flips the sign of the antisymmetric drift part.
//
// Key identity monitored here, with T = J d and discrete time t_n = n d:
//   int_0^{t_n} 2 L0 h(u_s) ds = -M+_{t_n} + M-_{T-t_n} - M-_T,
// whose residual against left-endpoint quadrature of the integral telescopes
// to d [Lhat h(u_0) - Lhat h(u_n)], hence O(d) pathwise.
#pragma once

#include <vector>

#include "sbe/dynamics.hpp"
#include "sbe/generator.hpp"
#include "sbe/quadratic.hpp"

namespace sbe {

// Drift term entering L and Lhat alongside the Ornstein-Uhlenbeck part.
enum class GeneratorDrift { none, burgers, ddt };

struct MartingalePair {
    std::vector<double> times;  // t_n = n d, the trajectory grid
    std::vector<double> m_fwd;  // M+ at t_n, m_fwd[0] = 0
    std::vector<double> m_bwd;  // M- at reversed time t_i (i steps from t = T)
    double qv_fwd = 0;          // sum of squared M+ increments over [0, T]
    double qv_bwd = 0;
    double key_residual_sup = 0;  // sup_n |quadrature LHS_n - RHS_n|
};

// Requires every step recorded (stride 1) with noise increments attached;
// throws std::invalid_argument otherwise. `sigma` is read only by the ddt
// drift. The observable is the `part` of coordinate k of `form`.
MartingalePair martingale_decompose(const TrajectoryRecorder& traj, const QuadraticForm& form,
                                    int k, Part part, double theta,
                                    GeneratorDrift drift = GeneratorDrift::none,
                                    double sigma = 0.0);

}  // namespace sbe
