// Time-integrated drift functionals along a recorded path, per tracked mode:
//
//   plain:     G^M_t   = int_0^t F_M(u_s) ds            (left-endpoint sums)
//   mild:      Gt^M_t  = int_0^t e^(-A^theta (t-s)) F_M(u_s) ds
//              via the exact per-step recursion
//              Gt(t+d) = e^(-lambda d) Gt(t) + phi1(lambda,d) F_M(u_t)
//   mollified: B^eps_t = int_0^t F(rho^eps * u_s) ds, the multiplier
//              rho_hat(eps k) applied before squaring, no extra cutoff.
//
// Their mode-wise L^p growth in |k|, M, T and eps carries the model's scaling
// exponents; the accumulators only evaluate the tracked output coordinates.
#pragma once

#include <vector>

#include "sbe/dynamics.hpp"
#include "sbe/field.hpp"

namespace sbe {

struct DriftAccumulator {
    std::vector<double> times;  // same grid as the source trajectory
    std::vector<int> modes;     // tracked output modes
    // values[i][m]: accumulated value at times[i] for modes[m]; values[0] = 0.
    std::vector<std::vector<cplx>> values;

    // sup over recorded t <= times[t_limit] of |value_k(t)|.
    double sup_abs(size_t mode_index, size_t t_limit) const;
    double sup_abs(size_t mode_index) const { return sup_abs(mode_index, times.size() - 1); }
};

DriftAccumulator accumulate_drift(const TrajectoryRecorder& traj, int M,
                                  const std::vector<int>& modes);
DriftAccumulator accumulate_mild_drift(const TrajectoryRecorder& traj, int M, double theta,
                                       const std::vector<int>& modes);
DriftAccumulator mollified_drift(const TrajectoryRecorder& traj, double eps,
                                 const std::vector<int>& modes);

// Single output coordinate of the truncated Burgers drift, O(M) work.
cplx burgers_coord(const SpectralField& x, int M, int k);

}  // namespace sbe
