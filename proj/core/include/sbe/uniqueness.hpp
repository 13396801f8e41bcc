// Coupled-resolution contraction experiment: one reference Galerkin solution
// at cutoff N_ref and a ladder of coarser resolutions driven by the *same*
// per-mode noise draws and initial modes (streams are keyed by the mode index
// alone, so resolutions consume identical Brownian increments on shared
// modes). All resolutions advance in lockstep within a single time loop; no
// trajectory is stored.
//
// Per ladder member N, with w = 2 theta - 3/2 - 2 eps and Delta = P_N(u - u^N):
//   A_N   = sup_{t,k} |k|^w |Delta_k|
//   Phi_N = sup_{t,k} |k|^w |phi_k|,  phi the mild integral of the
//           truncation residual F(u) - F_N(u) along the reference path
//   Q_T   = sup_{t,k} |k|^(w+1) * mild integral of
//           sum_q |(P_N u + u^N)_q| |k-q|^(-w),
// the size of the contraction prefactor: when C Q_T < 1/2 the fixed-point
// bound gives A_N <= 2 Phi_N, and Phi_N -> 0 in N forces coarse solutions to
// converge to the reference.
//
// A_N is dominated by modes near the cutoff k ~ N, where the k^w weight
// cancels almost all of the truncation error's decay; a_band records the
// same weighted sup restricted to the fixed window k <= min(ladder), where
// refinement is actually visible as decay in N.
#pragma once

#include <vector>

#include "sbe/config.hpp"
#include "sbe/dynamics.hpp"

namespace sbe {

struct LadderPoint {
    int N = 0;
    double a_n = 0;
    double a_band = 0;  // same sup restricted to k <= smallest ladder rung
    double phi_n = 0;
    double q_t = 0;
};

struct UniquenessPathResult {
    std::vector<LadderPoint> ladder;  // ascending N
    bool a_monotone = false;          // A_N strictly decreasing along the ladder
    double a_slope = 0;               // unweighted log-log slope of A_N vs N
};

// `ref` is the reference model configuration (cutoff ref.N); ladder entries
// must satisfy 1 <= N <= ref.N. Throws BlowUpError on numeric escape and
// std::invalid_argument on a bad ladder.
UniquenessPathResult run_uniqueness_path(const ModelConfig& ref, const std::vector<int>& ladder,
                                         double eps, const StreamFamily& family);

}  // namespace sbe
