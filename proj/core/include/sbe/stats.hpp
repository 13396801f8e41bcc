// Ensemble estimators: batch-mean error bars, L^p norms of path suprema,
// log-log regression for scaling exponents, stationarity z-scores against the
// exact Gaussian moments, dyadic quadratic variation, and an exponential
// moment probe. Everything is a deterministic function of its inputs (the
// caller fixes the path ordering), so fixed seeds give bit-identical results.
#pragma once

#include <string>
#include <vector>

#include "sbe/drift.hpp"
#include "sbe/field.hpp"
#include "sbe/measures.hpp"

namespace sbe {

struct Estimate {
    double value = 0;
    double se = 0;
};

// Mean of `samples` with a batch-means standard error over 16 contiguous
// batches. Throws std::invalid_argument on fewer than 16 samples.
Estimate batch_mean(const std::vector<double>& samples);

// ( mean |s_i|^p )^(1/p) over per-path sup values, SE by the delta method on
// the batch-mean error of the p-th moment.
Estimate lp_norm(const std::vector<double>& sups, double p);

// L^p norm over the ensemble of sup_{t <= times[t_limit]} |(G_t)_k|, k given
// by its index into the accumulators' tracked-mode list.
Estimate lp_sup_norm(const std::vector<DriftAccumulator>& ensemble, size_t mode_index, double p);
Estimate lp_sup_norm(const std::vector<DriftAccumulator>& ensemble, size_t mode_index, double p,
                     size_t t_limit);

struct ScalingFit {
    std::string abscissa;  // what x is: "k", "M", "T", "eps"
    double slope = 0;
    double intercept = 0;  // in log space
    double slope_se = 0;
    double x_min = 0, x_max = 0;
    size_t n_points = 0;
};

struct ScalingPoint {
    double x = 0;
    double value = 0;
    double se = 0;
};

// Weighted least squares of log(value) on log(x); weights 1/se_log^2 with
// se_log = se/value (delta method), falling back to an unweighted fit when
// any se is nonpositive. The slope error is residual-scaled, so a noiseless
// power law reports slope_se = 0. Requires >= 5 points with positive x and
// value; throws std::invalid_argument otherwise.
ScalingFit scaling_regression(std::vector<ScalingPoint> points, std::string abscissa_label);

// Unweighted log-log fit for diagnostics with fewer abscissa points (>= 2);
// ignores the se fields.
ScalingFit loglog_fit(std::vector<ScalingPoint> points, std::string abscissa_label);

// Per-mode comparison of empirical second and fourth absolute moments at a
// fixed time against the product-Gaussian targets v(k) and 2 v(k)^2.
struct ModeStationarity {
    int k = 0;           // 1d mode, 0 for 2d entries
    Mode2d k2{0, 0};     // 2d mode for the ns variant
    double m2 = 0, m2_se = 0, m2_target = 0, z2 = 0;
    double m4 = 0, m4_se = 0, m4_target = 0, z4 = 0;
};

struct EnsembleSummary {
    size_t paths = 0;
    std::vector<ModeStationarity> modes;
    // Fraction of modes with |z2| < 3 and |z4| < 3.
    double pass_fraction(double z_gate = 3.0) const;
};

EnsembleSummary stationarity_test(const std::vector<SpectralField>& fields,
                                  const MeasureSpec& spec);
EnsembleSummary stationarity_test_2d(const std::vector<Field2d>& fields, const MeasureSpec& spec);

// Sum of squared increments of a uniformly sampled scalar path at dyadic mesh
// levels: level l uses increments spanning (n-1)/2^l grid steps, so levels
// strictly refine as l grows. Requires n - 1 a power of two >= 2^max(levels).
// The decay exponent is the unweighted log-log slope of QV_l against the
// relative mesh 2^-l (NaN when fewer than 2 positive QV values).
struct QVReport {
    std::vector<int> levels;
    std::vector<double> qv;
    double decay_exponent = 0;
    double decay_se = 0;
};

QVReport quadratic_variation(const std::vector<double>& path, const std::vector<int>& levels);

// Empirical E[e^(lambda Q)] over the sample, log-sum-exp stabilized. A row is
// flagged unreliable when the largest 1% of contributions carries more than
// half of the sum (the estimator is then dominated by extreme samples).
struct ExpMomentRow {
    double lambda = 0;
    double value = 0;
    bool unreliable = false;
};

std::vector<ExpMomentRow> exp_moment_probe(const std::vector<double>& samples,
                                           const std::vector<double>& lambdas);

}  // namespace sbe
