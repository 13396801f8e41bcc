#include "sbe/drift.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "sbe/multiplier.hpp"

namespace sbe {

namespace {

void require_grid(const TrajectoryRecorder& traj) {
    if (traj.times.size() < 2) throw std::invalid_argument("drift accumulation needs >= 2 samples");
}

// Shared left-endpoint loop: value[i] = decay-combine(value[i-1], coord(u_{i-1})).
template <typename CoordFn, typename CombineFn>
DriftAccumulator accumulate(const TrajectoryRecorder& traj, const std::vector<int>& modes,
                            CoordFn coord, CombineFn combine) {
    require_grid(traj);
    DriftAccumulator out;
    out.times = traj.times;
    out.modes = modes;
    out.values.assign(traj.times.size(), std::vector<cplx>(modes.size(), cplx{}));
    for (size_t i = 1; i < traj.times.size(); ++i) {
        double delta = traj.times[i] - traj.times[i - 1];
        const SpectralField& u = traj.fields[i - 1];
        for (size_t m = 0; m < modes.size(); ++m)
            out.values[i][m] = combine(out.values[i - 1][m], coord(u, modes[m]), modes[m], delta);
    }
    return out;
}

}  // namespace

double DriftAccumulator::sup_abs(size_t mode_index, size_t t_limit) const {
    if (mode_index >= modes.size() || t_limit >= times.size())
        throw std::out_of_range("DriftAccumulator::sup_abs");
    double sup = 0;
    for (size_t i = 0; i <= t_limit; ++i) sup = std::max(sup, std::abs(values[i][mode_index]));
    return sup;
}

cplx burgers_coord(const SpectralField& x, int M, int k) {
    if (k == 0 || std::abs(k) > M) return {};
    cplx acc{};
    int lo = std::max(-M, k - M), hi = std::min(M, k + M);
    for (int k1 = lo; k1 <= hi; ++k1) {
        int k2 = k - k1;
        if (k1 == 0 || k2 == 0) continue;
        acc += x.at(k1) * x.at(k2);
    }
    return cplx{0.0, double(k)} * acc;
}

DriftAccumulator accumulate_drift(const TrajectoryRecorder& traj, int M,
                                  const std::vector<int>& modes) {
    return accumulate(
        traj, modes, [M](const SpectralField& u, int k) { return burgers_coord(u, M, k); },
        [](cplx prev, cplx f, int, double delta) { return prev + delta * f; });
}

DriftAccumulator accumulate_mild_drift(const TrajectoryRecorder& traj, int M, double theta,
                                       const std::vector<int>& modes) {
    return accumulate(
        traj, modes, [M](const SpectralField& u, int k) { return burgers_coord(u, M, k); },
        [theta](cplx prev, cplx f, int k, double delta) {
            double lambda = std::pow(std::abs(double(k)), 2.0 * theta);
            return std::exp(-lambda * delta) * prev + phi1(lambda, delta) * f;
        });
}

DriftAccumulator mollified_drift(const TrajectoryRecorder& traj, double eps,
                                 const std::vector<int>& modes) {
    auto coord = [eps](const SpectralField& u, int k) -> cplx {
        if (k == 0) return {};
        int band = u.cutoff();
        cplx acc{};
        for (int k1 = -band; k1 <= band; ++k1) {
            int k2 = k - k1;
            if (k1 == 0 || k2 == 0 || std::abs(k2) > band) continue;
            double w = mollifier_symbol(eps, k1) * mollifier_symbol(eps, k2);
            if (w == 0) continue;
            acc += w * u.at(k1) * u.at(k2);
        }
        return cplx{0.0, double(k)} * acc;
    };
    return accumulate(traj, modes, coord,
                      [](cplx prev, cplx f, int, double delta) { return prev + delta * f; });
}

}  // namespace sbe
