#include "sbe/martingale.hpp"

#include <cmath>
#include <stdexcept>

#include "sbe/nonlinearity.hpp"

namespace sbe {

namespace {
double take_part(Part part, cplx z) { return part == Part::plus ? z.real() : z.imag(); }
}  // namespace

MartingalePair martingale_decompose(const TrajectoryRecorder& traj, const QuadraticForm& form,
                                    int k, Part part, double theta, GeneratorDrift drift,
                                    double sigma) {
    if (!traj.has_noise)
        throw std::invalid_argument("martingale_decompose: trajectory lacks noise increments");
    if (traj.stride != 1)
        throw std::invalid_argument("martingale_decompose: every step must be recorded");
    if (traj.times.size() < 2)
        throw std::invalid_argument("martingale_decompose: need at least one step");

    const size_t J = traj.times.size() - 1;
    const double delta = traj.dt;

    // Pointwise observable data along the path: h, L0 h, and the drift
    // directional derivative F.Dh (zero for the plain OU generator).
    std::vector<double> h(J + 1), l0h(J + 1), fdh(J + 1, 0.0);
    for (size_t j = 0; j <= J; ++j) {
        const SpectralField& u = traj.fields[j];
        h[j] = take_part(part, evaluate_coord(form, u, k));
        l0h[j] = take_part(part, generator_apply_coord(form, u, k, theta));
        if (drift != GeneratorDrift::none) {
            SpectralField f = drift == GeneratorDrift::burgers
                                  ? burgers_nonlinearity(u, traj.cutoff)
                                  : ddt_nonlinearity(u, traj.cutoff, sigma);
            fdh[j] = take_part(part, directional_derivative(form, u, f, k));
        }
    }

    MartingalePair out;
    out.times = traj.times;
    out.m_fwd.assign(J + 1, 0.0);
    out.m_bwd.assign(J + 1, 0.0);

    for (size_t n = 0; n < J; ++n) {
        double inc = h[n + 1] - h[n] - delta * (l0h[n] + fdh[n]);
        out.m_fwd[n + 1] = out.m_fwd[n] + inc;
        out.qv_fwd += inc * inc;
    }
    for (size_t i = 0; i < J; ++i) {  // reversed path v_i = u_{J-i}
        size_t j = J - i;
        double inc = h[j - 1] - h[j] - delta * (l0h[j] - fdh[j]);
        out.m_bwd[i + 1] = out.m_bwd[i] + inc;
        out.qv_bwd += inc * inc;
    }

    double lhs = 0;  // left-endpoint quadrature of int 2 L0 h ds up to t_n
    for (size_t n = 0; n <= J; ++n) {
        double rhs = -out.m_fwd[n] + out.m_bwd[J - n] - out.m_bwd[J];
        out.key_residual_sup = std::max(out.key_residual_sup, std::abs(lhs - rhs));
        if (n < J) lhs += delta * 2.0 * l0h[n];
    }
    return out;
}

}  // namespace sbe
