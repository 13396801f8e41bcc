#include "sbe/generator.hpp"

#include <cmath>

namespace sbe {

namespace {
const cplx kHalfOverI{0.0, -0.5};  // 1/(2i)
}

cplx generator_apply_coord(const QuadraticForm& q, const SpectralField& x, int k, double theta) {
    // Drift part only: the diffusion part D_{-q} D_q (Qx)_k vanishes for k != 0
    // (see header). Linear parts have no second derivatives at all.
    cplx acc{};
    for (int dq = -q.cutoff; dq <= q.cutoff; ++dq) {
        if (dq == 0) continue;
        cplx d = coord_derivative(q, x, k, dq);
        if (d == cplx{}) continue;
        acc -= std::pow(std::abs(double(dq)), 2.0 * theta) * x.at(dq) * d;
    }
    return acc;
}

SpectralField generator_apply(const QuadraticForm& q, const SpectralField& x, double theta) {
    SpectralField out(q.cutoff);
    for (int k = -q.cutoff; k <= q.cutoff; ++k) {
        if (k == 0) continue;
        out.set(k, generator_apply_coord(q, x, k, theta));
    }
    return out;
}

cplx part_derivative(const QuadraticForm& q, const SpectralField& x, int k, Part part, int dq) {
    cplx d1 = coord_derivative(q, x, k, dq);
    cplx d2 = std::conj(coord_derivative(q, x, k, -dq));
    return part == Part::plus ? 0.5 * (d1 + d2) : kHalfOverI * (d1 - d2);
}

double dirichlet_energy(const QuadraticForm& q, int k, Part part, const SpectralField& x,
                        double theta) {
    double acc = 0;
    for (int dq = -q.cutoff; dq <= q.cutoff; ++dq) {
        if (dq == 0) continue;
        acc += std::pow(std::abs(double(dq)), 2.0 * theta) * std::norm(part_derivative(q, x, k, part, dq));
    }
    return 0.5 * acc;
}

double expected_dirichlet_energy(const QuadraticForm& q, int k, Part part, double theta,
                                 const MeasureSpec& spec) {
    // D_dq G_k = c x_{k-dq} + l with c = pair_coeff(k,dq), so the part
    // derivative is affine in the two independent variables x_{k-dq} and
    // x_{-(k+dq)} (independent because k != 0), and its second moment is the
    // sum of the variable variances plus the squared constant.
    auto var = [&](int j) { return (j == 0 || std::abs(j) > q.cutoff) ? 0.0 : spec.variance(std::abs(j)); };
    auto lin = [&](int dq) -> cplx {
        if (!q.lin || std::abs(k) > q.cutoff || k == 0) return {};
        return q.lin(k, dq);
    };
    double acc = 0;
    for (int dq = -q.cutoff; dq <= q.cutoff; ++dq) {
        if (dq == 0) continue;
        cplx cp = pair_coeff(q, k, dq);
        cplx cm = std::conj(pair_coeff(q, k, -dq));
        cplx lp = lin(dq), lm = std::conj(lin(-dq));
        cplx const_term = part == Part::plus ? 0.5 * (lp + lm) : kHalfOverI * (lp - lm);
        double second = 0.25 * std::norm(cp) * var(k - dq) + 0.25 * std::norm(cm) * var(k + dq) +
                        std::norm(const_term);
        acc += std::pow(std::abs(double(dq)), 2.0 * theta) * second;
    }
    return 0.5 * acc;
}

}  // namespace sbe
