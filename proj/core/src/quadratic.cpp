#include "sbe/quadratic.hpp"

#include <algorithm>

namespace sbe {

namespace {
bool admissible(int cutoff, int j) { return j != 0 && j >= -cutoff && j <= cutoff; }
}

cplx evaluate_coord(const QuadraticForm& q, const SpectralField& x, int k) {
    if (!admissible(q.cutoff, k)) return {};
    cplx acc{};
    if (q.quad) {
        int lo = std::max(-q.cutoff, k - q.cutoff);
        int hi = std::min(q.cutoff, k + q.cutoff);
        for (int k1 = lo; k1 <= hi; ++k1) {
            int k2 = k - k1;
            if (k1 == 0 || k2 == 0) continue;
            acc += q.quad(k, k1, k2) * x.at(k1) * x.at(k2);
        }
    }
    if (q.lin) {
        for (int j = -q.cutoff; j <= q.cutoff; ++j) {
            if (j == 0) continue;
            acc += q.lin(k, j) * x.at(j);
        }
    }
    return acc;
}

SpectralField evaluate(const QuadraticForm& q, const SpectralField& x) {
    SpectralField out(q.cutoff);
    for (int k = -q.cutoff; k <= q.cutoff; ++k) {
        if (k == 0) continue;
        out.set(k, evaluate_coord(q, x, k));
    }
    return out;
}

cplx pair_coeff(const QuadraticForm& q, int k, int q1) {
    if (!q.quad) return {};
    int q2 = k - q1;
    if (!admissible(q.cutoff, k) || !admissible(q.cutoff, q1) || !admissible(q.cutoff, q2))
        return {};
    return q.quad(k, q1, q2) + q.quad(k, q2, q1);
}

cplx coord_derivative(const QuadraticForm& q, const SpectralField& x, int k, int dq) {
    cplx acc = pair_coeff(q, k, dq) * x.at(k - dq);
    if (q.lin && admissible(q.cutoff, k) && admissible(q.cutoff, dq)) acc += q.lin(k, dq);
    return acc;
}

cplx directional_derivative(const QuadraticForm& q, const SpectralField& x,
                            const SpectralField& a, int k) {
    if (!admissible(q.cutoff, k)) return {};
    cplx acc{};
    if (q.quad) {
        int lo = std::max(-q.cutoff, k - q.cutoff);
        int hi = std::min(q.cutoff, k + q.cutoff);
        for (int k1 = lo; k1 <= hi; ++k1) {
            int k2 = k - k1;
            if (k1 == 0 || k2 == 0) continue;
            acc += q.quad(k, k1, k2) * (a.at(k1) * x.at(k2) + x.at(k1) * a.at(k2));
        }
    }
    if (q.lin) {
        for (int j = -q.cutoff; j <= q.cutoff; ++j) {
            if (j == 0) continue;
            acc += q.lin(k, j) * a.at(j);
        }
    }
    return acc;
}

}  // namespace sbe
