#include "sbe/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace sbe {

namespace {
const char* kDdtNote =
    "ddt coefficient read symmetrically as |k1|^4sigma |k2|^4sigma in the denominator";

double coefficient(IsumKind kind, double param, double k, double k1, double k2) {
    switch (kind) {
        case IsumKind::fractional:
            return k * k / (std::pow(k1, 2.0 * param) + std::pow(k2, 2.0 * param));
        case IsumKind::ddt:
            return std::pow(k, 2.0 - 4.0 * param) /
                   (std::pow(k1, 4.0 * param) * std::pow(k2, 4.0 * param) * (k1 * k1 + k2 * k2));
    }
    return 0;
}
}  // namespace

QuadraticForm poisson_form(int N, double theta) {
    if (theta <= 0) throw std::invalid_argument("poisson_form: theta must be > 0");
    QuadraticForm f;
    f.cutoff = N;
    f.quad = [theta](int k, int k1, int k2) -> cplx {
        double d = std::pow(std::abs(double(k1)), 2.0 * theta) +
                   std::pow(std::abs(double(k2)), 2.0 * theta);
        return cplx{0.0, -double(k)} / d;
    };
    return f;
}

SpectralField h_poisson(const SpectralField& x, int N, double theta) {
    return evaluate(poisson_form(N, theta), x);
}

IsumResult i_sum(int k, int N, IsumKind kind, double param) {
    return i_sum_diff(k, N, 0, kind, param);
}

IsumResult i_sum_diff(int k, int N, int M, IsumKind kind, double param) {
    if (k == 0) throw std::invalid_argument("i_sum: zero mode excluded");
    IsumResult r;
    if (kind == IsumKind::ddt) r.note = kDdtNote;
    int big = std::max(N, M);
    for (int k1 = -big; k1 <= big; ++k1) {
        int k2 = k - k1;
        if (k1 == 0 || k2 == 0 || std::abs(k2) > big) continue;
        int in_n = (std::abs(k) <= N && std::abs(k1) <= N && std::abs(k2) <= N) ? 1 : 0;
        int in_m = (std::abs(k) <= M && std::abs(k1) <= M && std::abs(k2) <= M) ? 1 : 0;
        int d = in_n - in_m;
        if (d == 0) continue;
        r.value += double(d * d) *
                   coefficient(kind, param, std::abs(double(k)), std::abs(double(k1)),
                               std::abs(double(k2)));
    }
    return r;
}

double i_sum_ns2d(Mode2d k, int N, double sigma) {
    if (k.x == 0 && k.y == 0) throw std::invalid_argument("i_sum_ns2d: zero mode excluded");
    if (norm2(k) > double(N) * N) return 0;
    double total = 0;
    const double ball = double(N) * N;
    const double e = 1.0 + sigma;  // |k|^(2+2sigma) = (|k|^2)^(1+sigma)
    for (int ax = -N; ax <= N; ++ax)
        for (int ay = -N; ay <= N; ++ay) {
            Mode2d k1{ax, ay};
            Mode2d k2{k.x - ax, k.y - ay};
            if ((ax == 0 && ay == 0) || (k2.x == 0 && k2.y == 0)) continue;
            if (norm2(k1) > ball || norm2(k2) > ball) continue;
            double a = std::pow(norm2(k1), e), b = std::pow(norm2(k2), e);
            total += a / ((a + b) * (a + b));
        }
    return total;
}

}  // namespace sbe
