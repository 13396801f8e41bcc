#include "sbe/nonlinearity.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sbe/multiplier.hpp"

namespace sbe {

SpectralField convolve(const SpectralField& a, const SpectralField& b, int N) {
    SpectralField out(N);
    for (int k = -N; k <= N; ++k) {
        if (k == 0) continue;
        cplx acc{};
        int lo = std::max(-N, k - N), hi = std::min(N, k + N);
        for (int k1 = lo; k1 <= hi; ++k1) {
            if (k1 == 0 || k1 == k) continue;
            acc += a.at(k1) * b.at(k - k1);
        }
        out.set(k, acc);
    }
    return out;
}

SpectralField burgers_nonlinearity(const SpectralField& x, int N) {
    if (N < 1) throw std::invalid_argument("burgers_nonlinearity: N must be >= 1");
    SpectralField out(N);
    // Hermitian input gives Hermitian ik*(x*x), so only k > 0 is computed.
    for (int k = 1; k <= N; ++k) {
        cplx acc{};
        int lo = std::max(-N, k - N), hi = std::min(N, k + N);
        for (int k1 = lo; k1 <= hi; ++k1) {
            if (k1 == 0 || k1 == k) continue;
            acc += x.at(k1) * x.at(k - k1);
        }
        out.set_pair(k, cplx{0.0, double(k)} * acc);
    }
    return out;
}

SpectralField ddt_nonlinearity(const SpectralField& x, int N, double sigma) {
    if (sigma < 0) throw std::invalid_argument("ddt_nonlinearity: sigma must be >= 0");
    if (sigma == 0.0) return burgers_nonlinearity(x, N);
    Multiplier smooth = smoothing_multiplier(sigma);
    return apply_multiplier(burgers_nonlinearity(apply_multiplier(x, smooth), N), smooth);
}

SpectralField ss_nonlinearity(const SpectralField& x, int N) {
    if (N < 1) throw std::invalid_argument("ss_nonlinearity: N must be >= 1");
    // The bracket splits into (g(k) - g(k)*) sum x x + conv(g x, x) - conv(x, g* x).
    SpectralField gx(N), gcx(N);
    for (int j = -N; j <= N; ++j) {
        if (j == 0) continue;
        cplx g = lattice_g(N, j);
        gx.set(j, g * x.at(j));
        gcx.set(j, std::conj(g) * x.at(j));
    }
    SpectralField xx = convolve(x, x, N);
    SpectralField a = convolve(gx, x, N);
    SpectralField b = convolve(x, gcx, N);
    SpectralField out(N);
    for (int k = -N; k <= N; ++k) {
        if (k == 0) continue;
        cplx gk = lattice_g(N, k);
        out.set(k, (gk - std::conj(gk)) * xx.at(k) + a.at(k) - b.at(k));
    }
    return out;
}

double ns_coefficient(Mode2d k, Mode2d k1, Mode2d k2) {
    double perp = double(k.y) * k1.x - double(k.x) * k1.y;  // k_perp . k1
    double dot = double(k.x) * k2.x + double(k.y) * k2.y;   // k . k2
    return perp * dot / norm2(k);
}

Field2d ns_nonlinearity(const Field2d& x, int N) {
    if (N < 1) throw std::invalid_argument("ns_nonlinearity: N must be >= 1");
    Field2d out(N);
    const double ball = double(N) * N;
    for (const Mode2d& k : out.half_modes()) {
        cplx acc{};
        for (const Mode2d& k1 : out.modes()) {  // enumerates the N-ball
            Mode2d k2{k.x - k1.x, k.y - k1.y};
            if ((k2.x == 0 && k2.y == 0) || norm2(k2) > ball) continue;
            acc += ns_coefficient(k, k1, k2) * x.at(k1) * x.at(k2);
        }
        out.set_pair(k, acc);
    }
    return out;
}

QuadraticForm burgers_form(int N) {
    QuadraticForm f;
    f.cutoff = N;
    f.quad = [](int k, int, int) -> cplx { return {0.0, double(k)}; };
    return f;
}

QuadraticForm ddt_form(int N, double sigma) {
    QuadraticForm f;
    f.cutoff = N;
    f.quad = [sigma](int k, int k1, int k2) -> cplx {
        double w = std::pow(std::abs(double(k)), -2.0 * sigma) *
                   std::pow(std::abs(double(k1)), -2.0 * sigma) *
                   std::pow(std::abs(double(k2)), -2.0 * sigma);
        return cplx{0.0, double(k)} * w;
    };
    return f;
}

QuadraticForm ss_form(int N) {
    QuadraticForm f;
    f.cutoff = N;
    f.quad = [N](int k, int k1, int k2) -> cplx {
        cplx gk = lattice_g(N, k);
        return gk - std::conj(gk) + lattice_g(N, k1) - std::conj(lattice_g(N, k2));
    };
    return f;
}

}  // namespace sbe
