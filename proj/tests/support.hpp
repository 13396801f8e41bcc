// Shared test scaffolding: deterministic random fields and brute-force
// reference implementations. The oracles here are written as direct triple
// loops over integer mode indices, on purpose sharing no code with the
// library; they are only meant to be obviously correct at small cutoffs.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "sbe/field.hpp"
#include "sbe/rng.hpp"

namespace testsup {

using sbe::cplx;

// Hermitian field with unit-variance complex Gaussian modes, deterministic
// in (seed, tag).
inline sbe::SpectralField random_field(int N, uint64_t seed, uint64_t tag = 0) {
    sbe::SpectralField x(N);
    sbe::RngStream rng(seed, tag);
    for (int k = 1; k <= N; ++k) x.set_pair(k, rng.complex_gaussian(1.0));
    return x;
}

inline sbe::Field2d random_field_2d(int N, uint64_t seed, uint64_t tag = 0) {
    sbe::Field2d x(N);
    sbe::RngStream rng(seed, tag);
    for (const sbe::Mode2d& k : x.half_modes()) x.set_pair(k, rng.complex_gaussian(1.0));
    return x;
}

// Coefficient accessor over the full index range, zero outside the band.
using Coeffs = std::function<cplx(int)>;

inline Coeffs coeffs(const sbe::SpectralField& x) {
    return [&x](int k) { return x.at(k); };
}

// sum_{k1+k2=k} x_{k1} x_{k2} over 0 < |k1|,|k2| <= N, by blind enumeration.
inline cplx oracle_pair_sum(const Coeffs& x, int N, int k,
                            const std::function<cplx(int, int, int)>& coeff) {
    cplx acc{};
    for (int k1 = -N; k1 <= N; ++k1) {
        int k2 = k - k1;
        if (k1 == 0 || k2 == 0 || std::abs(k2) > N) continue;
        acc += coeff(k, k1, k2) * x(k1) * x(k2);
    }
    return acc;
}

inline cplx oracle_burgers(const Coeffs& x, int N, int k) {
    if (k == 0 || std::abs(k) > N) return {};
    return oracle_pair_sum(x, N, k,
                           [](int kk, int, int) { return cplx{0.0, double(kk)}; });
}

inline cplx oracle_ddt(const Coeffs& x, int N, double sigma, int k) {
    if (k == 0 || std::abs(k) > N) return {};
    auto w = [sigma](int j) { return std::pow(std::abs(double(j)), -2.0 * sigma); };
    return oracle_pair_sum(x, N, k, [&](int kk, int k1, int k2) {
        return cplx{0.0, double(kk)} * (w(kk) * w(k1) * w(k2));
    });
}

// Lattice gradient symbol, recomputed from its definition.
inline cplx oracle_lattice_g(int N, int k) {
    double h = 2.0 * M_PI / (2.0 * N + 1.0);
    return (std::exp(cplx{0.0, k * h}) - cplx{1.0, 0.0}) / h;
}

inline cplx oracle_ss(const Coeffs& x, int N, int k) {
    if (k == 0 || std::abs(k) > N) return {};
    return oracle_pair_sum(x, N, k, [N](int kk, int k1, int k2) {
        cplx gk = oracle_lattice_g(N, kk);
        return gk - std::conj(gk) + oracle_lattice_g(N, k1) -
               std::conj(oracle_lattice_g(N, k2));
    });
}

inline cplx oracle_poisson(const Coeffs& x, int N, double theta, int k) {
    if (k == 0 || std::abs(k) > N) return {};
    return oracle_pair_sum(x, N, k, [theta](int kk, int k1, int k2) {
        double lam = std::pow(std::abs(double(k1)), 2.0 * theta) +
                     std::pow(std::abs(double(k2)), 2.0 * theta);
        return cplx{0.0, -double(kk)} / lam;
    });
}

inline double oracle_ns_coeff(sbe::Mode2d k, sbe::Mode2d k1, sbe::Mode2d k2) {
    double perp = double(k.y) * k1.x - double(k.x) * k1.y;
    double dot = double(k.x) * k2.x + double(k.y) * k2.y;
    return perp * dot / (double(k.x) * k.x + double(k.y) * k.y);
}

inline cplx oracle_ns(const sbe::Field2d& x, int N, sbe::Mode2d k) {
    cplx acc{};
    double ball = double(N) * N;
    if (sbe::norm2(k) > ball || (k.x == 0 && k.y == 0)) return acc;
    for (int ax = -N; ax <= N; ++ax) {
        for (int ay = -N; ay <= N; ++ay) {
            sbe::Mode2d k1{ax, ay};
            sbe::Mode2d k2{k.x - ax, k.y - ay};
            if ((ax == 0 && ay == 0) || sbe::norm2(k1) > ball) continue;
            if ((k2.x == 0 && k2.y == 0) || sbe::norm2(k2) > ball) continue;
            acc += oracle_ns_coeff(k, k1, k2) * x.at(k1) * x.at(k2);
        }
    }
    return acc;
}

// Energy sums: fractional and smoothed-model coefficient families.
inline double oracle_isum_fractional(int k, int N, double theta) {
    double acc = 0;
    if (k == 0 || std::abs(k) > N) return 0;
    for (int k1 = -N; k1 <= N; ++k1) {
        int k2 = k - k1;
        if (k1 == 0 || k2 == 0 || std::abs(k2) > N) continue;
        double lam = std::pow(std::abs(double(k1)), 2.0 * theta) +
                     std::pow(std::abs(double(k2)), 2.0 * theta);
        acc += double(k) * k / lam;
    }
    return acc;
}

inline double oracle_isum_ddt(int k, int N, double sigma) {
    double acc = 0;
    if (k == 0 || std::abs(k) > N) return 0;
    for (int k1 = -N; k1 <= N; ++k1) {
        int k2 = k - k1;
        if (k1 == 0 || k2 == 0 || std::abs(k2) > N) continue;
        double a1 = std::abs(double(k1)), a2 = std::abs(double(k2));
        acc += std::pow(std::abs(double(k)), 2.0 - 4.0 * sigma) /
               (std::pow(a1, 4.0 * sigma) * std::pow(a2, 4.0 * sigma) * (a1 * a1 + a2 * a2));
    }
    return acc;
}

// Cutoff-difference sum: coefficient times the squared difference of the two
// cutoff indicator products.
inline double oracle_isum_diff(int k, int N, int M, double theta) {
    double acc = 0;
    int big = std::max(N, M);
    if (k == 0) return 0;
    for (int k1 = -big; k1 <= big; ++k1) {
        int k2 = k - k1;
        if (k1 == 0 || k2 == 0 || std::abs(k2) > big) continue;
        auto ind = [&](int cut) {
            return (std::abs(k) <= cut && std::abs(k1) <= cut && std::abs(k2) <= cut) ? 1.0
                                                                                      : 0.0;
        };
        double d = ind(N) - ind(M);
        double lam = std::pow(std::abs(double(k1)), 2.0 * theta) +
                     std::pow(std::abs(double(k2)), 2.0 * theta);
        acc += (double(k) * k / lam) * d * d;
    }
    return acc;
}

inline double oracle_isum_ns2d(sbe::Mode2d k, int N, double sigma) {
    double acc = 0;
    double ball = double(N) * N;
    if (sbe::norm2(k) > ball || (k.x == 0 && k.y == 0)) return 0;
    for (int ax = -N; ax <= N; ++ax) {
        for (int ay = -N; ay <= N; ++ay) {
            sbe::Mode2d k1{ax, ay};
            sbe::Mode2d k2{k.x - ax, k.y - ay};
            if ((ax == 0 && ay == 0) || sbe::norm2(k1) > ball) continue;
            if ((k2.x == 0 && k2.y == 0) || sbe::norm2(k2) > ball) continue;
            double l1 = std::pow(sbe::norm2(k1), 1.0 + sigma);
            double l2 = std::pow(sbe::norm2(k2), 1.0 + sigma);
            acc += l1 / ((l1 + l2) * (l1 + l2));
        }
    }
    return acc;
}

}  // namespace testsup
