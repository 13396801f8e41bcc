#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "sbe/measures.hpp"
#include "support.hpp"

using sbe::cplx;
using sbe::MeasureKind;
using sbe::MeasureSpec;
using sbe::MonomialFactor;

TEST_CASE("per-mode variances of the two measures") {
    MeasureSpec white{MeasureKind::white_noise_1d, 8};
    for (int k = 1; k <= 8; ++k) CHECK(white.variance(k) == 1.0);

    MeasureSpec gibbs{MeasureKind::ns_gibbs_2d, 4};
    CHECK(gibbs.variance(sbe::Mode2d{1, 0}) == doctest::Approx(1.0));
    CHECK(gibbs.variance(sbe::Mode2d{1, 1}) == doctest::Approx(0.5));
    CHECK(gibbs.variance(sbe::Mode2d{3, 4}) == doctest::Approx(1.0 / 25.0));
}

TEST_CASE("1d sampler: hermitian, reproducible, correct second moments") {
    MeasureSpec white{MeasureKind::white_noise_1d, 4};
    sbe::StreamFamily fam{11, 0, 0};
    sbe::SpectralField x = sbe::sample(white, fam);
    CHECK(x.cutoff() == 4);
    CHECK(x.is_hermitian());
    sbe::SpectralField y = sbe::sample(white, fam);
    for (int k = 1; k <= 4; ++k) CHECK(x.at(k) == y.at(k));

    // moments across paths
    const int n = 20000;
    double m2 = 0, m4 = 0;
    cplx mean{};
    for (int p = 0; p < n; ++p) {
        sbe::StreamFamily f{11, 0, uint32_t(p)};
        cplx v = sbe::sample(white, f).at(3);
        mean += v;
        m2 += std::norm(v);
        m4 += std::norm(v) * std::norm(v);
    }
    CHECK(std::abs(mean) / n < 0.02);
    CHECK(m2 / n == doctest::Approx(1.0).epsilon(0.03));
    CHECK(m4 / n == doctest::Approx(2.0).epsilon(0.06));
}

TEST_CASE("2d sampler: ball support, hermitian, gibbs variances") {
    MeasureSpec gibbs{MeasureKind::ns_gibbs_2d, 3};
    sbe::StreamFamily fam{13, 0, 0};
    sbe::Field2d x = sbe::sample_2d(gibbs, fam);
    CHECK(x.is_hermitian());
    CHECK(x.at(sbe::Mode2d{3, 1}) == cplx{});  // outside the ball

    const int n = 20000;
    double m2 = 0;
    for (int p = 0; p < n; ++p) {
        sbe::StreamFamily f{13, 0, uint32_t(p)};
        m2 += std::norm(sbe::sample_2d(gibbs, f).at(sbe::Mode2d{2, 1}));
    }
    CHECK(m2 / n == doctest::Approx(0.2).epsilon(0.04));
}

TEST_CASE("brownian increments have variance delta, split across parts") {
    sbe::RngStream rng(17, 0);
    const int n = 100000;
    const double delta = 0.3;
    double re2 = 0, im2 = 0;
    for (int i = 0; i < n; ++i) {
        cplx db = sbe::complex_bm_increment(delta, rng);
        re2 += db.real() * db.real();
        im2 += db.imag() * db.imag();
    }
    CHECK(re2 / n == doctest::Approx(delta / 2).epsilon(0.03));
    CHECK(im2 / n == doctest::Approx(delta / 2).epsilon(0.03));
}

TEST_CASE("wick oracle on white noise: hand-computed moments") {
    MeasureSpec white{MeasureKind::white_noise_1d, 8};
    auto f = [](int k, bool c) { return MonomialFactor{k, c}; };

    // E x_1 conj(x_1) = 1
    CHECK(sbe::wick_moment_oracle(white, {f(1, false), f(1, true)}) == doctest::Approx(1.0));
    // E x_1 x_{-1} = 1 (same pairing, written without conjugation)
    CHECK(sbe::wick_moment_oracle(white, {f(1, false), f(-1, false)}) == doctest::Approx(1.0));
    // E |x_1|^4 = 2, E |x_1|^6 = 6, E |x_1|^8 = 24
    CHECK(sbe::wick_moment_oracle(white, {f(1, false), f(1, true), f(1, false), f(1, true)}) ==
          doctest::Approx(2.0));
    CHECK(sbe::wick_moment_oracle(white, {f(1, false), f(1, true), f(1, false), f(1, true),
                                          f(1, false), f(1, true)}) == doctest::Approx(6.0));
    CHECK(sbe::wick_moment_oracle(white, {f(1, false), f(1, true), f(1, false), f(1, true),
                                          f(1, false), f(1, true), f(1, false), f(1, true)}) ==
          doctest::Approx(24.0));
    // odd degree and unpaired modes vanish
    CHECK(sbe::wick_moment_oracle(white, {f(1, false), f(1, true), f(2, false)}) == 0.0);
    CHECK(sbe::wick_moment_oracle(white, {f(1, false), f(2, false)}) == 0.0);
    CHECK(sbe::wick_moment_oracle(white, {f(1, false), f(1, false)}) == 0.0);
}

TEST_CASE("wick oracle on the 2d gibbs measure") {
    MeasureSpec gibbs{MeasureKind::ns_gibbs_2d, 4};
    sbe::MonomialFactor2d a{{1, 1}, false}, ac{{1, 1}, true};
    CHECK(sbe::wick_moment_oracle(gibbs, {a, ac}) == doctest::Approx(0.5));
    CHECK(sbe::wick_moment_oracle(gibbs, {a, ac, a, ac}) == doctest::Approx(0.5));  // 2 v^2
}

TEST_CASE("stationary second moment of the drift coordinate") {
    // E |F_M(x)_k|^2 = 2 k^2 * (number of ordered pairs), assembled from the
    // wick oracle by expanding the double sum. Hand counts: M=4, k=2 has the
    // ordered pairs (1,1), (-1,3), (3,-1), (-2,4), (4,-2), so 40; M=3, k=1
    // has (-1,2), (2,-1), (-2,3), (3,-2), so 8.
    MeasureSpec white{MeasureKind::white_noise_1d, 8};
    auto second_moment = [&](int M, int k) {
        double acc = 0;
        for (int a = -M; a <= M; ++a) {
            int b = k - a;
            if (a == 0 || b == 0 || std::abs(b) > M) continue;
            for (int c = -M; c <= M; ++c) {
                int d = k - c;
                if (c == 0 || d == 0 || std::abs(d) > M) continue;
                acc += double(k) * k *
                       sbe::wick_moment_oracle(
                           white, {MonomialFactor{a, false}, MonomialFactor{b, false},
                                   MonomialFactor{c, true}, MonomialFactor{d, true}});
            }
        }
        return acc;
    };
    CHECK(second_moment(4, 2) == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(second_moment(3, 1) == doctest::Approx(8.0).epsilon(1e-12));
}
