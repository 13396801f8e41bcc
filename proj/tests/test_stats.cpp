#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sbe/measures.hpp"
#include "sbe/rng.hpp"
#include "sbe/stats.hpp"
#include "support.hpp"

TEST_CASE("batch mean: exact on constants, rejects short input") {
    std::vector<double> c(64, 2.5);
    sbe::Estimate e = sbe::batch_mean(c);
    CHECK(e.value == doctest::Approx(2.5));
    CHECK(e.se == doctest::Approx(0.0));
    CHECK_THROWS_AS(sbe::batch_mean(std::vector<double>(15, 1.0)), std::invalid_argument);

    // alternating series: batches of equal means, still se 0 with batch size 2
    std::vector<double> alt;
    for (int i = 0; i < 32; ++i) alt.push_back(i % 2 == 0 ? 1.0 : 3.0);
    sbe::Estimate a = sbe::batch_mean(alt);
    CHECK(a.value == doctest::Approx(2.0));
    CHECK(a.se == doctest::Approx(0.0));
}

TEST_CASE("lp norm of a constant vector is the constant") {
    std::vector<double> c(32, 1.7);
    for (double p : {1.0, 2.0, 4.0}) {
        sbe::Estimate e = sbe::lp_norm(c, p);
        CHECK(e.value == doctest::Approx(1.7).epsilon(1e-12));
        CHECK(e.se == doctest::Approx(0.0));
    }
}

TEST_CASE("scaling regression recovers exact power laws") {
    std::vector<sbe::ScalingPoint> pts;
    for (double x : {2.0, 4.0, 8.0, 16.0, 32.0, 64.0})
        pts.push_back({x, 3.0 * std::pow(x, -0.75), 0.0});
    sbe::ScalingFit f = sbe::scaling_regression(pts, "k");
    CHECK(f.slope == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-10));
    CHECK(f.slope_se == doctest::Approx(0.0));
    CHECK(f.abscissa == "k");
    CHECK(f.n_points == 6);
    CHECK(f.x_min == 2.0);
    CHECK(f.x_max == 64.0);

    CHECK_THROWS_AS(
        sbe::scaling_regression({{1, 1, 0}, {2, 2, 0}, {4, 4, 0}, {8, 8, 0}}, "k"),
        std::invalid_argument);
}

TEST_CASE("scaling regression tolerates noise near the true slope") {
    sbe::RngStream rng(77, 0);
    std::vector<sbe::ScalingPoint> pts;
    for (int i = 0; i < 10; ++i) {
        double x = std::pow(2.0, i);
        double noisy = 5.0 * std::pow(x, 2.0) * (1.0 + 0.01 * rng.normal());
        pts.push_back({x, noisy, 0.01 * noisy});
    }
    sbe::ScalingFit f = sbe::scaling_regression(pts, "M");
    CHECK(f.slope == doctest::Approx(2.0).epsilon(0.02));
    CHECK(f.slope_se < 0.05);
    CHECK(f.slope_se > 0.0);
}

TEST_CASE("loglog fit works from two points") {
    sbe::ScalingFit f = sbe::loglog_fit({{2.0, 8.0, 0.0}, {4.0, 64.0, 0.0}}, "T");
    CHECK(f.slope == doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_AS(sbe::loglog_fit({{2.0, 8.0, 0.0}}, "T"), std::invalid_argument);
}

TEST_CASE("stationarity z-scores accept the true law and reject a misscaled one") {
    sbe::MeasureSpec white{sbe::MeasureKind::white_noise_1d, 8};
    std::vector<sbe::SpectralField> good, bad;
    for (int p = 0; p < 1024; ++p) {
        sbe::StreamFamily fam{23, 0, uint32_t(p)};
        sbe::SpectralField x = sbe::sample(white, fam);
        good.push_back(x);
        sbe::SpectralField y = x;
        y *= 1.5;  // variance off by 2.25
        bad.push_back(y);
    }
    sbe::EnsembleSummary g = sbe::stationarity_test(good, white);
    CHECK(g.paths == 1024);
    CHECK(g.pass_fraction() >= 0.95);

    sbe::EnsembleSummary b = sbe::stationarity_test(bad, white);
    CHECK(b.pass_fraction() < 0.5);
    for (const auto& m : b.modes) CHECK(m.z2 > 3.0);  // inflated variance at every mode
}

TEST_CASE("dyadic quadratic variation separates path regularity classes") {
    const int n = (1 << 12) + 1;  // 4097 samples, levels up to 12
    std::vector<int> levels{2, 3, 4, 5, 6, 7, 8};

    // linear path: QV at level l is c^2 * 2^-l (relative mesh), slope 1
    {
        std::vector<double> path(n);
        for (int i = 0; i < n; ++i) path[size_t(i)] = 3.0 * i / (n - 1.0);
        sbe::QVReport r = sbe::quadratic_variation(path, levels);
        for (size_t j = 0; j < levels.size(); ++j)
            CHECK(r.qv[j] == doctest::Approx(9.0 * std::pow(2.0, -levels[size_t(j)]))
                                 .epsilon(1e-12));
        CHECK(r.decay_exponent == doctest::Approx(1.0).epsilon(1e-10));
    }

    // brownian path: QV stabilizes, slope near 0
    {
        sbe::RngStream rng(78, 0);
        std::vector<double> path(n);
        double acc = 0, sdt = std::sqrt(1.0 / (n - 1.0));
        for (int i = 1; i < n; ++i) {
            acc += sdt * rng.normal();
            path[size_t(i)] = acc;
        }
        sbe::QVReport r = sbe::quadratic_variation(path, levels);
        CHECK(std::abs(r.decay_exponent) < 0.1);
    }

    // weierstrass-type gamma-holder path: slope near 2 gamma - 1
    {
        const double gamma = 0.7;
        std::vector<double> path(n);
        for (int i = 0; i < n; ++i) {
            double t = double(i) / (n - 1.0);
            double v = 0;
            for (int j = 0; j < 16; ++j) {
                double freq = std::pow(2.0, j);
                v += std::pow(freq, -gamma) * std::cos(2.0 * M_PI * freq * t + 0.7 * j);
            }
            path[size_t(i)] = v;
        }
        sbe::QVReport r = sbe::quadratic_variation(path, levels);
        CHECK(r.decay_exponent == doctest::Approx(2.0 * gamma - 1.0).epsilon(0.3));
    }

    // n - 1 must be a power of two covering the deepest level
    CHECK_THROWS_AS(sbe::quadratic_variation(std::vector<double>(100, 0.0), levels),
                    std::invalid_argument);
}

TEST_CASE("exponential moment probe") {
    // constant zero sample: E e^(lambda Q) = 1 for every lambda
    std::vector<double> zero(5000, 0.0);
    auto rows = sbe::exp_moment_probe(zero, {0.5, 1.0, 2.0});
    for (const auto& r : rows) {
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK_FALSE(r.unreliable);
    }

    // gaussian squares: E e^(z^2/4) = sqrt(2)
    sbe::RngStream rng(79, 0);
    std::vector<double> zsq(200000);
    for (auto& v : zsq) {
        double z = rng.normal();
        v = z * z;
    }
    auto g = sbe::exp_moment_probe(zsq, {0.25});
    CHECK(g[0].value == doctest::Approx(std::sqrt(2.0)).epsilon(0.05));

    // lambda past the 1/2 singularity: the sum is provably dominated by the
    // largest observations, so the tail flag must trip
    auto hot = sbe::exp_moment_probe(zsq, {0.6});
    CHECK(hot[0].unreliable);
}
