#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "sbe/multiplier.hpp"
#include "support.hpp"

using sbe::cplx;

TEST_CASE("multiplier construction rejects non-hermitian symbols") {
    CHECK_THROWS_AS(sbe::Multiplier("bad", [](int) { return cplx{0.0, 1.0}; }),
                    std::invalid_argument);
    // ik is fine: symbol(-k) = -ik = conj(ik)
    sbe::Multiplier d = sbe::derivative_multiplier();
    CHECK(d(3) == cplx{0.0, 3.0});
    CHECK(d(-3) == cplx{0.0, -3.0});
}

TEST_CASE("multipliers act diagonally on fields") {
    sbe::SpectralField x = testsup::random_field(6, 21);
    sbe::Multiplier m = sbe::dissipation_multiplier(1.25);
    sbe::SpectralField y = sbe::apply_multiplier(x, m);
    for (int k = 1; k <= 6; ++k) {
        cplx want = std::pow(double(k), 2.5) * x.at(k);
        CHECK(std::abs(y.at(k) - want) < 1e-12 * std::abs(want));
    }
    CHECK(y.is_hermitian());
}

TEST_CASE("semigroup multiplier is the exponential of the dissipation") {
    sbe::SpectralField x = testsup::random_field(5, 22);
    double theta = 0.75, t = 0.3;
    sbe::SpectralField y = sbe::apply_multiplier(x, sbe::semigroup_multiplier(theta, t));
    for (int k = 1; k <= 5; ++k) {
        cplx want = std::exp(-t * std::pow(double(k), 2.0 * theta)) * x.at(k);
        CHECK(std::abs(y.at(k) - want) < 1e-14);
    }
}

TEST_CASE("smoothing multiplier inverts the dissipation power") {
    sbe::Multiplier s = sbe::smoothing_multiplier(0.5);
    CHECK(s(4) == cplx{0.25, 0.0});
    CHECK(s(-4) == cplx{0.25, 0.0});
}

TEST_CASE("mollifier profile: plateau, bump value, compact support") {
    CHECK(sbe::mollifier_hat(0.0) == 1.0);
    CHECK(sbe::mollifier_hat(0.7) == 1.0);
    CHECK(sbe::mollifier_hat(1.0) == 1.0);
    CHECK(sbe::mollifier_hat(1.5) == doctest::Approx(0.7165313105737893).epsilon(1e-13));
    CHECK(sbe::mollifier_hat(2.0) == 0.0);
    CHECK(sbe::mollifier_hat(5.0) == 0.0);
    // even in its argument
    CHECK(sbe::mollifier_hat(-1.5) == sbe::mollifier_hat(1.5));

    // eps scales the cutoff location: modes with eps |k| <= 1 untouched
    sbe::Multiplier m = sbe::mollifier_multiplier(0.25);
    CHECK(m(4) == cplx{1.0, 0.0});
    CHECK(m(6) == cplx{sbe::mollifier_hat(1.5), 0.0});
    CHECK(m(8) == cplx{0.0, 0.0});
    CHECK(sbe::mollifier_symbol(0.25, 6) == sbe::mollifier_hat(1.5));
}

TEST_CASE("lattice gradient symbol and its dissipation") {
    // matches the independent reimplementation everywhere on the band
    for (int k = 1; k <= 5; ++k) {
        cplx want = testsup::oracle_lattice_g(5, k);
        CHECK(std::abs(sbe::lattice_g(5, k) - want) < 1e-14);
    }
    // frozen spot values
    CHECK(sbe::lattice_lambda(5, 1) == doctest::Approx(0.9731049871313461).epsilon(1e-14));
    CHECK(sbe::lattice_lambda(5, 3) == doctest::Approx(7.002311836116321).epsilon(1e-14));
    // lambda = |g|^2
    for (int k = 1; k <= 5; ++k)
        CHECK(sbe::lattice_lambda(5, k) ==
              doctest::Approx(std::norm(sbe::lattice_g(5, k))).epsilon(1e-13));

    // continuum limit: g(k) -> ik as the lattice refines
    cplx g = sbe::lattice_g(10000, 3);
    CHECK(std::abs(g - cplx{0.0, 3.0}) < 1e-2);
}
