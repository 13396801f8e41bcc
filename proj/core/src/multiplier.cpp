#include "sbe/multiplier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace sbe {

Multiplier::Multiplier(std::string label, std::function<cplx(int)> symbol, int check_band)
    : label_(std::move(label)), symbol_(std::move(symbol)) {
    for (int k = 1; k <= check_band; ++k) {
        cplx a = symbol_(-k), b = std::conj(symbol_(k));
        double scale = std::max(1.0, std::abs(b));
        if (std::abs(a - b) > 1e-12 * scale)
            throw std::invalid_argument("Multiplier '" + label_ +
                                        "' does not preserve real fields: symbol(-k) != conj(symbol(k))");
    }
}

SpectralField apply_multiplier(const SpectralField& x, const Multiplier& m) {
    SpectralField out(x.cutoff());
    for (int k = -x.cutoff(); k <= x.cutoff(); ++k) {
        if (k == 0) continue;
        out.set(k, m(k) * x.at(k));
    }
    return out;
}

Multiplier dissipation_multiplier(double theta) {
    return Multiplier("|k|^2theta", [theta](int k) -> cplx {
        return std::pow(std::abs(double(k)), 2.0 * theta);
    });
}

Multiplier semigroup_multiplier(double theta, double t) {
    return Multiplier("exp(-|k|^2theta t)", [theta, t](int k) -> cplx {
        return std::exp(-std::pow(std::abs(double(k)), 2.0 * theta) * t);
    });
}

Multiplier smoothing_multiplier(double sigma) {
    return Multiplier("|k|^-2sigma", [sigma](int k) -> cplx {
        return std::pow(std::abs(double(k)), -2.0 * sigma);
    });
}

Multiplier derivative_multiplier() {
    return Multiplier("ik", [](int k) -> cplx { return {0.0, double(k)}; });
}

Multiplier mollifier_multiplier(double eps) {
    if (eps <= 0) throw std::invalid_argument("mollifier_multiplier: eps must be > 0");
    return Multiplier("mollifier", [eps](int k) -> cplx { return mollifier_symbol(eps, k); });
}

double mollifier_hat(double xi) {
    double a = std::abs(xi);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    double s = a - 1.0;  // in (0,1)
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

double mollifier_symbol(double eps, int k) {
    if (eps <= 0) throw std::invalid_argument("mollifier_symbol: eps must be > 0");
    return mollifier_hat(eps * double(k));
}

cplx lattice_g(int N, int k) {
    double h = 2.0 * std::numbers::pi / double(2 * N + 1);
    return (std::exp(cplx{0.0, double(k) * h}) - 1.0) / h;
}

double lattice_lambda(int N, int k) {
    double h = 2.0 * std::numbers::pi / double(2 * N + 1);
    return 2.0 * (1.0 - std::cos(double(k) * h)) / (h * h);
}

}  // namespace sbe
