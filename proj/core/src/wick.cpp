#include <stdexcept>
#include <vector>

#include "sbe/measures.hpp"

namespace sbe {

namespace {

// Sum over perfect matchings; each pair (a,b) contributes 1_{m_a = -m_b} v(m_a),
// the only nonzero covariance of circularly symmetric modes with x_{-k} = conj(x_k).
template <typename Mode, typename Var>
double pairing_sum(std::vector<Mode>& modes, std::vector<bool>& used, const Var& v) {
    size_t first = 0;
    while (first < modes.size() && used[first]) ++first;
    if (first == modes.size()) return 1.0;
    used[first] = true;
    double total = 0;
    for (size_t j = first + 1; j < modes.size(); ++j) {
        if (used[j]) continue;
        if (!(modes[j] == -modes[first])) continue;
        used[j] = true;
        total += v(modes[first]) * pairing_sum(modes, used, v);
        used[j] = false;
    }
    used[first] = false;
    return total;
}

template <typename Mode, typename Factor, typename Var>
double oracle(const std::vector<Factor>& monomial, const Var& v) {
    if (monomial.size() > 8)
        throw std::invalid_argument("wick_moment_oracle: monomial degree must be <= 8");
    if (monomial.size() % 2 != 0) return 0.0;
    std::vector<Mode> modes;
    modes.reserve(monomial.size());
    for (const Factor& f : monomial) modes.push_back(f.conjugated ? -f.k : f.k);
    std::vector<bool> used(modes.size(), false);
    return pairing_sum(modes, used, v);
}

}  // namespace

double wick_moment_oracle(const MeasureSpec& spec, const std::vector<MonomialFactor>& monomial) {
    return oracle<int>(monomial, [&](int k) { return spec.variance(std::abs(k)); });
}

double wick_moment_oracle(const MeasureSpec& spec, const std::vector<MonomialFactor2d>& monomial) {
    return oracle<Mode2d>(monomial, [&](Mode2d k) { return spec.variance(k); });
}

}  // namespace sbe
