#include "sbe/measures.hpp"

#include <stdexcept>

namespace sbe {

double MeasureSpec::variance(int k) const {
    if (kind != MeasureKind::white_noise_1d)
        throw std::logic_error("MeasureSpec: 1d variance queried on a 2d measure");
    if (k == 0) throw std::invalid_argument("MeasureSpec: zero mode excluded");
    return 1.0;
}

double MeasureSpec::variance(Mode2d k) const {
    if (kind != MeasureKind::ns_gibbs_2d)
        throw std::logic_error("MeasureSpec: 2d variance queried on a 1d measure");
    if (k.x == 0 && k.y == 0) throw std::invalid_argument("MeasureSpec: zero mode excluded");
    return 1.0 / norm2(k);
}

SpectralField sample(const MeasureSpec& spec, const StreamFamily& rng) {
    if (spec.kind != MeasureKind::white_noise_1d)
        throw std::invalid_argument("sample: spec must be a 1d measure");
    SpectralField x(spec.cutoff);
    for (int k = 1; k <= spec.cutoff; ++k) {
        RngStream s = rng.stream(Purpose::init, k);
        x.set_pair(k, s.complex_gaussian(spec.variance(k)));
    }
    return x;
}

Field2d sample_2d(const MeasureSpec& spec, const StreamFamily& rng) {
    if (spec.kind != MeasureKind::ns_gibbs_2d)
        throw std::invalid_argument("sample_2d: spec must be a 2d measure");
    Field2d x(spec.cutoff);
    for (const Mode2d& k : x.half_modes()) {
        RngStream s = rng.stream(Purpose::init, k);
        x.set_pair(k, s.complex_gaussian(spec.variance(k)));
    }
    return x;
}

cplx complex_bm_increment(double delta, RngStream& rng) {
    if (delta <= 0) throw std::invalid_argument("complex_bm_increment: delta must be > 0");
    return rng.complex_gaussian(delta);
}

}  // namespace sbe
