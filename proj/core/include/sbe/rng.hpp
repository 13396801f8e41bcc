// Counter-based random streams (Philox4x32-10). A stream is addressed by
// (seed, stream id); the id packs (purpose, experiment, path, mode), so every
// path and every Fourier mode owns an independent stream without any
// coordination between parallel workers. Identical (seed, id) reproduce
// bit-identical draws; distinct ids are statistically independent by the
// generator's design. Keying noise streams by mode (never by cutoff N) lets
// runs at different resolutions consume the same Brownian increments on
// shared modes.
#pragma once

#include <array>
#include <cstdint>

#include "sbe/field.hpp"

namespace sbe {

// One 4x32 block of the Philox-4x32-10 bijection.
std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

class RngStream {
  public:
    RngStream() : RngStream(0, 0) {}
    RngStream(uint64_t seed, uint64_t stream_id);

    uint32_t next_u32();
    // Uniform on (0,1], 53-bit resolution.
    double uniform();
    // Standard normal (Box-Muller; two per block, one cached).
    double normal();
    // Circularly symmetric complex Gaussian with E|z|^2 = variance
    // (independent real and imaginary parts of variance/2 each).
    cplx complex_gaussian(double variance);

  private:
    void refill();
    std::array<uint32_t, 2> key_;
    std::array<uint32_t, 2> stream_;
    uint64_t block_ = 0;
    std::array<uint32_t, 4> buf_{};
    int pos_ = 4;
    double cached_normal_ = 0;
    bool have_cached_ = false;
};

enum class Purpose : uint8_t { generic = 0, init = 1, noise = 2 };

// 24-bit mode codes for stream ids. 1d needs |k| < 2^23; 2d needs |kx|,|ky| <= 2047.
uint32_t mode_code(int k);
uint32_t mode_code(Mode2d k);

// Address space for one simulated path: streams keyed by (purpose, mode).
struct StreamFamily {
    uint64_t seed = 0;
    uint8_t experiment = 0;
    uint32_t path = 0;  // < 2^24

    uint64_t stream_id(Purpose p, uint32_t mode) const;
    RngStream stream(Purpose p, uint32_t mode) const { return {seed, stream_id(p, mode)}; }
    RngStream stream(Purpose p, int k) const { return stream(p, mode_code(k)); }
    RngStream stream(Purpose p, Mode2d k) const { return stream(p, mode_code(k)); }
};

}  // namespace sbe
