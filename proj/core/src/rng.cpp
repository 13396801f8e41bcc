#include "sbe/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sbe {

namespace {
constexpr uint32_t kMul0 = 0xD2511F53u;
constexpr uint32_t kMul1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<uint32_t, 4>& c, const std::array<uint32_t, 2>& k) {
    uint64_t p0 = uint64_t(kMul0) * c[0];
    uint64_t p1 = uint64_t(kMul1) * c[2];
    uint32_t hi0 = uint32_t(p0 >> 32), lo0 = uint32_t(p0);
    uint32_t hi1 = uint32_t(p1 >> 32), lo1 = uint32_t(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}
}  // namespace

std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) {
        round_once(counter, key);
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return counter;
}

RngStream::RngStream(uint64_t seed, uint64_t stream_id)
    : key_{uint32_t(seed), uint32_t(seed >> 32)},
      stream_{uint32_t(stream_id), uint32_t(stream_id >> 32)} {}

void RngStream::refill() {
    buf_ = philox4x32({uint32_t(block_), uint32_t(block_ >> 32), stream_[0], stream_[1]}, key_);
    ++block_;
    pos_ = 0;
}

uint32_t RngStream::next_u32() {
    if (pos_ >= 4) refill();
    return buf_[pos_++];
}

double RngStream::uniform() {
    uint64_t hi = next_u32(), lo = next_u32();
    uint64_t bits = ((hi << 32) | lo) >> 11;  // 53 bits
    return double(bits + 1) * 0x1.0p-53;      // (0, 1]
}

double RngStream::normal() {
    if (have_cached_) {
        have_cached_ = false;
        return cached_normal_;
    }
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    cached_normal_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
}

cplx RngStream::complex_gaussian(double variance) {
    double s = std::sqrt(variance * 0.5);
    double re = normal(), im = normal();
    return {s * re, s * im};
}

uint32_t mode_code(int k) {
    if (k <= -(1 << 23) || k >= (1 << 23)) throw std::out_of_range("mode_code: |k| too large");
    return uint32_t(k + (1 << 23)) & 0xFFFFFFu;
}

uint32_t mode_code(Mode2d k) {
    if (k.x < -2047 || k.x > 2047 || k.y < -2047 || k.y > 2047)
        throw std::out_of_range("mode_code: 2d mode components must be in [-2047, 2047]");
    return (uint32_t(k.x + 2048) << 12) | uint32_t(k.y + 2048);
}

uint64_t StreamFamily::stream_id(Purpose p, uint32_t mode) const {
    if (path >= (1u << 24)) throw std::out_of_range("StreamFamily: path index must be < 2^24");
    return (uint64_t(uint8_t(p)) << 56) | (uint64_t(experiment) << 48) |
           (uint64_t(path) << 24) | uint64_t(mode & 0xFFFFFFu);
}

}  // namespace sbe
