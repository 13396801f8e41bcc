// Truncated Fourier-mode fields over the torus: 1d modes k in Z \ {0} and
// 2d modes k in Z^2 \ {0}, both with the Hermitian symmetry x(-k) = conj(x(k))
// of a real-valued physical field. The zero mode is excluded throughout
// (mean-zero space).
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace sbe {

using cplx = std::complex<double>;

// 2d wavevector. 1d code uses plain int mode indices.
struct Mode2d {
    int x = 0;
    int y = 0;
    friend bool operator==(const Mode2d&, const Mode2d&) = default;
};
inline Mode2d operator-(Mode2d k) { return {-k.x, -k.y}; }
inline Mode2d operator+(Mode2d a, Mode2d b) { return {a.x + b.x, a.y + b.y}; }
inline double norm2(Mode2d k) { return double(k.x) * k.x + double(k.y) * k.y; }
inline double mode_abs(Mode2d k);
inline double mode_abs(int k);

// Complex coefficients on 0 < |k| <= cutoff, stored densely for k in
// [-cutoff, cutoff]. at() returns 0 outside the band and at k = 0, so
// convolution loops need no bounds checks.
class SpectralField {
  public:
    SpectralField() = default;
    explicit SpectralField(int cutoff);

    int cutoff() const { return cutoff_; }

    cplx at(int k) const {
        if (k == 0 || k < -cutoff_ || k > cutoff_) return {};
        return c_[size_t(k + cutoff_)];
    }
    // Sets a single coefficient; the caller is responsible for keeping the
    // conjugate partner consistent (or use set_pair).
    void set(int k, cplx v);
    // Sets x(k) = v and x(-k) = conj(v).
    void set_pair(int k, cplx v);

    bool is_hermitian(double tol = 1e-12) const;
    // sqrt(sum over all stored modes of |x_k|^2), the L^2/H norm.
    double h_norm() const;

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);
    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

  private:
    int cutoff_ = 0;
    std::vector<cplx> c_;  // index k + cutoff_, slot cutoff_ (k=0) always zero
};

// Modes with |k| <= N copied, everything else dropped. Idempotent; N may
// exceed the input cutoff (then a plain copy into the wider band).
SpectralField project(const SpectralField& x, int N);

// Weighted l^p norm: (sum_k (|k|^alpha |x_k|)^p)^(1/p); p may be
// infinity (pass p = 0 or std::numeric_limits<double>::infinity()), giving
// sup_k |k|^alpha |x_k|. p = 2 is the Sobolev H^alpha norm.
double fl_norm(const SpectralField& x, double p, double alpha);

// 2d field on the Euclidean ball {0 < |k| <= cutoff}, stored densely over the
// square [-cutoff, cutoff]^2; entries outside the ball stay zero.
class Field2d {
  public:
    Field2d() = default;
    explicit Field2d(int cutoff);

    int cutoff() const { return cutoff_; }
    bool in_domain(Mode2d k) const {
        return !(k.x == 0 && k.y == 0) && norm2(k) <= double(cutoff_) * cutoff_;
    }

    cplx at(Mode2d k) const {
        if (k.x < -cutoff_ || k.x > cutoff_ || k.y < -cutoff_ || k.y > cutoff_) return {};
        return c_[idx(k)];
    }
    void set(Mode2d k, cplx v);
    void set_pair(Mode2d k, cplx v);

    bool is_hermitian(double tol = 1e-12) const;
    double h_norm() const;
    // Enstrophy-type energy sum_k |k|^2 |x_k|^2.
    double energy() const;

    // Representative modes: one of each {k, -k} pair (k.x > 0, or k.x == 0 and
    // k.y > 0), in a fixed deterministic order.
    const std::vector<Mode2d>& half_modes() const { return half_; }
    // All modes in the ball, fixed order.
    const std::vector<Mode2d>& modes() const { return all_; }

    Field2d& operator+=(const Field2d& o);
    Field2d& operator-=(const Field2d& o);
    Field2d& operator*=(double s);
    friend Field2d operator-(Field2d a, const Field2d& b) { return a -= b; }

  private:
    size_t idx(Mode2d k) const {
        return size_t(k.x + cutoff_) * (2 * cutoff_ + 1) + size_t(k.y + cutoff_);
    }
    int cutoff_ = 0;
    std::vector<cplx> c_;
    std::vector<Mode2d> half_, all_;
};

inline double mode_abs(Mode2d k) { return std::sqrt(norm2(k)); }
inline double mode_abs(int k) { return std::abs(double(k)); }

}  // namespace sbe
