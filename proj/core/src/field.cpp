#include "sbe/field.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sbe {

SpectralField::SpectralField(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 1) throw std::invalid_argument("SpectralField: cutoff must be >= 1");
    c_.assign(size_t(2 * cutoff + 1), cplx{});
}

void SpectralField::set(int k, cplx v) {
    if (k == 0) throw std::invalid_argument("SpectralField::set: zero mode excluded");
    if (k < -cutoff_ || k > cutoff_) throw std::out_of_range("SpectralField::set: |k| > cutoff");
    c_[size_t(k + cutoff_)] = v;
}

void SpectralField::set_pair(int k, cplx v) {
    set(k, v);
    set(-k, std::conj(v));
}

bool SpectralField::is_hermitian(double tol) const {
    for (int k = 1; k <= cutoff_; ++k)
        if (std::abs(at(-k) - std::conj(at(k))) > tol) return false;
    return true;
}

double SpectralField::h_norm() const {
    double s = 0;
    for (const cplx& v : c_) s += std::norm(v);
    return std::sqrt(s);
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    if (o.cutoff_ != cutoff_) throw std::invalid_argument("SpectralField: cutoff mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    if (o.cutoff_ != cutoff_) throw std::invalid_argument("SpectralField: cutoff mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (cplx& v : c_) v *= s;
    return *this;
}

SpectralField project(const SpectralField& x, int N) {
    if (N < 1) throw std::invalid_argument("project: N must be >= 1");
    SpectralField out(N);
    int m = std::min(N, x.cutoff());
    for (int k = -m; k <= m; ++k) {
        if (k == 0) continue;
        out.set(k, x.at(k));
    }
    return out;
}

double fl_norm(const SpectralField& x, double p, double alpha) {
    const bool sup = (p == 0.0) || std::isinf(p);
    double acc = 0;
    for (int k = -x.cutoff(); k <= x.cutoff(); ++k) {
        if (k == 0) continue;
        double w = std::pow(std::abs(double(k)), alpha) * std::abs(x.at(k));
        if (sup)
            acc = std::max(acc, w);
        else
            acc += std::pow(w, p);
    }
    return sup ? acc : std::pow(acc, 1.0 / p);
}

Field2d::Field2d(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 1) throw std::invalid_argument("Field2d: cutoff must be >= 1");
    c_.assign(size_t(2 * cutoff + 1) * size_t(2 * cutoff + 1), cplx{});
    for (int kx = -cutoff; kx <= cutoff; ++kx)
        for (int ky = -cutoff; ky <= cutoff; ++ky) {
            Mode2d k{kx, ky};
            if (!in_domain(k)) continue;
            all_.push_back(k);
            if (kx > 0 || (kx == 0 && ky > 0)) half_.push_back(k);
        }
}

void Field2d::set(Mode2d k, cplx v) {
    if (!in_domain(k)) throw std::out_of_range("Field2d::set: mode outside domain");
    c_[idx(k)] = v;
}

void Field2d::set_pair(Mode2d k, cplx v) {
    set(k, v);
    set(-k, std::conj(v));
}

bool Field2d::is_hermitian(double tol) const {
    for (const Mode2d& k : half_)
        if (std::abs(at(-k) - std::conj(at(k))) > tol) return false;
    return true;
}

double Field2d::h_norm() const {
    double s = 0;
    for (const Mode2d& k : all_) s += std::norm(at(k));
    return std::sqrt(s);
}

double Field2d::energy() const {
    double s = 0;
    for (const Mode2d& k : all_) s += norm2(k) * std::norm(at(k));
    return s;
}

Field2d& Field2d::operator+=(const Field2d& o) {
    if (o.cutoff_ != cutoff_) throw std::invalid_argument("Field2d: cutoff mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Field2d& Field2d::operator-=(const Field2d& o) {
    if (o.cutoff_ != cutoff_) throw std::invalid_argument("Field2d: cutoff mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Field2d& Field2d::operator*=(double s) {
    for (cplx& v : c_) v *= s;
    return *this;
}

}  // namespace sbe
