#include "sbe/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sbe/drift.hpp"
#include "sbe/errors.hpp"
#include "sbe/nonlinearity.hpp"

namespace sbe {

namespace {

constexpr double kBlowUpThreshold = 1e6;

struct LadderState {
    int N = 0;
    SpectralField u;
    std::vector<cplx> phi;  // mild integral of the truncation residual, k-1 indexed
    std::vector<double> q;  // mild integral of the contraction kernel sum
    double a_sup = 0, a_band = 0, phi_sup = 0, q_sup = 0;

    explicit LadderState(int n) : N(n), u(n), phi(size_t(n)), q(size_t(n)) {}
};

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    double n = double(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double det = n * sxx - sx * sx;
    if (det <= 0) return std::numeric_limits<double>::quiet_NaN();
    return (n * sxy - sx * sy) / det;
}

}  // namespace

UniquenessPathResult run_uniqueness_path(const ModelConfig& ref, const std::vector<int>& ladder_in,
                                         double eps, const StreamFamily& family) {
    if (ref.model != ModelKind::sbe)
        throw std::invalid_argument("uniqueness: reference model must be sbe");
    if (!(eps > 0)) throw std::invalid_argument("uniqueness: eps must be > 0");
    std::vector<int> ladder = ladder_in;
    std::sort(ladder.begin(), ladder.end());
    ladder.erase(std::unique(ladder.begin(), ladder.end()), ladder.end());
    if (ladder.empty()) throw std::invalid_argument("uniqueness: empty ladder");
    if (ladder.front() < 1 || ladder.back() > ref.N)
        throw std::invalid_argument("uniqueness: ladder entries must lie in [1, N_ref]");

    const int n_ref = ref.N;
    const double dt = ref.dt;
    const double w_a = 2.0 * ref.theta - 1.5 - 2.0 * eps;  // weight on Delta and phi
    const double w_k = -w_a;                               // convolution kernel exponent

    // Per-mode constants shared by every resolution (lambda depends only on k).
    std::vector<double> lam(size_t(n_ref) + 1), decay(size_t(n_ref) + 1), p1(size_t(n_ref) + 1);
    std::vector<double> wa_pow(size_t(n_ref) + 1), wq_pow(size_t(n_ref) + 1);
    std::vector<double> kernel(2 * size_t(n_ref) + 1);
    for (int k = 1; k <= n_ref; ++k) {
        lam[size_t(k)] = ref.lambda(k);
        decay[size_t(k)] = std::exp(-lam[size_t(k)] * dt);
        p1[size_t(k)] = phi1(lam[size_t(k)], dt);
        wa_pow[size_t(k)] = std::pow(double(k), w_a);
        wq_pow[size_t(k)] = std::pow(double(k), w_a + 1.0);
    }
    for (int j = 1; j <= 2 * n_ref; ++j) kernel[size_t(j)] = std::pow(double(j), w_k);

    // Initial modes come from the per-mode sampler streams, so every
    // resolution starts from the projection of the same field.
    SpectralField u_ref = sample(ref.invariant_measure(), family);
    std::vector<LadderState> members;
    members.reserve(ladder.size());
    for (int n : ladder) {
        LadderState st(n);
        st.u = project(u_ref, n);
        members.push_back(std::move(st));
    }

    std::vector<RngStream> streams = make_noise_streams(ref, family);
    std::vector<cplx> eta(static_cast<size_t>(n_ref));
    std::vector<double> cmod(size_t(n_ref) + 1);
    const long long steps = ref.steps();

    for (long long step = 0; step < steps; ++step) {
        SpectralField f_ref = burgers_nonlinearity(u_ref, n_ref);

        // Mild accumulators advance on left-endpoint values, before stepping.
        for (LadderState& m : members) {
            const int n = m.N;
            for (int k = 1; k <= n; ++k) {
                cplx resid = f_ref.at(k) - burgers_coord(u_ref, n, k);
                m.phi[size_t(k - 1)] =
                    decay[size_t(k)] * m.phi[size_t(k - 1)] + p1[size_t(k)] * resid;
            }
            for (int q = 1; q <= n; ++q) cmod[size_t(q)] = std::abs(u_ref.at(q) + m.u.at(q));
            for (int k = 1; k <= n; ++k) {
                double s = 0;
                for (int q = -n; q <= n; ++q) {
                    int j = k - q;
                    if (q == 0 || j == 0) continue;
                    s += cmod[size_t(std::abs(q))] * kernel[size_t(std::abs(j))];
                }
                m.q[size_t(k - 1)] = decay[size_t(k)] * m.q[size_t(k - 1)] + p1[size_t(k)] * s;
            }
        }

        // One shared noise draw per mode; every resolution consumes the same
        // increment on its modes.
        for (int k = 1; k <= n_ref; ++k) {
            double var = -std::expm1(-2.0 * lam[size_t(k)] * dt);
            eta[size_t(k - 1)] = ref.noise_factor * streams[size_t(k - 1)].complex_gaussian(var);
        }

        auto advance = [&](SpectralField& u, const SpectralField& f, int n) {
            SpectralField next(n);
            for (int k = 1; k <= n; ++k) {
                cplx v = decay[size_t(k)] * u.at(k) + p1[size_t(k)] * f.at(k) + eta[size_t(k - 1)];
                next.set_pair(k, v);
            }
            u = std::move(next);
            if (!(u.h_norm() <= kBlowUpThreshold))
                throw BlowUpError(double(step + 1) * dt, u.h_norm());
        };

        std::vector<SpectralField> drifts;
        drifts.reserve(members.size());
        for (LadderState& m : members) drifts.push_back(burgers_nonlinearity(m.u, m.N));
        advance(u_ref, f_ref, n_ref);
        for (size_t i = 0; i < members.size(); ++i) advance(members[i].u, drifts[i], members[i].N);

        for (LadderState& m : members) {
            for (int k = 1; k <= m.N; ++k) {
                double d = std::abs(u_ref.at(k) - m.u.at(k));
                double wd = wa_pow[size_t(k)] * d;
                m.a_sup = std::max(m.a_sup, wd);
                if (k <= ladder.front()) m.a_band = std::max(m.a_band, wd);
                m.phi_sup = std::max(m.phi_sup, wa_pow[size_t(k)] * std::abs(m.phi[size_t(k - 1)]));
                m.q_sup = std::max(m.q_sup, wq_pow[size_t(k)] * m.q[size_t(k - 1)]);
            }
        }
    }

    UniquenessPathResult out;
    std::vector<double> xs, ys;
    for (const LadderState& m : members) {
        out.ladder.push_back({m.N, m.a_sup, m.a_band, m.phi_sup, m.q_sup});
        if (m.a_sup > 0) {
            xs.push_back(double(m.N));
            ys.push_back(m.a_sup);
        }
    }
    out.a_monotone = true;
    for (size_t i = 1; i < out.ladder.size(); ++i)
        if (!(out.ladder[i].a_n < out.ladder[i - 1].a_n)) out.a_monotone = false;
    out.a_slope = loglog_slope(xs, ys);
    return out;
}

}  // namespace sbe
