#include "sbe/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sbe/multiplier.hpp"
#include "sbe/nonlinearity.hpp"

namespace sbe {

double phi1(double lambda, double dt) {
    if (lambda <= 0) return dt;
    return -std::expm1(-lambda * dt) / lambda;
}

namespace {
constexpr double kBlowUpThreshold = 1e6;
constexpr double kStepRuleBound = 0.1;

void check_blow_up(double t, double norm) {
    if (!(norm <= kBlowUpThreshold)) throw BlowUpError(t, norm);
}
}  // namespace

const char* model_name(ModelKind m) {
    switch (m) {
        case ModelKind::ou: return "ou";
        case ModelKind::sbe: return "sbe";
        case ModelKind::ddt: return "ddt";
        case ModelKind::ss_lattice: return "ss_lattice";
        case ModelKind::ns2d: return "ns2d";
    }
    return "?";
}

double ModelConfig::lambda(int k) const {
    if (model == ModelKind::ss_lattice) return lattice_lambda(N, k);
    return std::pow(std::abs(double(k)), 2.0 * theta);
}

double ModelConfig::lambda(Mode2d k) const {
    return std::pow(norm2(k), 1.0 + sigma);  // |k|^(2 + 2 sigma)
}

long long ModelConfig::steps() const { return std::llround(T / dt); }

MeasureSpec ModelConfig::invariant_measure() const {
    if (model == ModelKind::ns2d) return {MeasureKind::ns_gibbs_2d, N};
    return {MeasureKind::white_noise_1d, N};
}

double step_rule_value(const ModelConfig& cfg) {
    double dt = cfg.dt;
    switch (cfg.model) {
        case ModelKind::ou:
            return 0.0;  // exact kernel, unconditionally stable
        case ModelKind::sbe:
        case ModelKind::ddt: {
            double keff = cfg.theta > 0
                              ? std::min(double(cfg.N), std::pow(dt, -1.0 / (2.0 * cfg.theta)))
                              : double(cfg.N);
            return dt * 2.0 * std::sqrt(double(cfg.N)) * keff;
        }
        case ModelKind::ss_lattice: {
            // lattice dissipation ~ |k|^2: same budget as theta = 1
            double keff = std::min(double(cfg.N), std::pow(dt, -0.5));
            return dt * 2.0 * std::sqrt(double(cfg.N)) * keff;
        }
        case ModelKind::ns2d: {
            double keff = std::min(double(cfg.N), std::pow(dt, -1.0 / (2.0 + 2.0 * cfg.sigma)));
            return dt * 2.5 * double(cfg.N) * keff;
        }
    }
    return 0.0;
}

void ModelConfig::validate() const {
    if (N < 1) throw ConfigError("N must be >= 1");
    if (!(theta >= 0)) throw ConfigError("theta must be >= 0");
    if (!(sigma >= 0)) throw ConfigError("sigma must be >= 0");
    if (model == ModelKind::ns2d && !(sigma > 0)) throw ConfigError("ns2d requires sigma > 0");
    if (!(dt > 0)) throw ConfigError("dt must be > 0");
    if (!(T >= dt)) throw ConfigError("T must be >= dt");
    if (stride < 1) throw ConfigError("stride must be >= 1");
    if (!(noise_factor > 0)) throw ConfigError("noise_factor must be > 0");
    double v = step_rule_value(*this);
    if (v > kStepRuleBound) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "step-size rule violated: dt * drift scale = %.3g > %.1g "
                      "(reduce dt or N)", v, kStepRuleBound);
        throw ConfigError(buf);
    }
}

namespace {

// Exact linear/noise update shared by every 1d model; drift == nullptr means
// pure OU. One complex draw per representative mode, in mode order, so all
// models consume streams identically.
void step_1d(PathState& s, const ModelConfig& cfg, const SpectralField* drift,
             std::vector<RngStream>& streams, std::vector<cplx>* noise_out,
             const StepOverrides& ov) {
    const int N = cfg.N;
    if (s.u.cutoff() != N) throw std::invalid_argument("step: field cutoff != cfg.N");
    if (int(streams.size()) != N) throw std::invalid_argument("step: need one stream per mode");
    if (noise_out) noise_out->assign(size_t(N), cplx{});
    SpectralField next(N);
    for (int k = 1; k <= N; ++k) {
        double l = ov.dissipation ? cfg.lambda(k) : 0.0;
        cplx v = std::exp(-l * cfg.dt) * s.u.at(k);
        if (drift) v += phi1(l, cfg.dt) * drift->at(k);
        if (ov.noise) {
            double var = cfg.stationary_variance(k) * -std::expm1(-2.0 * l * cfg.dt);
            cplx eta = cfg.noise_factor * streams[size_t(k - 1)].complex_gaussian(var);
            v += eta;
            if (noise_out) (*noise_out)[size_t(k - 1)] = eta;
        }
        next.set_pair(k, v);
    }
    s.u = std::move(next);
    s.t += cfg.dt;
    check_blow_up(s.t, s.u.h_norm());
}

}  // namespace

void ou_step(PathState& s, const ModelConfig& cfg, std::vector<RngStream>& streams,
             std::vector<cplx>* noise_out, const StepOverrides& ov) {
    step_1d(s, cfg, nullptr, streams, noise_out, ov);
}

void sbe_step(PathState& s, const ModelConfig& cfg, std::vector<RngStream>& streams,
              std::vector<cplx>* noise_out, const StepOverrides& ov) {
    SpectralField drift;
    if (ov.drift) {
        drift = cfg.model == ModelKind::ddt ? ddt_nonlinearity(s.u, cfg.N, cfg.sigma)
                                            : burgers_nonlinearity(s.u, cfg.N);
    }
    step_1d(s, cfg, ov.drift ? &drift : nullptr, streams, noise_out, ov);
}

void ss_step(PathState& s, const ModelConfig& cfg, std::vector<RngStream>& streams,
             std::vector<cplx>* noise_out, const StepOverrides& ov) {
    SpectralField drift;
    if (ov.drift) drift = ss_nonlinearity(s.u, cfg.N);
    step_1d(s, cfg, ov.drift ? &drift : nullptr, streams, noise_out, ov);
}

void ns_step(PathState2d& s, const ModelConfig& cfg, std::vector<RngStream>& streams,
             std::vector<cplx>* noise_out, const StepOverrides& ov) {
    const int N = cfg.N;
    if (s.u.cutoff() != N) throw std::invalid_argument("ns_step: field cutoff != cfg.N");
    const auto& half = s.u.half_modes();
    if (streams.size() != half.size()) throw std::invalid_argument("ns_step: stream count mismatch");
    if (noise_out) noise_out->assign(half.size(), cplx{});
    Field2d drift;
    if (ov.drift) drift = ns_nonlinearity(s.u, N);
    Field2d next(N);
    for (size_t i = 0; i < half.size(); ++i) {
        Mode2d k = half[i];
        double l = ov.dissipation ? cfg.lambda(k) : 0.0;
        cplx v = std::exp(-l * cfg.dt) * s.u.at(k);
        if (ov.drift) v += phi1(l, cfg.dt) * drift.at(k);
        if (ov.noise) {
            double var = cfg.stationary_variance(k) * -std::expm1(-2.0 * l * cfg.dt);
            cplx eta = cfg.noise_factor * streams[i].complex_gaussian(var);
            v += eta;
            if (noise_out) (*noise_out)[i] = eta;
        }
        next.set_pair(k, v);
    }
    s.u = std::move(next);
    s.t += cfg.dt;
    check_blow_up(s.t, s.u.h_norm());
}

std::vector<RngStream> make_noise_streams(const ModelConfig& cfg, const StreamFamily& family) {
    std::vector<RngStream> streams;
    if (cfg.model == ModelKind::ns2d) {
        Field2d probe(cfg.N);
        streams.reserve(probe.half_modes().size());
        for (const Mode2d& k : probe.half_modes()) streams.push_back(family.stream(Purpose::noise, k));
    } else {
        streams.reserve(size_t(cfg.N));
        for (int k = 1; k <= cfg.N; ++k) streams.push_back(family.stream(Purpose::noise, k));
    }
    return streams;
}

TrajectoryRecorder simulate_path(const ModelConfig& cfg, const StreamFamily& family,
                                 const SimulateOptions& opts) {
    if (cfg.model == ModelKind::ns2d)
        throw std::invalid_argument("simulate_path: use simulate_path_2d for ns2d");
    if (opts.record_noise && cfg.stride != 1)
        throw std::invalid_argument("simulate_path: noise recording requires stride = 1");

    PathState s;
    s.u = opts.initial ? *opts.initial : sample(cfg.invariant_measure(), family);
    if (s.u.cutoff() != cfg.N) throw std::invalid_argument("simulate_path: initial cutoff != N");
    std::vector<RngStream> streams = make_noise_streams(cfg, family);

    TrajectoryRecorder rec;
    rec.dt = cfg.dt;
    rec.stride = cfg.stride;
    rec.cutoff = cfg.N;
    rec.has_noise = opts.record_noise;
    const long long n = cfg.steps();
    rec.times.push_back(0.0);
    rec.fields.push_back(s.u);

    std::vector<cplx> eta;
    for (long long j = 1; j <= n; ++j) {
        switch (cfg.model) {
            case ModelKind::ou:
                ou_step(s, cfg, streams, opts.record_noise ? &eta : nullptr, opts.overrides);
                break;
            case ModelKind::sbe:
            case ModelKind::ddt:
                sbe_step(s, cfg, streams, opts.record_noise ? &eta : nullptr, opts.overrides);
                break;
            case ModelKind::ss_lattice:
                ss_step(s, cfg, streams, opts.record_noise ? &eta : nullptr, opts.overrides);
                break;
            default:
                break;
        }
        if (opts.record_noise) rec.noise.push_back(eta);
        if (j % cfg.stride == 0) {
            rec.times.push_back(double(j) * cfg.dt);
            rec.fields.push_back(s.u);
        }
    }
    return rec;
}

Trajectory2d simulate_path_2d(const ModelConfig& cfg, const StreamFamily& family,
                              const SimulateOptions& opts) {
    if (cfg.model != ModelKind::ns2d)
        throw std::invalid_argument("simulate_path_2d: cfg.model must be ns2d");

    PathState2d s;
    s.u = opts.initial_2d ? *opts.initial_2d : sample_2d(cfg.invariant_measure(), family);
    if (s.u.cutoff() != cfg.N) throw std::invalid_argument("simulate_path_2d: initial cutoff != N");
    std::vector<RngStream> streams = make_noise_streams(cfg, family);

    Trajectory2d rec;
    rec.dt = cfg.dt;
    rec.stride = cfg.stride;
    rec.cutoff = cfg.N;
    const long long n = cfg.steps();
    rec.times.push_back(0.0);
    rec.fields.push_back(s.u);
    for (long long j = 1; j <= n; ++j) {
        ns_step(s, cfg, streams, nullptr, opts.overrides);
        if (j % cfg.stride == 0) {
            rec.times.push_back(double(j) * cfg.dt);
            rec.fields.push_back(s.u);
        }
    }
    return rec;
}

}  // namespace sbe
