// Time integrators, exact on the linear part. Every model is an SDE system
//   du_k = -lambda_k u_k dt + (drift)_k dt + (noise)_k
// advanced by the exponential (Lawson/ETD1) Euler scheme on the mild form:
//   u_k <- exp(-lambda_k dt) u_k + phi1(lambda_k, dt) drift_k(u) + eta_k,
// phi1(l,d) = (1 - exp(-l d))/l, with the noise increment eta_k drawn from
// the exact Ornstein-Uhlenbeck transition kernel: a circular complex Gaussian
// with E|eta_k|^2 = (1 - exp(-2 lambda_k dt)) v_k, where v_k is the model's
// stationary variance (1 in 1d, 1/|k|^2 for 2d Navier-Stokes). With the drift
// off, the update is the exact OU kernel and the stationary measure is
// invariant by construction; the drifts are divergence-free and conserve the
// measure's quadratic form, so invariance extends to the full dynamics.
//
// Dissipation rates: ou/sbe/ddt lambda_k = |k|^(2 theta); Sasamoto-Spohn
// lambda_k = |g_N(k)|^2; 2d NS lambda_k = |k|^(2+2 sigma).
#pragma once

#include <optional>
#include <vector>

#include "sbe/errors.hpp"
#include "sbe/field.hpp"
#include "sbe/measures.hpp"
#include "sbe/rng.hpp"

namespace sbe {

enum class ModelKind { ou, sbe, ddt, ss_lattice, ns2d };

const char* model_name(ModelKind m);

struct ModelConfig {
    ModelKind model = ModelKind::ou;
    double theta = 1.0;   // dissipation exponent (ou, sbe, ddt)
    double sigma = 0.0;   // ddt smoothing / ns2d hyperviscosity exponent
    int N = 8;            // Galerkin cutoff
    double dt = 1e-3;
    double T = 1.0;
    int stride = 1;             // record every stride-th step
    double noise_factor = 1.0;  // diagnostic misscaling of the noise amplitude

    // Throws ConfigError on invalid parameters or step-size rule violation.
    void validate() const;

    double lambda(int k) const;     // 1d models
    double lambda(Mode2d k) const;  // ns2d
    double stationary_variance(int k) const { return 1.0; }
    double stationary_variance(Mode2d k) const { return 1.0 / norm2(k); }
    long long steps() const;

    MeasureSpec invariant_measure() const;
};

// The explicit nonlinear term is the only stability constraint (the linear
// part is integrated exactly). The rule bounds the relative size of one
// explicit drift increment at stationary field amplitude: the drift scale is
// ~2|k| sqrt(N) and dissipation freezes modes beyond |k| ~ dt^(-1/(2 theta)),
// so we require dt * 2 sqrt(N) * min(N, dt^(-1/(2 theta))) <= 0.1 (and the
// ns2d analogue with drift scale ~2.5 |k| N... see implementation). Returns
// the left-hand side so callers can report the margin.
double step_rule_value(const ModelConfig& cfg);

// (1 - exp(-lambda dt))/lambda, continuous at lambda = 0 where it equals dt.
double phi1(double lambda, double dt);

struct PathState {
    double t = 0;
    SpectralField u;
};

struct PathState2d {
    double t = 0;
    Field2d u;
};

// Per-step toggles used by tests and diagnostics. Disabling the drift makes
// sbe/ss steps bitwise identical to the pure OU update on the same streams.
struct StepOverrides {
    bool drift = true;
    bool noise = true;
    bool dissipation = true;  // false forces lambda = 0, phi1 = dt
};

// One time step. `noise_streams` holds one stream per representative mode
// (index k-1 for 1d k = 1..N); each step consumes exactly one complex draw
// per representative mode. If `noise_out` is non-null it receives the
// increments eta_k for k = 1..N.
void ou_step(PathState& s, const ModelConfig& cfg, std::vector<RngStream>& noise_streams,
             std::vector<cplx>* noise_out = nullptr, const StepOverrides& ov = {});
void sbe_step(PathState& s, const ModelConfig& cfg, std::vector<RngStream>& noise_streams,
              std::vector<cplx>* noise_out = nullptr, const StepOverrides& ov = {});
void ss_step(PathState& s, const ModelConfig& cfg, std::vector<RngStream>& noise_streams,
             std::vector<cplx>* noise_out = nullptr, const StepOverrides& ov = {});
void ns_step(PathState2d& s, const ModelConfig& cfg, std::vector<RngStream>& noise_streams,
             std::vector<cplx>* noise_out = nullptr, const StepOverrides& ov = {});

// Sampled path: fields at t_j = j*dt*stride (first record at t = 0), plus the
// per-step noise increments when requested (stride must then be 1, so the
// martingale construction sees every step).
struct TrajectoryRecorder {
    double dt = 0;
    int stride = 1;
    int cutoff = 0;
    std::vector<double> times;
    std::vector<SpectralField> fields;
    bool has_noise = false;
    std::vector<std::vector<cplx>> noise;  // [step][k-1], k = 1..cutoff
};

struct Trajectory2d {
    double dt = 0;
    int stride = 1;
    int cutoff = 0;
    std::vector<double> times;
    std::vector<Field2d> fields;
};

struct SimulateOptions {
    bool record_noise = false;
    StepOverrides overrides{};
    // Default initial condition is a fresh draw from the invariant measure.
    std::optional<SpectralField> initial{};
    std::optional<Field2d> initial_2d{};
};

// Iterates the model's step from the initial field, recording every `stride`
// steps. Noise and initial-condition streams are keyed per mode through
// `family`. Throws BlowUpError with the failing time attached if the H norm
// exceeds 1e6.
TrajectoryRecorder simulate_path(const ModelConfig& cfg, const StreamFamily& family,
                                 const SimulateOptions& opts = {});
Trajectory2d simulate_path_2d(const ModelConfig& cfg, const StreamFamily& family,
                              const SimulateOptions& opts = {});

// The per-mode noise streams simulate_path uses (1d: k = 1..N in order).
std::vector<RngStream> make_noise_streams(const ModelConfig& cfg, const StreamFamily& family);

}  // namespace sbe
