// Cost per time step of the full integrators at production-like sizes.
#include <benchmark/benchmark.h>

#include "sbe/dynamics.hpp"
#include "sbe/field.hpp"
#include "sbe/rng.hpp"

namespace {

void bm_step(benchmark::State& state, sbe::ModelKind model, double theta) {
    sbe::ModelConfig cfg;
    cfg.model = model;
    cfg.theta = theta;
    cfg.N = int(state.range(0));
    cfg.dt = 1e-5;
    cfg.T = 1e-4;  // 10 steps per simulate call
    sbe::StreamFamily fam{99, 0, 0};
    for (auto _ : state) {
        sbe::TrajectoryRecorder tr = sbe::simulate_path(cfg, fam);
        benchmark::DoNotOptimize(tr);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * cfg.steps());
}

void bm_step_ou(benchmark::State& s) { bm_step(s, sbe::ModelKind::ou, 1.0); }
void bm_step_sbe(benchmark::State& s) { bm_step(s, sbe::ModelKind::sbe, 1.0); }
void bm_step_sbe_theta15(benchmark::State& s) { bm_step(s, sbe::ModelKind::sbe, 1.5); }
void bm_step_ss(benchmark::State& s) { bm_step(s, sbe::ModelKind::ss_lattice, 1.0); }

BENCHMARK(bm_step_ou)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(bm_step_sbe)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(bm_step_sbe_theta15)->Arg(256);
BENCHMARK(bm_step_ss)->RangeMultiplier(2)->Range(16, 64);

void bm_step_ns2d(benchmark::State& state) {
    sbe::ModelConfig cfg;
    cfg.model = sbe::ModelKind::ns2d;
    cfg.sigma = 0.5;
    cfg.N = int(state.range(0));
    cfg.dt = 1e-5;
    cfg.T = 1e-4;
    sbe::StreamFamily fam{99, 0, 0};
    for (auto _ : state) {
        sbe::Trajectory2d tr = sbe::simulate_path_2d(cfg, fam);
        benchmark::DoNotOptimize(tr);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * cfg.steps());
}
BENCHMARK(bm_step_ns2d)->RangeMultiplier(2)->Range(4, 16);

}  // namespace

BENCHMARK_MAIN();
