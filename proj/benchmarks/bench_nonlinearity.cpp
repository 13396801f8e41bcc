// Throughput of the quadratic mode sums that dominate every nonlinear run.
#include <benchmark/benchmark.h>

#include "sbe/field.hpp"
#include "sbe/measures.hpp"
#include "sbe/nonlinearity.hpp"
#include "sbe/poisson.hpp"
#include "sbe/rng.hpp"

namespace {

sbe::SpectralField make_field(int N) {
    sbe::MeasureSpec spec{sbe::MeasureKind::white_noise_1d, N};
    return sbe::sample(spec, sbe::StreamFamily{1234, 0, 0});
}

void bm_burgers(benchmark::State& state) {
    const int N = int(state.range(0));
    sbe::SpectralField x = make_field(N);
    for (auto _ : state) {
        sbe::SpectralField f = sbe::burgers_nonlinearity(x, N);
        benchmark::DoNotOptimize(f);
    }
    state.SetComplexityN(N);
}
BENCHMARK(bm_burgers)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void bm_ss_lattice(benchmark::State& state) {
    const int N = int(state.range(0));
    sbe::SpectralField x = make_field(N);
    for (auto _ : state) {
        sbe::SpectralField f = sbe::ss_nonlinearity(x, N);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(bm_ss_lattice)->RangeMultiplier(2)->Range(8, 128);

void bm_ns2d(benchmark::State& state) {
    const int N = int(state.range(0));
    sbe::MeasureSpec spec{sbe::MeasureKind::ns_gibbs_2d, N};
    sbe::Field2d x = sbe::sample_2d(spec, sbe::StreamFamily{1234, 0, 0});
    for (auto _ : state) {
        sbe::Field2d f = sbe::ns_nonlinearity(x, N);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(bm_ns2d)->RangeMultiplier(2)->Range(4, 16);

void bm_poisson_solve(benchmark::State& state) {
    const int N = int(state.range(0));
    sbe::SpectralField x = make_field(N);
    for (auto _ : state) {
        sbe::SpectralField h = sbe::h_poisson(x, N, 1.0);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(bm_poisson_solve)->RangeMultiplier(2)->Range(8, 128);

}  // namespace

BENCHMARK_MAIN();
