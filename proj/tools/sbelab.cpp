// sbelab <experiment> --config <file> [--seed S] [--out DIR]
//
// Exit codes: 0 all gates passed, 1 a gate failed, 2 configuration or usage
// error, 3 numeric blow-up during integration.
#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "sbe/config.hpp"
#include "sbe/errors.hpp"
#include "sbe/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Spectral Galerkin experiments for singular stochastic Burgers dynamics"};
    app.footer("Experiments: simulate, invariance, drift-scaling, cauchy, mollifier-cauchy,\n"
               "             ito-check, uniqueness, ns2d-invariance");

    std::string experiment, config_path, out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false, out_set = false;

    app.add_option("experiment", experiment, "Experiment to run")->required();
    app.add_option("--config", config_path, "Key-value config file")->required();
    auto* seed_opt = app.add_option("--seed", seed, "Override the config seed");
    auto* out_opt = app.add_option("--out", out_dir, "Override the output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0, anything else is usage error
    }
    seed_set = seed_opt->count() > 0;
    out_set = out_opt->count() > 0;

    try {
        sbe::ExperimentKind kind = sbe::experiment_from_name(experiment);
        sbe::ExperimentSpec spec = sbe::parse_config(config_path, kind);
        if (seed_set) spec.seed = seed;
        if (out_set) spec.out_dir = out_dir;
        return sbe::run_experiment(spec);
    } catch (const sbe::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const sbe::BlowUpError& e) {
        std::fprintf(stderr, "blow-up: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
