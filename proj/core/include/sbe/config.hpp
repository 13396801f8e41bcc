// Experiment configuration: a flat `key = value` text file (UTF-8, one pair
// per line, `#` comments) plus the experiment kind picked on the command
// line. Unknown keys, malformed values, duplicates, and physical-parameter
// violations are all reported as ConfigError with file:line context.
//
// Keys: model, theta, sigma, N, dt, T, paths, stride, modes, M_list,
// eps_list, eps, seed, out, noise_factor. List values are comma-separated.
// `eps` is the mollifier reference scale for mollifier-cauchy and the weight
// exponent for uniqueness; experiments fill kind-specific defaults for any
// key left unset (see has()).
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sbe/dynamics.hpp"

namespace sbe {

enum class ExperimentKind {
    simulate,
    invariance,
    drift_scaling,
    cauchy,
    mollifier_cauchy,
    ito_check,
    uniqueness,
    ns2d_invariance,
};

// CLI names: simulate, invariance, drift-scaling, cauchy, mollifier-cauchy,
// ito-check, uniqueness, ns2d-invariance.
const char* experiment_name(ExperimentKind kind);
ExperimentKind experiment_from_name(const std::string& name);  // throws ConfigError

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::simulate;
    ModelConfig model{};
    int paths = 256;
    std::vector<int> modes{};        // tracked output modes
    std::vector<int> m_list{};       // truncation ladder
    std::vector<double> eps_list{};  // mollifier scales
    double eps = 0;                  // see header comment; 0 = unset
    std::uint64_t seed = 1;
    std::string out_dir = "out";

    std::set<std::string> provided;  // keys present in the config file
    bool has(const std::string& key) const { return provided.count(key) != 0; }

    // Full semantic validation including the model's step-size rule.
    void validate() const;
};

ExperimentSpec parse_config(const std::string& path, ExperimentKind kind);
// Same grammar from an in-memory string (tests); `origin` labels messages.
ExperimentSpec parse_config_text(const std::string& text, ExperimentKind kind,
                                 const std::string& origin = "<config>");

}  // namespace sbe
