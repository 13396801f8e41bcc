// Experiment drivers behind the CLI: each one simulates its ensemble in
// parallel (deterministic per-path streams, ordered reduction), estimates the
// relevant statistics, writes CSV tables plus a manifest with per-file
// SHA-256 checksums under spec.out_dir, prints one line per gate, and
// reports the overall verdict through the exit code.
#pragma once

#include "sbe/config.hpp"

namespace sbe {

// Returns 0 when every gate passed, 1 on a gate failure. Throws ConfigError
// (exit 2) for invalid setups and BlowUpError (exit 3) on numeric escape.
int run_experiment(const ExperimentSpec& spec);

}  // namespace sbe
