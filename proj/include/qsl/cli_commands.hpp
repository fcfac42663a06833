// cli_commands.hpp — The three command entry points behind the qsl binary.
// Each returns a process exit code: 0 success, 1 claim-check failure,
// 2 config error, 3 numeric failure (the binary maps exceptions to 2/3).

#pragma once

#include "qsl/run_config.hpp"

#include <string>

namespace qsl::cli {

// Propagates the named schedule over [0, tau], writes a per-grid-point CSV
// (t, overlap, L, <H>, dE, sqrt<H^2>, rho_dot norms) and a JSON summary with
// every bound entry at final time, as <schedule>.csv / <schedule>.json under
// the configured output directory.
int cmd_simulate(const RunConfig& config, const std::string& schedule_name, double tau, int steps);

// Runs the configured experiments (or the default suite when the config has no
// "experiments" key), writing one JSON verdict per experiment. Returns 0 iff
// every expected-confirmed experiment confirmed.
int cmd_verify(const RunConfig& config);

// Randomized sweep over schedule samples: one CSV row per sample with every
// bound value and satisfied flag.
int cmd_sweep(const RunConfig& config);

}  // namespace qsl::cli
