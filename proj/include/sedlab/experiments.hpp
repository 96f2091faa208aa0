#pragma once

#include "sedlab/config.hpp"

namespace sedlab {

/* Runs the configured experiment and writes result.csv + summary.json into
 * config.output_path (write-to-temp then rename; any stale result.csv at the
 * path is removed first, so an error leaves no result.csv behind).
 * Returns 0 when the experiment's built-in checks pass, 1 otherwise.
 * Typed errors (ConfigError / ResolutionError / StatisticsError / std domain
 * errors) propagate to the caller. */
int run_experiment(const ExperimentConfig& config);

}
