// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "dsim/sim.hpp"

namespace dsim {

// Raised on output failures; the CLI maps it to exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

inline constexpr const char* kTrialCsvHeader =
    "trial,scenario,proposer_net,winner_id,entrants,auction_price,fund_delta";

std::string format_trial_csv(const std::vector<TrialRow>& rows);
std::string format_trial_json(const std::vector<TrialRow>& rows);

// Deterministic JSON manifest: config echo, seed, tool version, per-metric
// statistics with verdicts against the closed forms where one applies.
// Re-running the echoed config and seed reproduces the statistics exactly.
std::string format_manifest(const ScenarioConfig& config,
                            const MonteCarloResult& result,
                            const std::string& trials_filename);

// Writes per-trial records plus manifest.json under `out_dir`.
// `format` is "csv" or "json". Returns the manifest path.
std::string write_run_output(const ScenarioConfig& config,
                             const MonteCarloResult& result,
                             const std::string& out_dir,
                             const std::string& format);

}  // namespace dsim
