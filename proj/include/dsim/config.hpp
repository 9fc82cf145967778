// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dsim/sim.hpp"

namespace dsim {

// Raised for malformed or invalid configuration input; the CLI maps it to
// exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& message)
      : std::runtime_error(message) {}
};

// Parameters file for `analyze`: protocol params plus the report grid.
struct AnalyzeSpec {
  ProtocolParams params;
  std::vector<int> n_grid = {1, 2, 5, 9, 10, 50, 100};
  int k0 = 1;
};

// Strict parsers: unknown keys are hard errors, amounts are given in tokens.
// Schema version 1.
AnalyzeSpec load_analyze_spec(const std::string& path);
ScenarioConfig load_scenario_config(const std::string& path);
ScenarioConfig parse_scenario_config(const std::string& text);

const char* attacker_name(AttackerKind kind);

}  // namespace dsim
