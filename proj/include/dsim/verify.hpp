// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dsim {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The checks behind `disputesim verify` and the acceptance suite. Each is
// self-contained and deterministic for a given seed.
CriterionResult check_theorem1(std::uint64_t seed);
CriterionResult check_corollary2(std::uint64_t seed);
CriterionResult check_scenario1_accounting(std::uint64_t seed);
CriterionResult check_entry_equilibrium(std::uint64_t seed);
CriterionResult check_conservation(std::uint64_t seed);
CriterionResult check_escrow_defense(std::uint64_t seed);
CriterionResult check_commit_reveal_defense(std::uint64_t seed);
CriterionResult check_determinism(std::uint64_t seed);

// Named suites: "theorem1", "corollary2", "scenarios", "defenses".
// Throws Error(invalid_argument) for an unknown suite name.
std::vector<CriterionResult> run_suite(const std::string& suite,
                                       std::uint64_t seed);

// Every check, in criterion order.
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed);

}  // namespace dsim
