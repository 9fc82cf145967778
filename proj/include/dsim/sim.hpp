// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsim/agents.hpp"
#include "dsim/ledger.hpp"

namespace dsim {

enum class Scenario {
  Scenario1,         // proposer counters through a controlled validator
  Scenario2,         // several challenges exist, then the auction is deployed
  Scenario3,         // a single challenge exists, then the auction is deployed
  Escrow,            // scenario-1 attack under the escrowed-reward rules
  CommitReveal,      // hidden challenge decisions behind hash commitments
  BaselineNoDefense, // plaintext rules, passive proposer
};

const char* scenario_name(Scenario scenario);
std::optional<Scenario> scenario_from_name(const std::string& name);

enum class AttackerKind { FrontRunner, FollowTheLeader };

struct ScenarioConfig {
  Scenario scenario = Scenario::Scenario2;
  ProtocolParams params;
  int n_validators = 9;
  long trials = 1000;
  std::uint64_t master_seed = 0;
  bool public_mempool = false;
  std::vector<AttackerKind> attackers;
  int initial_challengers = 1;     // prior challenges before the auction
  BlockNumber auction_duration = 3;
  BlockNumber dispute_window = 32; // escrow / commit-reveal horizon
  double invalid_block_prob = 1.0; // per-trial ground truth draw
  double attacker_prior = 0.5;     // follow-the-leader commit guess
  int threads = 1;                 // 0 = hardware concurrency

  std::vector<std::string> validate() const;
};

// Everything observable about one deterministic trial. Monetary fields are
// ledger deltas in base units and sum to zero against the communal fund;
// utility fields additionally charge the abstract participation cost.
struct TrialResult {
  long trial = 0;
  Amount proposer_net = 0;             // proposer coalition, base units
  double proposer_net_with_costs = 0;  // tokens, minus c per coalition action
  std::map<AccountId, Amount> agent_net;
  std::map<AccountId, double> agent_utility;  // tokens, cost-inclusive
  std::optional<AccountId> winner;
  int entrants = 0;
  std::optional<Amount> auction_price;
  Amount fund_delta = 0;
  std::map<std::string, double> metrics;
};

struct AggregateStats {
  std::string metric;
  long trials = 0;
  double mean = 0;
  double variance = 0;   // sample variance
  double std_error = 0;  // sqrt(variance / trials)
  std::optional<double> prediction;
  std::optional<double> z;
  std::optional<bool> pass;
};

// Compact per-trial record for CSV output.
struct TrialRow {
  long trial = 0;
  Scenario scenario = Scenario::Scenario2;
  Amount proposer_net = 0;
  std::optional<AccountId> winner;
  int entrants = 0;
  std::optional<Amount> auction_price;
  Amount fund_delta = 0;
};

struct MonteCarloResult {
  std::vector<TrialRow> rows;
  std::vector<AggregateStats> stats;  // one per metric, name-sorted
};

struct VerifyReport {
  bool pass = false;
  double z = 0;
};

// Deterministic function of (config, master_seed, trial_index).
TrialResult run_trial(const ScenarioConfig& config, long trial_index);

// Runs all trials (in parallel when configured) and reduces in index order,
// so the result is independent of the worker count.
MonteCarloResult run_monte_carlo(const ScenarioConfig& config);

// PASS iff |mean - prediction| <= tolerance_sigmas * std_error. A zero
// standard error passes only on exact agreement and otherwise raises
// Error(degenerate_stats).
VerifyReport verify_against_analytic(const AggregateStats& stats,
                                     double prediction,
                                     double tolerance_sigmas = 3.0);

// Closed-form loss prediction for the configured scenario, when one exists.
std::optional<double> analytic_proposer_loss(const ScenarioConfig& config);

// Total auction participants the entry rule admits for this config.
int predicted_entrants(const ScenarioConfig& config);

AggregateStats aggregate_metric(const std::string& name,
                                const std::vector<double>& samples);

}  // namespace dsim
