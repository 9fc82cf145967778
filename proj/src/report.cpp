// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsim/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dsim/config.hpp"
#include "dsim/version.hpp"

namespace dsim {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string row_to_csv(const TrialRow& row) {
  std::ostringstream out;
  out << row.trial << ',' << scenario_name(row.scenario) << ','
      << row.proposer_net << ',';
  if (row.winner) out << *row.winner;
  out << ',' << row.entrants << ',';
  if (row.auction_price) out << *row.auction_price;
  out << ',' << row.fund_delta;
  return out.str();
}

ordered_json row_to_json(const TrialRow& row) {
  ordered_json entry;
  entry["trial"] = row.trial;
  entry["scenario"] = scenario_name(row.scenario);
  entry["proposer_net"] = row.proposer_net;
  if (row.winner) {
    entry["winner_id"] = *row.winner;
  } else {
    entry["winner_id"] = nullptr;
  }
  entry["entrants"] = row.entrants;
  if (row.auction_price) {
    entry["auction_price"] = *row.auction_price;
  } else {
    entry["auction_price"] = nullptr;
  }
  entry["fund_delta"] = row.fund_delta;
  return entry;
}

ordered_json params_to_json(const ProtocolParams& params) {
  ordered_json out;
  out["proposer_deposit"] = to_tokens(params.proposer_deposit);
  out["validator_deposit"] = to_tokens(params.validator_deposit);
  out["dispute_collateral"] = to_tokens(params.dispute_collateral);
  out["collateral_cap"] = to_tokens(params.collateral_cap);
  out["reward_fraction"] = params.reward_fraction;
  out["participation_cost"] = params.participation_cost;
  out["valuation_dispersion"] = params.valuation_dispersion;
  return out;
}

ordered_json config_to_json(const ScenarioConfig& config) {
  ordered_json out;
  out["schema_version"] = 1;
  out["scenario"] = scenario_name(config.scenario);
  out["params"] = params_to_json(config.params);
  out["n_validators"] = config.n_validators;
  out["trials"] = config.trials;
  out["master_seed"] = config.master_seed;
  ordered_json flags;
  flags["public_mempool"] = config.public_mempool;
  ordered_json attackers = ordered_json::array();
  for (AttackerKind kind : config.attackers) attackers.push_back(attacker_name(kind));
  flags["attackers"] = attackers;
  out["flags"] = flags;
  out["initial_challengers"] = config.initial_challengers;
  out["auction_duration"] = config.auction_duration;
  out["dispute_window"] = config.dispute_window;
  out["invalid_block_prob"] = config.invalid_block_prob;
  out["attacker_prior"] = config.attacker_prior;
  return out;
}

// Closed-form prediction for a metric, when the model pins one down.
std::optional<double> metric_prediction(const ScenarioConfig& config,
                                        const std::string& metric) {
  const bool auction_scenario = config.scenario == Scenario::Scenario2 ||
                                config.scenario == Scenario::Scenario3;
  if (metric == "proposer_loss") {
    // Scenario 1 is deterministic (zero standard error), so the prediction
    // must be the loss at ledger resolution: the stake minus the floored
    // winner share, not the real-valued (1-alpha)*D_P.
    if (config.scenario == Scenario::Scenario1) {
      const Amount stake = config.params.proposer_deposit;
      const Amount winner_share = static_cast<Amount>(std::floor(
          config.params.reward_fraction * static_cast<double>(stake)));
      return to_tokens(stake - winner_share);
    }
    return analytic_proposer_loss(config);
  }
  if (auction_scenario) {
    const int n = predicted_entrants(config);
    if (metric == "entrants") return static_cast<double>(n);
    if (metric == "winner_surplus")
      return econ::expected_surplus(n, config.params.valuation_dispersion);
    if (metric == "auction_price_tokens")
      return econ::expected_second_bid(econ::reward_pot(config.params),
                                       config.params.valuation_dispersion, n);
  }
  return std::nullopt;
}

}  // namespace

std::string format_trial_csv(const std::vector<TrialRow>& rows) {
  std::ostringstream out;
  out << kTrialCsvHeader << '\n';
  for (const TrialRow& row : rows) out << row_to_csv(row) << '\n';
  return out.str();
}

std::string format_trial_json(const std::vector<TrialRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const TrialRow& row : rows) out.push_back(row_to_json(row));
  return out.dump(2) + "\n";
}

std::string format_manifest(const ScenarioConfig& config,
                            const MonteCarloResult& result,
                            const std::string& trials_filename) {
  ordered_json manifest;
  manifest["schema_version"] = 1;
  ordered_json tool;
  tool["name"] = "disputesim";
  tool["version"] = kVersion;
  manifest["tool"] = tool;
  manifest["master_seed"] = config.master_seed;
  manifest["trials"] = config.trials;
  manifest["config"] = config_to_json(config);

  ordered_json metrics;
  for (const AggregateStats& stats : result.stats) {
    ordered_json entry;
    entry["mean"] = stats.mean;
    entry["variance"] = stats.variance;
    entry["std_error"] = stats.std_error;
    entry["trials"] = stats.trials;
    if (const auto prediction = metric_prediction(config, stats.metric)) {
      entry["prediction"] = *prediction;
      try {
        const VerifyReport report = verify_against_analytic(stats, *prediction);
        entry["z"] = report.z;
        entry["verdict"] = report.pass ? "PASS" : "FAIL";
      } catch (const Error&) {
        entry["z"] = nullptr;
        entry["verdict"] = "FAIL";
      }
    }
    metrics[stats.metric] = entry;
  }
  manifest["metrics"] = metrics;
  manifest["trials_file"] = trials_filename;
  return manifest.dump(2) + "\n";
}

std::string write_run_output(const ScenarioConfig& config,
                             const MonteCarloResult& result,
                             const std::string& out_dir,
                             const std::string& format) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec && !fs::is_directory(out_dir))
    throw IoError("cannot create output directory " + out_dir + ": " +
                  ec.message());

  const std::string trials_name =
      format == "json" ? "trials.json" : "trials.csv";
  const fs::path trials_path = fs::path(out_dir) / trials_name;
  const fs::path manifest_path = fs::path(out_dir) / "manifest.json";

  auto write_file = [](const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << contents;
    if (!out) throw IoError("write failed for " + path.string());
  };

  write_file(trials_path, format == "json" ? format_trial_json(result.rows)
                                           : format_trial_csv(result.rows));
  write_file(manifest_path, format_manifest(config, result, trials_name));
  return manifest_path.string();
}

}  // namespace dsim
