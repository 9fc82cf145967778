// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsim/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dsim {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json value;
  try {
    in >> value;
  } catch (const json::parse_error& error) {
    throw ConfigError("config parse error in " + path + ": " + error.what());
  }
  if (!value.is_object()) throw ConfigError("config root must be an object");
  return value;
}

void reject_unknown_keys(const json& object, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (known.count(key) == 0)
      throw ConfigError("unknown key \"" + key + "\" in " + where);
  }
}

double require_number(const json& object, const std::string& key,
                      const std::string& where) {
  if (!object.contains(key))
    throw ConfigError("missing key \"" + key + "\" in " + where);
  if (!object.at(key).is_number())
    throw ConfigError("key \"" + key + "\" in " + where + " must be a number");
  return object.at(key).get<double>();
}

double number_or(const json& object, const std::string& key, double fallback) {
  if (!object.contains(key)) return fallback;
  if (!object.at(key).is_number())
    throw ConfigError("key \"" + key + "\" must be a number");
  return object.at(key).get<double>();
}

void check_schema_version(const json& object) {
  if (!object.contains("schema_version"))
    throw ConfigError("missing schema_version");
  if (!object.at("schema_version").is_number_integer() ||
      object.at("schema_version").get<int>() != 1)
    throw ConfigError("unsupported schema_version (expected 1)");
}

ProtocolParams parse_params(const json& object) {
  static const std::set<std::string> known = {
      "proposer_deposit",   "validator_deposit", "dispute_collateral",
      "collateral_cap",     "reward_fraction",   "participation_cost",
      "valuation_dispersion"};
  reject_unknown_keys(object, known, "params");
  ProtocolParams params;
  params.proposer_deposit =
      tokens_to_units(require_number(object, "proposer_deposit", "params"));
  params.validator_deposit =
      tokens_to_units(require_number(object, "validator_deposit", "params"));
  params.dispute_collateral =
      tokens_to_units(require_number(object, "dispute_collateral", "params"));
  params.collateral_cap =
      tokens_to_units(require_number(object, "collateral_cap", "params"));
  params.reward_fraction = require_number(object, "reward_fraction", "params");
  params.participation_cost =
      require_number(object, "participation_cost", "params");
  params.valuation_dispersion =
      require_number(object, "valuation_dispersion", "params");
  const auto problems = params.validate();
  if (!problems.empty()) throw ConfigError(problems.front());
  return params;
}

}  // namespace

const char* attacker_name(AttackerKind kind) {
  switch (kind) {
    case AttackerKind::FrontRunner: return "frontrunner";
    case AttackerKind::FollowTheLeader: return "follow_the_leader";
  }
  return "?";
}

AnalyzeSpec load_analyze_spec(const std::string& path) {
  const json root = parse_file(path);
  static const std::set<std::string> known = {"schema_version", "params",
                                              "n_grid", "k0"};
  reject_unknown_keys(root, known, "analyze spec");
  check_schema_version(root);
  if (!root.contains("params") || !root.at("params").is_object())
    throw ConfigError("missing params object");

  AnalyzeSpec spec;
  spec.params = parse_params(root.at("params"));
  if (root.contains("n_grid")) {
    if (!root.at("n_grid").is_array())
      throw ConfigError("n_grid must be an array of positive integers");
    spec.n_grid.clear();
    for (const json& entry : root.at("n_grid")) {
      if (!entry.is_number_integer() || entry.get<int>() < 1)
        throw ConfigError("n_grid must be an array of positive integers");
      spec.n_grid.push_back(entry.get<int>());
    }
    if (spec.n_grid.empty()) throw ConfigError("n_grid must not be empty");
  }
  spec.k0 = static_cast<int>(number_or(root, "k0", 1));
  if (spec.k0 < 1) throw ConfigError("k0 must be at least 1");
  return spec;
}

ScenarioConfig parse_scenario_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& error) {
    throw ConfigError(std::string("config parse error: ") + error.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");

  static const std::set<std::string> known = {
      "schema_version",      "scenario",        "params",
      "n_validators",        "trials",          "master_seed",
      "flags",               "initial_challengers", "auction_duration",
      "dispute_window",      "invalid_block_prob",  "attacker_prior",
      "threads"};
  reject_unknown_keys(root, known, "config");
  check_schema_version(root);

  ScenarioConfig config;
  if (!root.contains("scenario") || !root.at("scenario").is_string())
    throw ConfigError("missing scenario name");
  const std::string name = root.at("scenario").get<std::string>();
  const auto scenario = scenario_from_name(name);
  if (!scenario) throw ConfigError("unknown scenario \"" + name + "\"");
  config.scenario = *scenario;

  if (!root.contains("params") || !root.at("params").is_object())
    throw ConfigError("missing params object");
  config.params = parse_params(root.at("params"));

  config.n_validators = static_cast<int>(number_or(root, "n_validators", 9));
  config.trials = static_cast<long>(number_or(root, "trials", 1000));
  if (root.contains("master_seed")) {
    if (!root.at("master_seed").is_number_unsigned() &&
        !root.at("master_seed").is_number_integer())
      throw ConfigError("master_seed must be an integer");
    config.master_seed = root.at("master_seed").get<std::uint64_t>();
  }
  config.initial_challengers = static_cast<int>(number_or(
      root, "initial_challengers",
      config.scenario == Scenario::Scenario2 ? 2 : 1));
  config.auction_duration =
      static_cast<BlockNumber>(number_or(root, "auction_duration", 3));
  config.dispute_window =
      static_cast<BlockNumber>(number_or(root, "dispute_window", 32));
  config.invalid_block_prob = number_or(
      root, "invalid_block_prob",
      config.scenario == Scenario::CommitReveal ? 0.5 : 1.0);
  config.attacker_prior = number_or(root, "attacker_prior", 0.5);
  config.threads = static_cast<int>(number_or(root, "threads", 1));

  if (root.contains("flags")) {
    const json& flags = root.at("flags");
    if (!flags.is_object()) throw ConfigError("flags must be an object");
    static const std::set<std::string> known_flags = {"public_mempool",
                                                      "attackers"};
    reject_unknown_keys(flags, known_flags, "flags");
    if (flags.contains("public_mempool")) {
      if (!flags.at("public_mempool").is_boolean())
        throw ConfigError("public_mempool must be a boolean");
      config.public_mempool = flags.at("public_mempool").get<bool>();
    }
    if (flags.contains("attackers")) {
      if (!flags.at("attackers").is_array())
        throw ConfigError("attackers must be an array");
      for (const json& entry : flags.at("attackers")) {
        if (!entry.is_string()) throw ConfigError("attacker names are strings");
        const std::string attacker = entry.get<std::string>();
        if (attacker == "frontrunner") {
          config.attackers.push_back(AttackerKind::FrontRunner);
        } else if (attacker == "follow_the_leader") {
          config.attackers.push_back(AttackerKind::FollowTheLeader);
        } else {
          throw ConfigError("unknown attacker \"" + attacker + "\"");
        }
      }
    }
  }

  const auto problems = config.validate();
  if (!problems.empty()) throw ConfigError(problems.front());
  return config;
}

ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_config(buffer.str());
}

}  // namespace dsim
