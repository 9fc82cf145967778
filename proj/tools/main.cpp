// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsim/config.hpp"
#include "dsim/economics.hpp"
#include "dsim/report.hpp"
#include "dsim/sim.hpp"
#include "dsim/verify.hpp"
#include "dsim/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

std::string default_out_dir() {
  if (const char* env = std::getenv("DISPUTESIM_OUTDIR")) return env;
  return ".";
}

int cmd_analyze(const std::string& params_file, bool as_json) {
  const dsim::AnalyzeSpec spec = dsim::load_analyze_spec(params_file);
  const dsim::ProtocolParams& p = spec.params;
  const double reward = dsim::econ::reward_pot(p);
  const double dp = dsim::to_tokens(p.proposer_deposit);
  const double mu = p.valuation_dispersion;
  const double cost = p.participation_cost;
  const int entrants =
      dsim::econ::equilibrium_entrants(mu, cost, spec.k0);

  nlohmann::ordered_json out;
  out["reward_pot"] = reward;
  out["scenario1_cost"] = dsim::econ::scenario1_cost(p.reward_fraction, dp);
  out["equilibrium_entrants"] = entrants;
  out["k0"] = spec.k0;
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (int n : spec.n_grid) {
    nlohmann::ordered_json row;
    row["n"] = n;
    row["expected_surplus"] = dsim::econ::expected_surplus(n, mu);
    row["participation_beneficial"] =
        dsim::econ::participation_beneficial(mu, cost, n);
    row["expected_second_bid"] = dsim::econ::expected_second_bid(reward, mu, n);
    row["expected_net_loss"] =
        dsim::econ::proposer_expected_net_loss(p.reward_fraction, dp, mu, n);
    grid.push_back(row);
  }
  out["grid"] = grid;

  if (as_json) {
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "reward pot R = " << reward << " tokens\n"
            << "scenario-1 self-challenge cost = "
            << out["scenario1_cost"].get<double>() << " tokens\n"
            << "equilibrium entrants from k0=" << spec.k0 << ": " << entrants
            << "\n\n"
            << "n\tE[surplus]\tenter?\tE[second bid]\tE[net loss]\n";
  for (const auto& row : grid) {
    std::cout << row["n"].get<int>() << '\t'
              << row["expected_surplus"].get<double>() << '\t'
              << (row["participation_beneficial"].get<bool>() ? "yes" : "no")
              << '\t' << row["expected_second_bid"].get<double>() << '\t'
              << row["expected_net_loss"].get<double>() << '\n';
  }
  return kExitOk;
}

int cmd_simulate(const std::string& config_file, long trials_override,
                 std::int64_t seed_override, const std::string& out_dir,
                 const std::string& format, int threads_override) {
  dsim::ScenarioConfig config = dsim::load_scenario_config(config_file);
  if (trials_override > 0) config.trials = trials_override;
  if (seed_override >= 0)
    config.master_seed = static_cast<std::uint64_t>(seed_override);
  if (threads_override >= 0) config.threads = threads_override;
  const auto problems = config.validate();
  if (!problems.empty()) throw dsim::ConfigError(problems.front());

  const dsim::MonteCarloResult result = dsim::run_monte_carlo(config);
  const std::string manifest_path =
      dsim::write_run_output(config, result, out_dir, format);

  std::cout << "scenario " << dsim::scenario_name(config.scenario) << ", "
            << config.trials << " trials, seed " << config.master_seed << "\n";
  for (const dsim::AggregateStats& stats : result.stats) {
    std::cout << "  " << stats.metric << ": mean=" << stats.mean
              << " se=" << stats.std_error << "\n";
  }
  std::cout << "wrote " << manifest_path << "\n";
  return kExitOk;
}

int cmd_sweep(const std::string& config_file, const std::string& param,
              double from, double to, int steps, const std::string& out_path) {
  if (param != "n" && param != "alpha" && param != "mu" && param != "c")
    throw dsim::ConfigError("unknown sweep parameter \"" + param +
                            "\" (expected n, alpha, mu or c)");
  if (steps < 1) throw dsim::ConfigError("steps must be at least 1");
  const dsim::ScenarioConfig base = dsim::load_scenario_config(config_file);

  std::ostringstream table;
  table << "param,value,analytic_loss,sim_loss_mean,sim_loss_se,z,trials\n";
  for (int i = 0; i < steps; ++i) {
    const double value =
        steps == 1 ? from : from + (to - from) * i / (steps - 1);
    dsim::ScenarioConfig config = base;
    if (param == "n") {
      config.n_validators = static_cast<int>(std::llround(value));
      config.initial_challengers =
          std::min(config.initial_challengers, config.n_validators);
    } else if (param == "alpha") {
      config.params.reward_fraction = value;
    } else if (param == "mu") {
      config.params.valuation_dispersion = value;
    } else {
      config.params.participation_cost = value;
    }
    const auto problems = config.validate();
    if (!problems.empty())
      throw dsim::ConfigError("sweep point " + std::to_string(value) + ": " +
                              problems.front());

    const dsim::MonteCarloResult result = dsim::run_monte_carlo(config);
    double mean = 0, se = 0;
    for (const dsim::AggregateStats& stats : result.stats) {
      if (stats.metric == "proposer_loss") {
        mean = stats.mean;
        se = stats.std_error;
      }
    }
    const auto analytic = dsim::analytic_proposer_loss(config);
    table << param << ',' << value << ','
          << (analytic ? std::to_string(*analytic) : "") << ',' << mean << ','
          << se << ',';
    if (analytic && se > 0) table << (mean - *analytic) / se;
    table << ',' << config.trials << "\n";
  }

  if (out_path.empty()) {
    std::cout << table.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw dsim::IoError("cannot open " + out_path + " for writing");
    out << table.str();
    if (!out) throw dsim::IoError("write failed for " + out_path);
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<dsim::CriterionResult> results;
  if (suite == "all") {
    results = dsim::run_all_criteria(seed);
  } else {
    results = dsim::run_suite(suite, seed);
  }
  bool all_pass = true;
  for (const dsim::CriterionResult& result : results) {
    std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << result.name << " — "
              << result.detail << "\n";
    all_pass = all_pass && result.pass;
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dispute-game economics simulator for optimistic rollups"};
  app.set_version_flag("--version", dsim::kVersion);
  app.require_subcommand(1);

  std::string params_file;
  bool analyze_json = false;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Closed-form payoffs and entry thresholds");
  analyze->add_option("params", params_file, "parameters file (JSON)")
      ->required();
  analyze->add_flag("--json", analyze_json, "machine-readable output");

  std::string sim_config;
  long sim_trials = 0;
  std::int64_t sim_seed = -1;
  std::string sim_out = default_out_dir();
  std::string sim_format = "csv";
  int sim_threads = -1;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo scenario runs with per-trial output");
  simulate->add_option("config", sim_config, "scenario config file (JSON)")
      ->required();
  simulate->add_option("--trials", sim_trials, "override trial count");
  simulate->add_option("--seed", sim_seed, "override master seed");
  simulate->add_option("--out", sim_out, "output directory");
  simulate->add_option("--format", sim_format, "per-trial format")
      ->check(CLI::IsMember({"csv", "json"}));
  simulate->add_option("--threads", sim_threads,
                       "worker threads (0 = hardware)");

  std::string sweep_config;
  std::string sweep_param;
  double sweep_from = 0, sweep_to = 0;
  int sweep_steps = 1;
  std::string sweep_out;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Analytic vs simulated loss across one parameter");
  sweep->add_option("config", sweep_config, "scenario config file (JSON)")
      ->required();
  sweep->add_option("--param", sweep_param, "one of n, alpha, mu, c")
      ->required();
  sweep->add_option("--from", sweep_from, "grid start")->required();
  sweep->add_option("--to", sweep_to, "grid end")->required();
  sweep->add_option("--steps", sweep_steps, "grid points")->required();
  sweep->add_option("--out", sweep_out, "write CSV here instead of stdout");

  std::string verify_suite = "all";
  std::uint64_t verify_seed = 20260810;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run an analytic-reproduction suite");
  verify->add_option("--suite", verify_suite, "suite name")
      ->check(CLI::IsMember({"theorem1", "corollary2", "scenarios", "defenses",
                             "all"}));
  verify->add_option("--seed", verify_seed, "suite seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForVersion& version) {
    return app.exit(version);
  } catch (const CLI::ParseError& error) {
    std::cerr << error.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (*analyze) return cmd_analyze(params_file, analyze_json);
    if (*simulate)
      return cmd_simulate(sim_config, sim_trials, sim_seed, sim_out, sim_format,
                          sim_threads);
    if (*sweep)
      return cmd_sweep(sweep_config, sweep_param, sweep_from, sweep_to,
                       sweep_steps, sweep_out);
    if (*verify) return cmd_verify(verify_suite, verify_seed);
  } catch (const dsim::ConfigError& error) {
    std::cerr << "config error: " << error.what() << "\n";
    return kExitConfigError;
  } catch (const dsim::IoError& error) {
    std::cerr << "io error: " << error.what() << "\n";
    return kExitIoError;
  } catch (const dsim::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return kExitIoError;
  }
  return kExitOk;
}
