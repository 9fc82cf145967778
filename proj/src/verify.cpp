// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dsim/agents.hpp"
#include "dsim/auction.hpp"
#include "dsim/economics.hpp"
#include "dsim/ledger.hpp"
#include "dsim/report.hpp"
#include "dsim/rng.hpp"
#include "dsim/sim.hpp"

namespace dsim {

namespace {

std::string fmt(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

ProtocolParams standard_params(double alpha, double cost = 0.001,
                               double dispersion = 1.0) {
  ProtocolParams params;
  params.proposer_deposit = 100 * kUnitsPerToken;
  params.validator_deposit = 50 * kUnitsPerToken;
  params.dispute_collateral = 10 * kUnitsPerToken;
  params.collateral_cap = 1000 * kUnitsPerToken;
  params.reward_fraction = alpha;
  params.participation_cost = cost;
  params.valuation_dispersion = dispersion;
  return params;
}

}  // namespace

// Criterion 1: winner surplus of n uniform valuations matches mu/(n+1).
CriterionResult check_theorem1(std::uint64_t seed) {
  CriterionResult result{"theorem1 surplus mu/(n+1)", true, ""};
  const double reward = 110.0;
  const double mu = 1.0;
  const long trials = 100'000;
  std::ostringstream detail;
  for (int n : {1, 2, 5, 10, 50}) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(n));
    std::vector<double> surplus(static_cast<std::size_t>(trials));
    for (long t = 0; t < trials; ++t) {
      double best = -1e300;
      double second = -1e300;
      for (int i = 0; i < n; ++i) {
        const double v = auction::draw_valuation(rng, reward, mu);
        if (v > best) {
          second = best;
          best = v;
        } else if (v > second) {
          second = v;
        }
      }
      if (n == 1) second = reward - mu;  // lone bidder clears at the reserve
      surplus[static_cast<std::size_t>(t)] = best - second;
    }
    const AggregateStats stats = aggregate_metric("surplus", surplus);
    const double prediction = econ::expected_surplus(n, mu);
    const VerifyReport report = verify_against_analytic(stats, prediction, 3.0);
    detail << "n=" << n << " mean=" << fmt(stats.mean)
           << " expect=" << fmt(prediction) << " z=" << fmt(report.z) << "; ";
    if (!report.pass) result.pass = false;
  }
  result.detail = detail.str();
  return result;
}

// Criterion 2: end-to-end scenario-2 loss matches (1-alpha)D_P + 2mu/(n+1).
CriterionResult check_corollary2(std::uint64_t seed) {
  CriterionResult result{"corollary2 proposer net loss", true, ""};
  std::ostringstream detail;
  int cell = 0;
  for (double alpha : {0.5, 0.99, 1.0}) {
    for (int n : {2, 9, 99}) {
      ScenarioConfig config;
      config.scenario = Scenario::Scenario2;
      config.params = standard_params(alpha);
      config.n_validators = n;
      config.initial_challengers = 2;
      config.trials = 10'000;
      config.master_seed = seed + 1000 + static_cast<std::uint64_t>(cell++);
      config.threads = 0;
      const MonteCarloResult mc = run_monte_carlo(config);
      const AggregateStats* loss = nullptr;
      for (const AggregateStats& stats : mc.stats)
        if (stats.metric == "proposer_loss") loss = &stats;
      const double prediction = econ::proposer_expected_net_loss(
          alpha, to_tokens(config.params.proposer_deposit), 1.0, n);
      const VerifyReport report = verify_against_analytic(*loss, prediction, 3.0);
      detail << "a=" << alpha << ",n=" << n << " mean=" << fmt(loss->mean)
             << " expect=" << fmt(prediction) << " z=" << fmt(report.z) << "; ";
      if (!report.pass) result.pass = false;
    }
  }
  result.detail = detail.str();
  return result;
}

// Criterion 3: deterministic scenario-1 replay loses exactly (1-alpha)D_P.
CriterionResult check_scenario1_accounting(std::uint64_t seed) {
  CriterionResult result{"scenario1 exact accounting", true, ""};
  Rng rng(seed + 3);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const double alpha = 0.01 + 0.99 * rng.next_unit();
    const Amount dp = static_cast<Amount>(10 + rng.next_below(991)) * kUnitsPerToken;
    const Amount dg = static_cast<Amount>(1 + rng.next_below(50)) * kUnitsPerToken;

    ScenarioConfig config;
    config.scenario = Scenario::Scenario1;
    config.params = standard_params(alpha);
    config.params.proposer_deposit = dp;
    config.params.dispute_collateral = dg;
    config.params.collateral_cap = dg + 100 * kUnitsPerToken;
    config.params.valuation_dispersion =
        0.5 * (alpha * to_tokens(dp) + to_tokens(dg));
    config.n_validators = 2;
    config.trials = 1;
    config.master_seed = seed + static_cast<std::uint64_t>(i);
    const TrialResult trial = run_trial(config, 0);

    const double expected_units =
        -(1.0 - alpha) * static_cast<double>(dp);  // gross, before costs
    if (std::abs(static_cast<double>(trial.proposer_net) - expected_units) > 1.0)
      ++failures;
  }
  result.pass = failures == 0;
  result.detail = "100 random (alpha, D_P, D_g) triples, " +
                  std::to_string(failures) + " outside 1 base unit";
  return result;
}

// Criterion 4: realized auction entry equals the sequential-entry fixed point.
CriterionResult check_entry_equilibrium(std::uint64_t seed) {
  CriterionResult result{"corollary1 entry equilibrium", true, ""};
  int failures = 0;
  int checked = 0;
  int boundary_cells = 0;
  std::optional<int> spot;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double mu = 0.5 + 0.5 * i;
      const double cost = 0.1 + 0.1 * j;
      ScenarioConfig config;
      config.scenario = Scenario::Scenario3;
      config.params = standard_params(1.0, cost, mu);
      config.n_validators = 120;
      config.initial_challengers = 1;
      config.trials = 1;
      config.master_seed = seed + static_cast<std::uint64_t>(i * 20 + j);
      const TrialResult trial = run_trial(config, 0);
      const int expected =
          std::min(econ::equilibrium_entrants(mu, cost, 1), config.n_validators);
      ++checked;
      if (trial.entrants != expected) ++failures;
      if (mu <= 3.0 * cost) {
        ++boundary_cells;
        if (trial.entrants != 1) ++failures;
      }
      if (mu == 10.0 && cost == 1.0) spot = trial.entrants;
    }
  }
  result.pass = failures == 0 && spot && *spot == 8;
  result.detail = std::to_string(checked) + " cells, " +
                  std::to_string(failures) + " mismatches, " +
                  std::to_string(boundary_cells) +
                  " no-entry cells, spot mu=10 c=1 entrants=" +
                  (spot ? std::to_string(*spot) : std::string("none"));
  return result;
}

namespace {

// One fuzzed operation sequence over all four contract machines.
// Returns false if conservation broke.
bool fuzz_sequence(std::uint64_t seed) {
  Rng rng(seed);
  ProtocolParams params = standard_params(0.7, 0.01, 1.0);
  Ledger ledger(params);

  const std::vector<AccountId> proposers = {1, 2};
  const std::vector<AccountId> validators = {3, 4, 5, 6};
  for (AccountId id : proposers) ledger.create_account(id, 2000 * kUnitsPerToken);
  for (AccountId id : validators) ledger.create_account(id, 500 * kUnitsPerToken);

  std::vector<BlockId> blocks;
  blocks.push_back(ledger.propose_block(1, rng.bernoulli(0.8)));
  blocks.push_back(ledger.propose_block(2, rng.bernoulli(0.5)));
  std::vector<ContractId> escrows;
  std::vector<ContractId> crs;
  if (rng.bernoulli(0.5))
    escrows.push_back(ledger.attach_escrow(blocks[0], 0, 4 + rng.next_below(16)));
  if (rng.bernoulli(0.5))
    crs.push_back(ledger.attach_commit_reveal(blocks[1], 2 + rng.next_below(3),
                                              6 + rng.next_below(4)));
  std::vector<ContractId> auctions;

  struct Committed {
    ContractId contract;
    AccountId validator;
    Decision decision;
    std::uint64_t block;
    Hash32 nonce;
  };
  std::vector<Committed> committed;

  const Amount start_supply = ledger.total_supply();
  auto pick = [&rng](const auto& pool) {
    return pool[rng.next_below(pool.size())];
  };

  for (int op = 0; op < 30; ++op) {
    const std::uint64_t choice = rng.next_below(14);
    try {
      switch (choice) {
        case 0:
        case 1:
          ledger.advance_block();
          break;
        case 2:
          ledger.open_dispute(pick(validators), pick(blocks));
          break;
        case 3: {
          if (ledger.games().empty()) break;
          std::vector<ContractId> ids;
          for (const auto& [id, game] : ledger.games()) ids.push_back(id);
          ledger.finalize_dispute(pick(ids), rng.bernoulli(0.5)
                                                 ? GroundTruth::BlockInvalid
                                                 : GroundTruth::BlockValid);
          break;
        }
        case 4:
          auctions.push_back(
              ledger.auction_init(pick(proposers), pick(blocks), 2 + rng.next_below(4)));
          break;
        case 5: {
          if (auctions.empty()) break;
          const ContractId id = pick(auctions);
          const Amount reserve = ledger.auctions().at(id).reserve;
          const Amount wiggle =
              static_cast<Amount>(rng.next_below(2 * kUnitsPerToken)) -
              kUnitsPerToken / 2;
          ledger.auction_submit_bid(id, pick(validators), reserve + wiggle);
          break;
        }
        case 6:
          if (!auctions.empty()) ledger.auction_finalize(pick(auctions));
          break;
        case 7:
          if (!auctions.empty())
            ledger.auction_resolve(pick(auctions), rng.bernoulli(0.5));
          break;
        case 8:
          if (!escrows.empty())
            ledger.escrow_initiate_challenge(
                pick(escrows), pick(validators),
                static_cast<Amount>(rng.next_below(20 * kUnitsPerToken)));
          break;
        case 9:
          if (!escrows.empty()) ledger.escrow_finalize(pick(escrows));
          break;
        case 10: {
          if (crs.empty()) break;
          const ContractId id = pick(crs);
          const AccountId validator = pick(validators);
          Committed entry{id, validator,
                          rng.bernoulli(0.5) ? Decision::Challenge
                                             : Decision::NoChallenge,
                          pick(blocks), rng.next_bytes32()};
          ledger.commit(id, validator,
                        commit_digest(entry.decision, entry.block, entry.nonce,
                                      validator));
          committed.push_back(entry);
          break;
        }
        case 11: {
          if (crs.empty()) break;
          if (!committed.empty() && rng.bernoulli(0.6)) {
            const Committed& entry = pick(committed);
            ledger.reveal(entry.contract, entry.validator, entry.decision,
                          entry.block, entry.nonce);
          } else {
            ledger.reveal(pick(crs), pick(validators), Decision::Challenge,
                          rng.next_below(100), rng.next_bytes32());
          }
          break;
        }
        case 12:
          if (!crs.empty()) ledger.process_challenges(pick(crs));
          break;
        case 13:
          ledger.release_stake(pick(blocks));
          break;
      }
    } catch (const Error&) {
      // rejected operations must not move value; checked below
    }
    if (ledger.total_supply() != start_supply) return false;
  }
  return true;
}

}  // namespace

// Criterion 5: bit-exact supply across fuzzed operation sequences.
CriterionResult check_conservation(std::uint64_t seed) {
  CriterionResult result{"conservation under fuzzing", true, ""};
  const int sequences = 10'000;
  int violations = 0;
  for (int i = 0; i < sequences; ++i) {
    if (!fuzz_sequence(seed * 0x10001 + static_cast<std::uint64_t>(i)))
      ++violations;
  }
  result.pass = violations == 0;
  result.detail = std::to_string(sequences) + " sequences, " +
                  std::to_string(violations) + " conservation violations";
  return result;
}

// Criterion 6: the escrowed reward restores the full penalty and its winner
// does not depend on finalization order.
CriterionResult check_escrow_defense(std::uint64_t seed) {
  CriterionResult result{"escrowed reward defense", true, ""};
  std::ostringstream detail;
  const double alpha = 0.99;

  ScenarioConfig baseline;
  baseline.scenario = Scenario::Scenario1;
  baseline.params = standard_params(alpha);
  baseline.n_validators = 2;
  baseline.trials = 1;
  baseline.master_seed = seed;
  const TrialResult base_trial = run_trial(baseline, 0);
  const double base_expected =
      -(1.0 - alpha) * static_cast<double>(baseline.params.proposer_deposit);
  const bool base_ok =
      std::abs(static_cast<double>(base_trial.proposer_net) - base_expected) <= 1.0;
  detail << "baseline loss=" << fmt(-to_tokens(base_trial.proposer_net))
         << " expect=" << fmt((1.0 - alpha) * 100.0) << "; ";

  ScenarioConfig escrowed = baseline;
  escrowed.scenario = Scenario::Escrow;
  const TrialResult escrow_trial = run_trial(escrowed, 0);
  const Amount full_penalty =
      escrowed.params.proposer_deposit + escrowed.params.dispute_collateral;
  const bool escrow_ok = escrow_trial.proposer_net == -full_penalty &&
                         escrow_trial.winner &&
                         *escrow_trial.winner == 2;  // the honest validator
  detail << "escrow loss=" << fmt(-to_tokens(escrow_trial.proposer_net))
         << " expect=" << fmt(to_tokens(full_penalty)) << " winner="
         << (escrow_trial.winner ? std::to_string(*escrow_trial.winner) : "-")
         << "; ";

  // Permutation invariance: six challengers, random finalization orders.
  ProtocolParams params = standard_params(alpha);
  Ledger staged(params);
  staged.create_account(1, 2000 * kUnitsPerToken);
  const std::vector<AccountId> challengers = {2, 3, 4, 5, 6, 7};
  for (AccountId id : challengers) staged.create_account(id, 500 * kUnitsPerToken);
  const BlockId block = staged.propose_block(1, true);
  staged.attach_escrow(block, 0, 40);
  std::vector<ContractId> game_ids;
  for (AccountId id : challengers) {
    staged.advance_block();
    game_ids.push_back(staged.open_dispute(id, block));
  }

  Rng rng(seed + 6);
  int winner_changes = 0;
  for (int p = 0; p < 1000; ++p) {
    Ledger replay = staged;
    std::vector<ContractId> order = game_ids;
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.next_below(i)]);
    for (ContractId id : order)
      replay.finalize_dispute(id, GroundTruth::BlockInvalid);
    std::uint64_t guard = 0;
    const ContractId escrow_id = *replay.blocks().at(block).escrow_contract;
    while (!replay.escrows().at(escrow_id).paid && ++guard < 200)
      replay.advance_block();
    const auto paid_to = replay.escrows().at(escrow_id).paid_to;
    if (!paid_to || *paid_to != challengers.front()) ++winner_changes;
  }
  detail << "1000 finalization permutations, " << winner_changes
         << " winner changes";

  result.pass = base_ok && escrow_ok && winner_changes == 0;
  result.detail = detail.str();
  return result;
}

// Criterion 7: commitment binding, attacker inference at chance level under
// commit-reveal, perfect copying in the plaintext baseline.
CriterionResult check_commit_reveal_defense(std::uint64_t seed) {
  CriterionResult result{"commit-reveal defense", true, ""};
  std::ostringstream detail;

  // (a) any mutated reveal is rejected
  ProtocolParams params = standard_params(1.0);
  Ledger ledger(params);
  ledger.create_account(1, 2000 * kUnitsPerToken);
  const BlockId block = ledger.propose_block(1, true);
  const ContractId cr =
      ledger.attach_commit_reveal(block, 1, 1'000'000'000ULL);
  Rng rng(seed + 7);
  int binding_failures = 0;
  const int tuples = 10'000;
  struct Tuple {
    AccountId validator;
    Decision decision;
    std::uint64_t block_number;
    Hash32 nonce;
  };
  std::vector<Tuple> committed;
  committed.reserve(tuples);
  for (int i = 0; i < tuples; ++i) {
    Tuple t;
    t.validator = 10'000 + 2 * static_cast<AccountId>(i);
    t.decision = rng.bernoulli(0.5) ? Decision::Challenge : Decision::NoChallenge;
    t.block_number = rng.next_u64() >> 16;
    t.nonce = rng.next_bytes32();
    ledger.commit(cr, t.validator,
                  commit_digest(t.decision, t.block_number, t.nonce, t.validator));
    committed.push_back(t);
  }
  ledger.advance_block();  // into the reveal window
  for (const Tuple& t : committed) {
    const Decision flipped = t.decision == Decision::Challenge
                                 ? Decision::NoChallenge
                                 : Decision::Challenge;
    Hash32 bad_nonce = t.nonce;
    bad_nonce[static_cast<std::size_t>(rng.next_below(32))] ^= 0x01;

    auto rejected = [&](auto&& call) {
      try {
        call();
        return false;
      } catch (const Error&) {
        return true;
      }
    };
    bool ok = true;
    ok &= rejected([&] { ledger.reveal(cr, t.validator, flipped, t.block_number, t.nonce); });
    ok &= rejected([&] { ledger.reveal(cr, t.validator, t.decision, t.block_number + 1, t.nonce); });
    ok &= rejected([&] { ledger.reveal(cr, t.validator, t.decision, t.block_number, bad_nonce); });
    ok &= rejected([&] { ledger.reveal(cr, t.validator + 1, t.decision, t.block_number, t.nonce); });
    try {
      ledger.reveal(cr, t.validator, t.decision, t.block_number, t.nonce);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) ++binding_failures;
  }
  detail << tuples << " tuples, " << binding_failures << " binding failures; ";

  // (b) inference accuracy from commitment hashes is chance level
  ScenarioConfig hidden;
  hidden.scenario = Scenario::CommitReveal;
  hidden.params = standard_params(1.0);
  hidden.n_validators = 1;
  hidden.trials = 10'000;
  hidden.master_seed = seed + 70;
  hidden.invalid_block_prob = 0.5;
  hidden.attackers = {AttackerKind::FollowTheLeader};
  hidden.threads = 0;
  const MonteCarloResult mc = run_monte_carlo(hidden);
  double accuracy = -1.0;
  for (const AggregateStats& stats : mc.stats)
    if (stats.metric == "attacker_guess_correct") accuracy = stats.mean;
  const bool accuracy_ok = accuracy >= 0.45 && accuracy <= 0.55;
  detail << "inference accuracy=" << fmt(accuracy) << "; ";

  // (c) plaintext baseline: the attacker copies every honest challenge
  ScenarioConfig plain;
  plain.scenario = Scenario::BaselineNoDefense;
  plain.params = standard_params(1.0);
  plain.n_validators = 2;
  plain.trials = 100;
  plain.master_seed = seed + 71;
  plain.invalid_block_prob = 1.0;
  plain.attackers = {AttackerKind::FollowTheLeader};
  const MonteCarloResult plain_mc = run_monte_carlo(plain);
  double copy_rate = -1.0;
  for (const AggregateStats& stats : plain_mc.stats)
    if (stats.metric == "attacker_copied") copy_rate = stats.mean;
  detail << "plaintext copy rate=" << fmt(copy_rate);

  result.pass = binding_failures == 0 && accuracy_ok && copy_rate == 1.0;
  result.detail = detail.str();
  return result;
}

// Criterion 8: identical bytes run-to-run, identical results serial vs parallel.
CriterionResult check_determinism(std::uint64_t seed) {
  CriterionResult result{"determinism and parallel agreement", true, ""};
  ScenarioConfig config;
  config.scenario = Scenario::Scenario2;
  config.params = standard_params(1.0);
  config.n_validators = 9;
  config.initial_challengers = 2;
  config.trials = 500;
  config.master_seed = seed + 8;
  config.threads = 1;

  const MonteCarloResult first = run_monte_carlo(config);
  const MonteCarloResult second = run_monte_carlo(config);
  ScenarioConfig parallel = config;
  parallel.threads = 4;
  const MonteCarloResult third = run_monte_carlo(parallel);

  const std::string csv1 = format_trial_csv(first.rows);
  const std::string csv2 = format_trial_csv(second.rows);
  const std::string csv3 = format_trial_csv(third.rows);
  const std::string man1 = format_manifest(config, first, "trials.csv");
  const std::string man2 = format_manifest(config, second, "trials.csv");
  const std::string man3 = format_manifest(parallel, third, "trials.csv");

  const bool rerun_ok = csv1 == csv2 && man1 == man2;
  const bool parallel_ok = csv1 == csv3 && man1 == man3;
  result.pass = rerun_ok && parallel_ok;
  result.detail = std::string("rerun byte-identical=") +
                  (rerun_ok ? "yes" : "no") + ", serial==parallel=" +
                  (parallel_ok ? "yes" : "no");
  return result;
}

std::vector<CriterionResult> run_suite(const std::string& suite,
                                       std::uint64_t seed) {
  if (suite == "theorem1") return {check_theorem1(seed)};
  if (suite == "corollary2") return {check_corollary2(seed)};
  if (suite == "scenarios")
    return {check_scenario1_accounting(seed), check_entry_equilibrium(seed),
            check_conservation(seed), check_determinism(seed)};
  if (suite == "defenses")
    return {check_escrow_defense(seed), check_commit_reveal_defense(seed)};
  throw Error(Errc::invalid_argument, "unknown suite \"" + suite + "\"");
}

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed) {
  return {check_theorem1(seed),
          check_corollary2(seed),
          check_scenario1_accounting(seed),
          check_entry_equilibrium(seed),
          check_conservation(seed),
          check_escrow_defense(seed),
          check_commit_reveal_defense(seed),
          check_determinism(seed)};
}

}  // namespace dsim
