// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace dsim {

const char* scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::Scenario1: return "scenario1";
    case Scenario::Scenario2: return "scenario2";
    case Scenario::Scenario3: return "scenario3";
    case Scenario::Escrow: return "escrow";
    case Scenario::CommitReveal: return "commit_reveal";
    case Scenario::BaselineNoDefense: return "baseline_no_defense";
  }
  return "?";
}

std::optional<Scenario> scenario_from_name(const std::string& name) {
  if (name == "scenario1") return Scenario::Scenario1;
  if (name == "scenario2") return Scenario::Scenario2;
  if (name == "scenario3") return Scenario::Scenario3;
  if (name == "escrow") return Scenario::Escrow;
  if (name == "commit_reveal") return Scenario::CommitReveal;
  if (name == "baseline_no_defense") return Scenario::BaselineNoDefense;
  return std::nullopt;
}

std::vector<std::string> ScenarioConfig::validate() const {
  std::vector<std::string> errors;
  for (const std::string& problem : params.validate())
    errors.push_back("params." + problem);
  if (trials < 1) errors.push_back("trials must be at least 1");
  if (n_validators < 1) errors.push_back("n_validators must be at least 1");
  if (initial_challengers < 1 || initial_challengers > n_validators)
    errors.push_back("initial_challengers out of [1, n_validators]");
  if ((scenario == Scenario::Scenario1 || scenario == Scenario::Escrow) &&
      n_validators < 2)
    errors.push_back("scenario needs at least 2 validators (honest + controlled)");
  if (scenario == Scenario::Scenario2 && initial_challengers < 2)
    errors.push_back("scenario2 needs at least 2 initial challengers");
  if (scenario == Scenario::Scenario3 && initial_challengers != 1)
    errors.push_back("scenario3 has exactly 1 initial challenger");
  if (auction_duration < 1) errors.push_back("auction_duration must be positive");
  if (dispute_window < 8) errors.push_back("dispute_window must be at least 8");
  if (invalid_block_prob < 0.0 || invalid_block_prob > 1.0)
    errors.push_back("invalid_block_prob out of [0,1]");
  if (attacker_prior < 0.0 || attacker_prior > 1.0)
    errors.push_back("attacker_prior out of [0,1]");
  if (threads < 0) errors.push_back("threads must be non-negative");
  return errors;
}

namespace {

constexpr AccountId kProposer = 1;
constexpr AccountId kFirstValidator = 2;
constexpr AccountId kFrontRunner = 900;
constexpr AccountId kFollowTheLeader = 901;

AgentStrategy make_strategy(AgentKind kind, AccountId account) {
  AgentStrategy strategy;
  strategy.kind = kind;
  strategy.account = account;
  return strategy;
}

bool has_attacker(const ScenarioConfig& config, AttackerKind kind) {
  return std::find(config.attackers.begin(), config.attackers.end(), kind) !=
         config.attackers.end();
}

std::vector<std::string> metric_names(const ScenarioConfig& config) {
  std::vector<std::string> names = {"entrants", "fund_delta_tokens",
                                    "proposer_loss", "proposer_loss_with_costs"};
  if (config.scenario == Scenario::Scenario2 ||
      config.scenario == Scenario::Scenario3) {
    names.push_back("auction_price_tokens");
    names.push_back("winner_surplus");
  }
  const bool ftl = has_attacker(config, AttackerKind::FollowTheLeader);
  if (config.scenario == Scenario::CommitReveal) {
    names.push_back("block_invalid");
    if (ftl) {
      names.push_back("attacker_challenged");
      names.push_back("attacker_guess_correct");
    }
  }
  if (ftl && (config.scenario == Scenario::Scenario1 ||
              config.scenario == Scenario::Escrow ||
              config.scenario == Scenario::BaselineNoDefense)) {
    names.push_back("attacker_copied");
  }
  if (has_attacker(config, AttackerKind::FrontRunner) &&
      (config.scenario == Scenario::Escrow ||
       config.scenario == Scenario::BaselineNoDefense)) {
    names.push_back("frontrunner_won_pool");
  }
  std::sort(names.begin(), names.end());
  return names;
}

// Per-trial working state shared by the scenario drivers.
struct TrialState {
  explicit TrialState(const ScenarioConfig& config, long trial_index)
      : ledger(config.params), rng(Rng::for_trial(config.master_seed,
                                                  static_cast<std::uint64_t>(trial_index))) {
    const ProtocolParams& p = config.params;
    const Amount reward = econ::reward_pot_units(p);
    const Amount validator_funding =
        p.validator_deposit + p.dispute_collateral + 2 * reward;
    const Amount proposer_funding =
        p.proposer_deposit + reward +
        (static_cast<Amount>(config.n_validators) + 4) * p.dispute_collateral +
        10 * kUnitsPerToken;

    ledger.set_public_mempool(config.public_mempool);
    ledger.create_account(kProposer, proposer_funding);
    for (int i = 0; i < config.n_validators; ++i) {
      const AccountId account = kFirstValidator + static_cast<AccountId>(i);
      validators.push_back(account);
      ledger.create_account(account, validator_funding);
    }
    if (has_attacker(config, AttackerKind::FrontRunner)) {
      frontrunner = kFrontRunner;
      ledger.create_account(kFrontRunner, validator_funding);
    }
    if (has_attacker(config, AttackerKind::FollowTheLeader)) {
      follower = kFollowTheLeader;
      ledger.create_account(kFollowTheLeader, validator_funding);
    }
    initial_balances = ledger.accounts();
    initial_supply = ledger.total_supply();
  }

  Amount delta(AccountId account) const {
    return ledger.balance(account) - initial_balances.at(account);
  }

  Ledger ledger;
  Rng rng;
  std::vector<AccountId> validators;
  std::optional<AccountId> frontrunner;
  std::optional<AccountId> follower;
  std::map<AccountId, Amount> initial_balances;
  Amount initial_supply = 0;
  std::set<AccountId> paid_cost;        // accounts charged c this trial
  std::vector<AccountId> coalition;     // proposer plus controlled accounts
  std::map<AccountId, double> valuation;  // bidders' private draws, tokens
};

// Applies a pending challenge either normally or ahead of the first pending
// challenge (MEV insertion).
void enqueue_challenge(TrialState& state, const IntentChallenge& intent,
                       bool frontrun) {
  Tx tx = TxOpenDispute{intent.challenger, intent.block};
  if (!frontrun) {
    state.ledger.submit_tx(std::move(tx));
    return;
  }
  const auto& pool = state.ledger.mempool();
  std::size_t position = pool.size();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (std::holds_alternative<TxOpenDispute>(pool[i])) {
      position = i;
      break;
    }
  }
  state.ledger.insert_tx_at(position, std::move(tx));
}

void charge_cost(TrialState& state, AccountId account) {
  state.paid_cost.insert(account);
}

// Finalizes every game on the block, a preferred game first, the rest in
// arrival order; models which bisection concludes first. Returns the
// challenger the reward was paid to, when it went to a challenger directly.
std::optional<AccountId> finalize_games(TrialState& state, BlockId block,
                                        std::optional<ContractId> first,
                                        GroundTruth truth) {
  std::vector<std::pair<std::uint64_t, ContractId>> order;
  for (const auto& [id, game] : state.ledger.games()) {
    if (game.block != block || game.status != GameStatus::Open) continue;
    if (first && id == *first) continue;
    order.emplace_back(game.sequence, id);
  }
  std::sort(order.begin(), order.end());
  std::optional<AccountId> recipient;
  auto settle = [&](ContractId id) {
    const AccountId challenger = state.ledger.games().at(id).challenger;
    const PayoutRecord record = state.ledger.finalize_dispute(id, truth);
    if (record.reward_to_challenger > 0) recipient = challenger;
  };
  if (first) settle(*first);
  for (const auto& [seq, id] : order) settle(id);
  return recipient;
}

void assert_settled(const TrialState& state) {
  if (state.ledger.total_supply() != state.initial_supply)
    throw std::logic_error("value conservation violated in trial");
  for (const auto& [id, amount] : state.ledger.accounts()) {
    if (id >= 1'000'000 && amount != 0)
      throw std::logic_error("contract account left funded at trial end");
  }
}

TrialResult finish(const ScenarioConfig& config, TrialState& state,
                   TrialResult result) {
  assert_settled(state);
  const double cost = config.params.participation_cost;

  result.fund_delta = state.delta(Ledger::kCommunalFund);

  Amount coalition_net = state.delta(kProposer);
  double coalition_costs = 0.0;
  for (AccountId member : state.coalition) {
    coalition_net += state.delta(member);
    if (state.paid_cost.count(member)) coalition_costs += cost;
  }
  result.proposer_net = coalition_net;
  result.proposer_net_with_costs = to_tokens(coalition_net) - coalition_costs;

  std::vector<AccountId> participants = state.validators;
  if (state.frontrunner) participants.push_back(*state.frontrunner);
  if (state.follower) participants.push_back(*state.follower);
  for (AccountId account : participants) {
    const Amount net = state.delta(account);
    result.agent_net[account] = net;
    double utility = to_tokens(net);
    if (state.paid_cost.count(account)) utility -= cost;
    // A bidder values winning at its private draw, not at the gross prize.
    if (result.winner && account == *result.winner &&
        state.valuation.count(account) && result.auction_price) {
      utility = state.valuation.at(account) -
                to_tokens(*result.auction_price) - cost;
    }
    result.agent_utility[account] = utility;
  }
  result.agent_net[kProposer] = state.delta(kProposer);

  result.metrics["entrants"] = static_cast<double>(result.entrants);
  result.metrics["fund_delta_tokens"] = to_tokens(result.fund_delta);
  result.metrics["proposer_loss"] = -to_tokens(result.proposer_net);
  result.metrics["proposer_loss_with_costs"] = -result.proposer_net_with_costs;
  return result;
}

// Scenario 1 / escrowed variant / undefended baseline. The honest validator
// challenges; with an active proposer a controlled validator counters one
// block later and its game concludes first.
TrialResult run_challenge_race(const ScenarioConfig& config, TrialState& state) {
  const bool escrow_rules = config.scenario == Scenario::Escrow;
  const bool proposer_active = config.scenario == Scenario::Scenario1 ||
                               config.scenario == Scenario::Escrow;
  const bool invalid = config.invalid_block_prob >= 1.0 ||
                       state.rng.bernoulli(config.invalid_block_prob);

  const BlockId block = state.ledger.propose_block(kProposer, invalid);
  std::optional<ContractId> escrow_id;
  if (escrow_rules)
    escrow_id = state.ledger.attach_escrow(block, 0, config.dispute_window);

  const AccountId honest = state.validators.front();
  AgentStrategy honest_strategy = make_strategy(AgentKind::HonestValidator, honest);
  AgentStrategy proposer_strategy =
      make_strategy(AgentKind::MaliciousProposer, kProposer);
  proposer_strategy.proposer_scenario = 1;
  if (proposer_active) {
    const AccountId controlled = state.validators.back();
    proposer_strategy.controlled = {controlled};
    state.coalition.push_back(controlled);
  }
  AgentStrategy front_strategy =
      make_strategy(AgentKind::FrontRunner, state.frontrunner.value_or(0));
  AgentStrategy follow_strategy =
      make_strategy(AgentKind::FollowTheLeader, state.follower.value_or(0));
  follow_strategy.challenge_prior = config.attacker_prior;

  std::optional<ContractId> controlled_game;
  for (int round = 0; round < 4; ++round) {
    for (const ProposerIntent& intent :
         proposer_act(proposer_strategy, state.ledger, config.auction_duration)) {
      const auto& challenge = std::get<IntentChallenge>(intent);
      state.ledger.submit_tx(TxOpenDispute{challenge.challenger, challenge.block});
      charge_cost(state, challenge.challenger);
    }
    if (auto intent = validator_act(honest_strategy, state.ledger, 0, state.rng)) {
      const auto& challenge = std::get<IntentChallenge>(*intent);
      enqueue_challenge(state, challenge, false);
      charge_cost(state, honest);
    }
    if (state.follower) {
      if (auto intent = follow_leader_act(follow_strategy, state.ledger, state.rng)) {
        enqueue_challenge(state, std::get<IntentChallenge>(*intent), false);
        charge_cost(state, *state.follower);
      }
    }
    if (state.frontrunner) {
      if (auto intent = frontrunner_act(front_strategy, state.ledger)) {
        enqueue_challenge(state, *intent, true);
        charge_cost(state, *state.frontrunner);
      }
    }
    state.ledger.advance_block();
    if (proposer_active && !controlled_game && !proposer_strategy.controlled.empty()) {
      if (const DisputeGame* game = state.ledger.find_game(
              proposer_strategy.controlled.front(), block))
        controlled_game = game->id;
    }
  }

  const GroundTruth truth =
      invalid ? GroundTruth::BlockInvalid : GroundTruth::BlockValid;
  std::optional<AccountId> recipient =
      finalize_games(state, block, controlled_game, truth);

  TrialResult result;
  result.entrants = state.ledger.games_on(block);

  if (escrow_rules) {
    // The pool releases once the window has passed and everything settled.
    std::uint64_t guard = 0;
    while (!state.ledger.escrows().at(*escrow_id).paid &&
           ++guard < 4 * config.dispute_window) {
      state.ledger.advance_block();
    }
    const EscrowContract& escrow = state.ledger.escrows().at(*escrow_id);
    if (!escrow.paid) throw std::logic_error("escrow never paid out");
    recipient = escrow.paid_to;
  }
  state.ledger.release_stake(block);
  result.winner = recipient;

  if (state.follower) {
    const DisputeGame* copy = state.ledger.find_game(*state.follower, block);
    result.metrics["attacker_copied"] = copy != nullptr ? 1.0 : 0.0;
  }
  if (state.frontrunner) {
    result.metrics["frontrunner_won_pool"] =
        (recipient && *recipient == *state.frontrunner) ? 1.0 : 0.0;
  }
  return finish(config, state, std::move(result));
}

// Scenarios 2 and 3: prior challenges exist, the proposer deploys the
// secondary auction, entry follows the marginal-benefit rule, truthful
// bidding, and the winner's dispute concludes first.
TrialResult run_auction_scenario(const ScenarioConfig& config, TrialState& state) {
  const BlockId block = state.ledger.propose_block(kProposer, true);
  const int k0 = config.initial_challengers;

  for (int i = 0; i < k0; ++i) {
    const AccountId challenger = state.validators[static_cast<std::size_t>(i)];
    state.ledger.submit_tx(TxOpenDispute{challenger, block});
    charge_cost(state, challenger);
  }
  state.ledger.advance_block();

  AgentStrategy proposer_strategy =
      make_strategy(AgentKind::MaliciousProposer, kProposer);
  proposer_strategy.proposer_scenario =
      config.scenario == Scenario::Scenario3 ? 3 : 2;
  std::optional<ContractId> auction_id;
  for (const ProposerIntent& intent :
       proposer_act(proposer_strategy, state.ledger, config.auction_duration)) {
    const auto& deploy = std::get<IntentDeployAuction>(intent);
    auction_id = state.ledger.auction_init(kProposer, deploy.block, deploy.duration);
  }
  if (!auction_id) throw std::logic_error("auction was not deployed");

  // Sequential entry: each validator decides as soon as the previous one has
  // acted, so the realized count is the fixed point of the entry rule.
  for (AccountId validator : state.validators) {
    AgentStrategy bidder = make_strategy(AgentKind::AuctionBidder, validator);
    const int observed_k = state.ledger.open_games_on(block);
    auto intent = validator_act(bidder, state.ledger, observed_k, state.rng);
    if (!intent) continue;
    const auto& join = std::get<IntentJoinAuction>(*intent);
    if (join.open_dispute_first) {
      state.ledger.open_dispute(validator, block);
      charge_cost(state, validator);
    }
    state.ledger.auction_submit_bid(*auction_id, validator, join.bid);
    state.valuation[validator] = join.valuation;
  }

  while (state.ledger.auctions().at(*auction_id).phase == AuctionPhase::Bidding)
    state.ledger.advance_block();

  const AuctionContract& auction = state.ledger.auctions().at(*auction_id);
  TrialResult result;
  result.entrants = static_cast<int>(auction.bids.size());
  if (auction.winner) {
    result.winner = auction.winner;
    result.auction_price = auction.price;
    result.metrics["auction_price_tokens"] = to_tokens(auction.price);
    result.metrics["winner_surplus"] =
        to_tokens(auction.winning_bid - auction.price);

    const DisputeGame* winner_game =
        state.ledger.find_game(*auction.winner, block);
    finalize_games(state, block, winner_game->id, GroundTruth::BlockInvalid);
    state.ledger.auction_resolve(*auction_id, /*winner_concluded_first=*/true);
  } else {
    result.metrics["auction_price_tokens"] = 0.0;
    result.metrics["winner_surplus"] = 0.0;
    finalize_games(state, block, std::nullopt, GroundTruth::BlockInvalid);
  }
  state.ledger.release_stake(block);
  return finish(config, state, std::move(result));
}

// Commit-reveal: decisions are hidden behind hash commitments; rewards are
// distributed by commit order once every revealed challenge settles.
TrialResult run_commit_reveal(const ScenarioConfig& config, TrialState& state) {
  const bool invalid = state.rng.bernoulli(config.invalid_block_prob);
  const BlockId block = state.ledger.propose_block(kProposer, invalid);
  state.ledger.attach_escrow(block, 0, config.dispute_window);
  const ContractId cr = state.ledger.attach_commit_reveal(block, 2, 4);

  struct PendingReveal {
    AccountId validator;
    Decision decision;
    Hash32 nonce;
  };
  std::vector<PendingReveal> reveals;

  const Decision honest_decision =
      invalid ? Decision::Challenge : Decision::NoChallenge;
  for (AccountId validator : state.validators) {
    const Hash32 nonce = state.rng.next_bytes32();
    state.ledger.submit_tx(TxCommit{
        cr, validator, commit_digest(honest_decision, block, nonce, validator)});
    reveals.push_back({validator, honest_decision, nonce});
    if (honest_decision == Decision::Challenge) charge_cost(state, validator);
  }

  TrialResult result;
  AgentStrategy follow_strategy =
      make_strategy(AgentKind::FollowTheLeader, state.follower.value_or(0));
  follow_strategy.challenge_prior = config.attacker_prior;
  if (state.follower) {
    if (auto intent = follow_leader_act(follow_strategy, state.ledger, state.rng)) {
      const auto& guess = std::get<IntentCommit>(*intent);
      const Hash32 nonce = state.rng.next_bytes32();
      state.ledger.submit_tx(TxCommit{
          cr, guess.validator,
          commit_digest(guess.decision, block, nonce, guess.validator)});
      reveals.push_back({guess.validator, guess.decision, nonce});
      result.metrics["attacker_challenged"] =
          guess.decision == Decision::Challenge ? 1.0 : 0.0;
      result.metrics["attacker_guess_correct"] =
          guess.decision == honest_decision ? 1.0 : 0.0;
      if (guess.decision == Decision::Challenge)
        charge_cost(state, *state.follower);
    } else {
      result.metrics["attacker_challenged"] = 0.0;
      result.metrics["attacker_guess_correct"] = 0.0;
    }
  }

  state.ledger.advance_block();  // h=1: commits land
  state.ledger.advance_block();  // h=2: commit window closes
  for (const PendingReveal& pending : reveals) {
    state.ledger.submit_tx(
        TxReveal{cr, pending.validator, pending.decision, block, pending.nonce});
  }
  state.ledger.advance_block();  // h=3: reveals land
  state.ledger.advance_block();  // h=4: challenges processed in commit order

  const GroundTruth truth =
      invalid ? GroundTruth::BlockInvalid : GroundTruth::BlockValid;
  finalize_games(state, block, std::nullopt, truth);

  const ContractId escrow_id = *state.ledger.blocks().at(block).escrow_contract;
  std::uint64_t guard = 0;
  while (!state.ledger.escrows().at(escrow_id).paid &&
         ++guard < 4 * config.dispute_window) {
    state.ledger.advance_block();
  }
  if (!state.ledger.escrows().at(escrow_id).paid)
    throw std::logic_error("escrow never paid out");
  state.ledger.release_stake(block);

  result.entrants = state.ledger.games_on(block);
  result.winner = state.ledger.escrows().at(escrow_id).paid_to;
  result.metrics["block_invalid"] = invalid ? 1.0 : 0.0;
  return finish(config, state, std::move(result));
}

}  // namespace

TrialResult run_trial(const ScenarioConfig& config, long trial_index) {
  const auto problems = config.validate();
  if (!problems.empty())
    throw Error(Errc::invalid_argument, "bad config: " + problems.front());

  TrialState state(config, trial_index);
  TrialResult result;
  switch (config.scenario) {
    case Scenario::Scenario1:
    case Scenario::Escrow:
    case Scenario::BaselineNoDefense:
      result = run_challenge_race(config, state);
      break;
    case Scenario::Scenario2:
    case Scenario::Scenario3:
      result = run_auction_scenario(config, state);
      break;
    case Scenario::CommitReveal:
      result = run_commit_reveal(config, state);
      break;
  }
  result.trial = trial_index;
  return result;
}

AggregateStats aggregate_metric(const std::string& name,
                                const std::vector<double>& samples) {
  AggregateStats stats;
  stats.metric = name;
  stats.trials = static_cast<long>(samples.size());
  if (samples.empty()) return stats;
  double sum = 0;
  for (double x : samples) sum += x;
  stats.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0;
    for (double x : samples) ss += (x - stats.mean) * (x - stats.mean);
    stats.variance = ss / static_cast<double>(samples.size() - 1);
  }
  stats.std_error =
      std::sqrt(stats.variance / static_cast<double>(samples.size()));
  return stats;
}

MonteCarloResult run_monte_carlo(const ScenarioConfig& config) {
  const auto problems = config.validate();
  if (!problems.empty())
    throw Error(Errc::invalid_argument, "bad config: " + problems.front());

  const long trials = config.trials;
  const std::vector<std::string> names = metric_names(config);
  std::vector<std::vector<double>> samples(names.size());
  for (auto& column : samples)
    column.assign(static_cast<std::size_t>(trials), 0.0);
  std::vector<TrialRow> rows(static_cast<std::size_t>(trials));

  auto run_range = [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      TrialResult result = run_trial(config, i);
      TrialRow row;
      row.trial = i;
      row.scenario = config.scenario;
      row.proposer_net = result.proposer_net;
      row.winner = result.winner;
      row.entrants = result.entrants;
      row.auction_price = result.auction_price;
      row.fund_delta = result.fund_delta;
      rows[static_cast<std::size_t>(i)] = row;
      for (std::size_t m = 0; m < names.size(); ++m) {
        auto it = result.metrics.find(names[m]);
        samples[m][static_cast<std::size_t>(i)] =
            it != result.metrics.end() ? it->second : 0.0;
      }
    }
  };

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&](long begin, long end) {
    try {
      run_range(begin, end);
    } catch (...) {
      const std::lock_guard<std::mutex> hold(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  int thread_count = config.threads;
  if (thread_count == 0) {
    thread_count =
        static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  thread_count = static_cast<int>(
      std::min<long>(thread_count, trials));

  if (thread_count <= 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (trials + thread_count - 1) / thread_count;
    for (int t = 0; t < thread_count; ++t) {
      const long begin = t * chunk;
      const long end = std::min(trials, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (std::thread& thread : pool) thread.join();
    if (failure) std::rethrow_exception(failure);
  }

  MonteCarloResult result;
  result.rows = std::move(rows);
  for (std::size_t m = 0; m < names.size(); ++m)
    result.stats.push_back(aggregate_metric(names[m], samples[m]));
  return result;
}

VerifyReport verify_against_analytic(const AggregateStats& stats,
                                     double prediction,
                                     double tolerance_sigmas) {
  VerifyReport report;
  if (stats.std_error == 0.0) {
    if (stats.mean == prediction) {
      report.pass = true;
      report.z = 0.0;
      return report;
    }
    throw Error(Errc::degenerate_stats,
                "zero standard error with mean != prediction");
  }
  report.z = (stats.mean - prediction) / stats.std_error;
  report.pass = std::abs(report.z) <= tolerance_sigmas;
  return report;
}

std::optional<double> analytic_proposer_loss(const ScenarioConfig& config) {
  const double dp = to_tokens(config.params.proposer_deposit);
  const double dg = to_tokens(config.params.dispute_collateral);
  switch (config.scenario) {
    case Scenario::Scenario1:
      return econ::scenario1_cost(config.params.reward_fraction, dp);
    case Scenario::Scenario2:
    case Scenario::Scenario3:
      return econ::proposer_expected_net_loss(
          config.params.reward_fraction, dp, config.params.valuation_dispersion,
          predicted_entrants(config));
    case Scenario::Escrow:
      return dp + dg;
    case Scenario::BaselineNoDefense:
      return config.invalid_block_prob * (dp + dg);
    case Scenario::CommitReveal:
      return std::nullopt;
  }
  return std::nullopt;
}

int predicted_entrants(const ScenarioConfig& config) {
  if (config.scenario != Scenario::Scenario2 &&
      config.scenario != Scenario::Scenario3)
    return 0;
  const int equilibrium = econ::equilibrium_entrants(
      config.params.valuation_dispersion, config.params.participation_cost,
      config.initial_challengers);
  return std::min(equilibrium, config.n_validators);
}

}  // namespace dsim
