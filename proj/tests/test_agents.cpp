// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsim/agents.hpp"

#include <doctest.h>

using namespace dsim;

namespace {

constexpr Amount T = kUnitsPerToken;

ProtocolParams agent_params(double cost = 0.1, double mu = 1.0) {
  ProtocolParams params;
  params.proposer_deposit = 100 * T;
  params.validator_deposit = 40 * T;
  params.dispute_collateral = 10 * T;
  params.collateral_cap = 1000 * T;
  params.reward_fraction = 1.0;
  params.participation_cost = cost;
  params.valuation_dispersion = mu;
  return params;
}

struct World {
  explicit World(double cost = 0.1, double mu = 1.0)
      : ledger(agent_params(cost, mu)) {
    ledger.create_account(1, 500 * T);
    for (AccountId v = 2; v <= 8; ++v) ledger.create_account(v, 300 * T);
    block = ledger.propose_block(1, true);
  }
  Ledger ledger;
  BlockId block = 0;
};

AgentStrategy strat(AgentKind kind, AccountId account) {
  AgentStrategy s;
  s.kind = kind;
  s.account = account;
  return s;
}

}  // namespace

TEST_SUITE("agents") {

TEST_CASE("scenario-1 proposer counters an external challenge once") {
  World w;
  AgentStrategy proposer = strat(AgentKind::MaliciousProposer, 1);
  proposer.proposer_scenario = 1;
  proposer.controlled = {8};

  CHECK(proposer_act(proposer, w.ledger, 3).empty());  // nothing to counter

  w.ledger.open_dispute(2, w.block);
  auto intents = proposer_act(proposer, w.ledger, 3);
  REQUIRE(intents.size() == 1);
  const auto& challenge = std::get<IntentChallenge>(intents.front());
  CHECK(challenge.challenger == 8);
  CHECK(challenge.block == w.block);

  w.ledger.open_dispute(8, w.block);
  CHECK(proposer_act(proposer, w.ledger, 3).empty());  // already countered
}

TEST_CASE("scenario-2/3 proposer deploys the auction after a challenge") {
  World w;
  AgentStrategy proposer = strat(AgentKind::MaliciousProposer, 1);
  proposer.proposer_scenario = 3;

  CHECK(proposer_act(proposer, w.ledger, 3).empty());
  w.ledger.open_dispute(2, w.block);
  auto intents = proposer_act(proposer, w.ledger, 3);
  REQUIRE(intents.size() == 1);
  const auto& deploy = std::get<IntentDeployAuction>(intents.front());
  CHECK(deploy.block == w.block);
  CHECK(deploy.duration == 3);

  w.ledger.auction_init(1, w.block, 3);
  CHECK(proposer_act(proposer, w.ledger, 3).empty());  // one auction only
}

TEST_CASE("honest validators challenge invalid blocks on sight") {
  World w;
  Rng rng(1);
  auto intent = validator_act(strat(AgentKind::HonestValidator, 2), w.ledger, 0, rng);
  REQUIRE(intent.has_value());
  CHECK(std::get<IntentChallenge>(*intent).block == w.block);

  w.ledger.open_dispute(2, w.block);
  CHECK_FALSE(
      validator_act(strat(AgentKind::HonestValidator, 2), w.ledger, 0, rng)
          .has_value());

  Ledger clean(agent_params());
  clean.create_account(1, 500 * T);
  clean.create_account(2, 300 * T);
  clean.propose_block(1, false);  // valid block: nothing to challenge
  CHECK_FALSE(validator_act(strat(AgentKind::HonestValidator, 2), clean, 0, rng)
                  .has_value());
}

TEST_CASE("bidders join while the marginal entry condition holds") {
  Rng rng(2);
  SUBCASE("mu = 10c with k = 3 joins") {
    World w(0.1, 1.0);  // mu/c = 10 > k + 2 = 5
    w.ledger.open_dispute(2, w.block);
    w.ledger.auction_init(1, w.block, 5);
    auto intent = validator_act(strat(AgentKind::AuctionBidder, 3), w.ledger, 3, rng);
    REQUIRE(intent.has_value());
    const auto& join = std::get<IntentJoinAuction>(*intent);
    CHECK(join.open_dispute_first);
    CHECK(join.bid >= 109 * T);
    CHECK(join.bid <= 110 * T);
    CHECK(join.bid == quantize_down(join.valuation));
  }
  SUBCASE("mu = 3c with k = 1 stays out (strict threshold)") {
    const double cost = 0.1;
    World w(cost, 3.0 * cost);
    w.ledger.open_dispute(2, w.block);
    w.ledger.auction_init(1, w.block, 5);
    CHECK_FALSE(
        validator_act(strat(AgentKind::AuctionBidder, 3), w.ledger, 1, rng)
            .has_value());
  }
  SUBCASE("existing challengers bid without re-entry checks") {
    World w(5.0, 1.0);  // entry is never beneficial at this cost
    w.ledger.open_dispute(2, w.block);
    w.ledger.auction_init(1, w.block, 5);
    auto intent = validator_act(strat(AgentKind::AuctionBidder, 2), w.ledger, 1, rng);
    REQUIRE(intent.has_value());
    CHECK_FALSE(std::get<IntentJoinAuction>(*intent).open_dispute_first);
  }
}

TEST_CASE("free riders abstain once someone has challenged") {
  World w;
  Rng rng(3);
  auto first = validator_act(strat(AgentKind::FreeRider, 3), w.ledger, 0, rng);
  CHECK(first.has_value());  // nobody has moved yet

  w.ledger.open_dispute(2, w.block);
  CHECK_FALSE(
      validator_act(strat(AgentKind::FreeRider, 3), w.ledger, 0, rng).has_value());
}

TEST_CASE("frontrunner reorders ahead of pending challenges") {
  World w;
  w.ledger.set_public_mempool(true);
  AgentStrategy front = strat(AgentKind::FrontRunner, 7);

  CHECK_FALSE(frontrunner_act(front, w.ledger).has_value());  // nothing pending
  w.ledger.submit_tx(TxOpenDispute{2, w.block});
  auto intent = frontrunner_act(front, w.ledger);
  REQUIRE(intent.has_value());
  CHECK(intent->challenger == 7);
  CHECK(intent->block == w.block);

  w.ledger.set_public_mempool(false);
  CHECK_FALSE(frontrunner_act(front, w.ledger).has_value());  // blind now
}

TEST_CASE("follow-the-leader copies plaintext challenges") {
  World w;
  Rng rng(4);
  AgentStrategy follower = strat(AgentKind::FollowTheLeader, 7);

  CHECK_FALSE(follow_leader_act(follower, w.ledger, rng).has_value());
  w.ledger.submit_tx(TxOpenDispute{2, w.block});
  auto intent = follow_leader_act(follower, w.ledger, rng);
  REQUIRE(intent.has_value());
  CHECK(std::get<IntentChallenge>(*intent).block == w.block);
}

TEST_CASE("follow-the-leader can only guess under commit-reveal") {
  World w;
  const ContractId cr = w.ledger.attach_commit_reveal(w.block, 4, 8);
  AgentStrategy follower = strat(AgentKind::FollowTheLeader, 7);

  Rng honest_rng(5);
  const Hash32 nonce = honest_rng.next_bytes32();
  w.ledger.submit_tx(
      TxCommit{cr, 2, commit_digest(Decision::Challenge, w.block, nonce, 2)});

  // the guess follows the configured prior, not the observed hash
  int challenges = 0;
  const int trials = 2000;
  Rng rng(6);
  for (int i = 0; i < trials; ++i) {
    auto intent = follow_leader_act(follower, w.ledger, rng);
    REQUIRE(intent.has_value());
    const auto& commit = std::get<IntentCommit>(*intent);
    CHECK(commit.contract == cr);
    if (commit.decision == Decision::Challenge) ++challenges;
  }
  const double rate = static_cast<double>(challenges) / trials;
  CHECK(rate > 0.45);
  CHECK(rate < 0.55);

  follower.challenge_prior = 0.0;
  auto timid = follow_leader_act(follower, w.ledger, rng);
  REQUIRE(timid.has_value());
  CHECK(std::get<IntentCommit>(*timid).decision == Decision::NoChallenge);

  // an attacker that never committed cannot reveal anything
  w.ledger.advance_block();
  for (int i = 0; i < 4; ++i) w.ledger.advance_block();  // into reveal window
  CHECK_THROWS_AS(
      w.ledger.reveal(cr, 7, Decision::Challenge, w.block, Hash32{}), Error);
}

TEST_CASE("truthful bids quantize down and respect the reserve") {
  CHECK(truthful_bid(109.4999999999, 109 * T, 110 * T) == 109499999999);
  CHECK(truthful_bid(108.0, 109 * T, 110 * T) == 109 * T);   // clamped up
  CHECK(truthful_bid(200.0, 109 * T, 110 * T) == 110 * T);   // clamped down
}

}  // TEST_SUITE
