// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "dsim/ledger.hpp"
#include "dsim/rng.hpp"

namespace dsim {

enum class AgentKind {
  HonestValidator,
  ControlledValidator,
  AuctionBidder,
  FreeRider,
  FrontRunner,
  FollowTheLeader,
  MaliciousProposer,
};

// Behavioral policy of one actor. Agents are pure decision functions over a
// ledger view plus a private random stream; every mutation they cause flows
// through ledger operations applied by the scenario driver in a fixed round
// order (proposer, then validators by id, then attackers).
struct AgentStrategy {
  AgentKind kind = AgentKind::HonestValidator;
  AccountId account = 0;
  int proposer_scenario = 1;                // MaliciousProposer: 1, 2 or 3
  std::vector<AccountId> controlled;        // MaliciousProposer: V_P accounts
  AccountId principal = 0;                  // ControlledValidator: its proposer
  double challenge_prior = 0.5;             // FollowTheLeader commit guess
};

// What agents want done; drivers turn intents into ledger transactions.
struct IntentChallenge {
  AccountId challenger = 0;
  BlockId block = 0;
};
struct IntentDeployAuction {
  BlockId block = 0;
  BlockNumber duration = 0;
};
struct IntentJoinAuction {
  ContractId auction = 0;
  BlockId block = 0;
  bool open_dispute_first = false;
  double valuation = 0.0;  // tokens
  Amount bid = 0;          // quantized, clamped to the reserve
};
struct IntentCommit {
  ContractId contract = 0;
  AccountId validator = 0;
  Decision decision = Decision::NoChallenge;
};

using ProposerIntent = std::variant<IntentChallenge, IntentDeployAuction>;
using ValidatorIntent = std::variant<IntentChallenge, IntentJoinAuction>;
using AttackerIntent = std::variant<IntentChallenge, IntentCommit>;

// Malicious proposer policy. Scenario 1: counter an external challenge with
// a controlled validator and race its finalization. Scenarios 2 and 3:
// deploy the secondary auction once at least one challenge exists.
std::vector<ProposerIntent> proposer_act(const AgentStrategy& strategy,
                                         const Ledger& ledger,
                                         BlockNumber auction_duration);

// Honest validators challenge invalid blocks on sight. Auction bidders join
// an open auction if and only if one more entrant is still profitable given
// `observed_k` current participants, bidding their truthful valuation.
// Free riders never pay the participation cost once a challenge exists.
std::optional<ValidatorIntent> validator_act(const AgentStrategy& strategy,
                                             const Ledger& ledger,
                                             int observed_k, Rng& rng);

// Watches a public mempool for pending challenges and jumps ahead of them.
// Inert when the mempool is private. The driver inserts the returned
// challenge before the victim transaction.
std::optional<IntentChallenge> frontrunner_act(const AgentStrategy& strategy,
                                               const Ledger& ledger);

// Copies observed plaintext challenges immediately. Under commit-reveal it
// sees only commitment hashes, which carry no decision signal, so its
// "inference" degrades to a draw from its configured prior.
std::optional<AttackerIntent> follow_leader_act(const AgentStrategy& strategy,
                                                const Ledger& ledger, Rng& rng);

// Truthful bid for a valuation drawn on [reward - dispersion, reward]:
// quantized down to base units and clamped to the auction reserve.
Amount truthful_bid(double valuation, Amount reserve, Amount reward_units);

}  // namespace dsim
