// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsim/agents.hpp"

#include <algorithm>

namespace dsim {

namespace {

// First invalid block proposed by `proposer`, if any.
const ProposedBlock* own_invalid_block(const Ledger& ledger, AccountId proposer) {
  for (const auto& [id, block] : ledger.blocks()) {
    if (block.proposer == proposer && block.invalid) return &block;
  }
  return nullptr;
}

const ProposedBlock* any_invalid_block(const Ledger& ledger) {
  for (const auto& [id, block] : ledger.blocks()) {
    if (block.invalid) return &block;
  }
  return nullptr;
}

bool has_external_challenge(const Ledger& ledger, BlockId block,
                            const std::vector<AccountId>& controlled) {
  for (const auto& [id, game] : ledger.games()) {
    if (game.block != block) continue;
    if (std::find(controlled.begin(), controlled.end(), game.challenger) ==
        controlled.end())
      return true;
  }
  return false;
}

bool has_controlled_challenge(const Ledger& ledger, BlockId block,
                              const std::vector<AccountId>& controlled) {
  for (const auto& [id, game] : ledger.games()) {
    if (game.block != block) continue;
    if (std::find(controlled.begin(), controlled.end(), game.challenger) !=
        controlled.end())
      return true;
  }
  return false;
}

bool auction_exists_for(const Ledger& ledger, BlockId block) {
  for (const auto& [id, contract] : ledger.auctions())
    if (contract.block == block) return true;
  return false;
}

const AuctionContract* open_auction(const Ledger& ledger) {
  for (const auto& [id, contract] : ledger.auctions()) {
    if (contract.phase == AuctionPhase::Bidding &&
        ledger.height() < contract.start + contract.duration)
      return &contract;
  }
  return nullptr;
}

// A pending challenge transaction from someone else, on any block.
const TxOpenDispute* pending_challenge_by_other(const Ledger& ledger,
                                                AccountId self) {
  for (const Tx& tx : ledger.mempool()) {
    if (const auto* challenge = std::get_if<TxOpenDispute>(&tx)) {
      if (challenge->challenger != self) return challenge;
    }
  }
  return nullptr;
}

const TxCommit* pending_commit_by_other(const Ledger& ledger, AccountId self) {
  for (const Tx& tx : ledger.mempool()) {
    if (const auto* commit = std::get_if<TxCommit>(&tx)) {
      if (commit->validator != self) return commit;
    }
  }
  return nullptr;
}

bool already_committed(const Ledger& ledger, ContractId contract,
                       AccountId validator) {
  auto it = ledger.commit_reveals().find(contract);
  return it != ledger.commit_reveals().end() &&
         it->second.commits.count(validator) != 0;
}

}  // namespace

Amount truthful_bid(double valuation, Amount reserve, Amount reward_units) {
  Amount bid = quantize_down(valuation);
  return std::clamp(bid, reserve, reward_units);
}

std::vector<ProposerIntent> proposer_act(const AgentStrategy& strategy,
                                         const Ledger& ledger,
                                         BlockNumber auction_duration) {
  std::vector<ProposerIntent> intents;
  const ProposedBlock* block = own_invalid_block(ledger, strategy.account);
  if (block == nullptr) return intents;

  if (strategy.proposer_scenario == 1) {
    if (has_external_challenge(ledger, block->id, strategy.controlled) &&
        !has_controlled_challenge(ledger, block->id, strategy.controlled) &&
        !strategy.controlled.empty()) {
      intents.push_back(IntentChallenge{strategy.controlled.front(), block->id});
    }
  } else {
    if (ledger.games_on(block->id) >= 1 &&
        !auction_exists_for(ledger, block->id)) {
      intents.push_back(IntentDeployAuction{block->id, auction_duration});
    }
  }
  return intents;
}

std::optional<ValidatorIntent> validator_act(const AgentStrategy& strategy,
                                             const Ledger& ledger,
                                             int observed_k, Rng& rng) {
  switch (strategy.kind) {
    case AgentKind::HonestValidator: {
      const ProposedBlock* block = any_invalid_block(ledger);
      if (block == nullptr) return std::nullopt;
      if (ledger.find_game(strategy.account, block->id) != nullptr)
        return std::nullopt;
      return ValidatorIntent{IntentChallenge{strategy.account, block->id}};
    }
    case AgentKind::AuctionBidder: {
      const AuctionContract* contract = open_auction(ledger);
      if (contract == nullptr) return std::nullopt;
      for (const Bid& bid : contract->bids)
        if (bid.bidder == strategy.account) return std::nullopt;
      const DisputeGame* game = ledger.find_game(strategy.account, contract->block);
      const bool member = game != nullptr && game->status == GameStatus::Open;
      if (!member &&
          !econ::marginal_entry_beneficial(ledger.params().valuation_dispersion,
                                           ledger.params().participation_cost,
                                           observed_k))
        return std::nullopt;
      const Amount reward_units = econ::reward_pot_units(ledger.params());
      const double valuation =
          auction::draw_valuation(rng, econ::reward_pot(ledger.params()),
                                  ledger.params().valuation_dispersion);
      return ValidatorIntent{IntentJoinAuction{
          contract->id, contract->block, !member, valuation,
          truthful_bid(valuation, contract->reserve, reward_units)}};
    }
    case AgentKind::FreeRider: {
      const ProposedBlock* block = any_invalid_block(ledger);
      if (block == nullptr) return std::nullopt;
      // Free riders only move when nobody else has paid the cost yet.
      if (ledger.games_on(block->id) > 0) return std::nullopt;
      for (const Tx& tx : ledger.mempool())
        if (std::holds_alternative<TxOpenDispute>(tx)) return std::nullopt;
      if (ledger.find_game(strategy.account, block->id) != nullptr)
        return std::nullopt;
      return ValidatorIntent{IntentChallenge{strategy.account, block->id}};
    }
    default:
      return std::nullopt;
  }
}

std::optional<IntentChallenge> frontrunner_act(const AgentStrategy& strategy,
                                               const Ledger& ledger) {
  if (!ledger.public_mempool()) return std::nullopt;
  const TxOpenDispute* victim = pending_challenge_by_other(ledger, strategy.account);
  if (victim == nullptr) return std::nullopt;
  if (ledger.find_game(strategy.account, victim->block) != nullptr)
    return std::nullopt;
  return IntentChallenge{strategy.account, victim->block};
}

std::optional<AttackerIntent> follow_leader_act(const AgentStrategy& strategy,
                                                const Ledger& ledger, Rng& rng) {
  // Commit-reveal regime: only commitment hashes are visible. A uniformly
  // random nonce makes the hash useless for decision inference, so the
  // attacker falls back to its prior.
  if (const TxCommit* observed = pending_commit_by_other(ledger, strategy.account)) {
    if (already_committed(ledger, observed->contract, strategy.account))
      return std::nullopt;
    const Decision guess = rng.bernoulli(strategy.challenge_prior)
                               ? Decision::Challenge
                               : Decision::NoChallenge;
    return AttackerIntent{IntentCommit{observed->contract, strategy.account, guess}};
  }
  // Plaintext regime: mimic any pending challenge in the same block.
  if (const TxOpenDispute* observed =
          pending_challenge_by_other(ledger, strategy.account)) {
    if (ledger.find_game(strategy.account, observed->block) != nullptr)
      return std::nullopt;
    return AttackerIntent{IntentChallenge{strategy.account, observed->block}};
  }
  return std::nullopt;
}

}  // namespace dsim
