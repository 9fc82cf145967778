// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsim/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dsim {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::empty_auction: return "EmptyAuction";
    case Errc::bid_below_reserve: return "BidBelowReserve";
    case Errc::insufficient_balance: return "InsufficientBalance";
    case Errc::duplicate_challenge: return "DuplicateChallenge";
    case Errc::already_finalized: return "AlreadyFinalized";
    case Errc::unknown_dispute: return "UnknownDispute";
    case Errc::no_existing_challenge: return "NoExistingChallenge";
    case Errc::auction_closed: return "AuctionClosed";
    case Errc::no_dispute_game: return "NoDisputeGame";
    case Errc::too_early: return "TooEarly";
    case Errc::not_finalized: return "NotFinalized";
    case Errc::window_closed: return "WindowClosed";
    case Errc::no_valid_challenger: return "NoValidChallenger";
    case Errc::commit_window_closed: return "CommitWindowClosed";
    case Errc::duplicate_commit: return "DuplicateCommit";
    case Errc::reveal_window_closed: return "RevealWindowClosed";
    case Errc::hash_mismatch: return "HashMismatch";
    case Errc::no_commit: return "NoCommit";
    case Errc::unknown_account: return "UnknownAccount";
    case Errc::unknown_contract: return "UnknownContract";
    case Errc::degenerate_stats: return "DegenerateStats";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

const char* game_status_name(GameStatus status) {
  switch (status) {
    case GameStatus::Open: return "Open";
    case GameStatus::ChallengerWon: return "ChallengerWon";
    case GameStatus::ProposerWon: return "ProposerWon";
  }
  return "?";
}

Ledger::Ledger(ProtocolParams params) : params_(std::move(params)) {
  const auto problems = params_.validate();
  if (!problems.empty())
    throw Error(Errc::invalid_argument, "bad protocol params: " + problems.front());
  accounts_[kCommunalFund] = 0;
}

// -- accounts ----------------------------------------------------------------

void Ledger::create_account(AccountId account, Amount initial_balance) {
  if (initial_balance < 0)
    throw Error(Errc::invalid_argument, "negative initial balance");
  if (accounts_.count(account) != 0)
    throw Error(Errc::invalid_argument, "account already exists");
  accounts_[account] = initial_balance;
}

Amount Ledger::balance(AccountId account) const { return account_at(account); }

Amount Ledger::total_supply() const {
  Amount total = 0;
  for (const auto& [id, amount] : accounts_) total += amount;
  return total;
}

Amount& Ledger::account_ref(AccountId account) {
  auto it = accounts_.find(account);
  if (it == accounts_.end())
    throw Error(Errc::unknown_account, "account " + std::to_string(account));
  return it->second;
}

Amount Ledger::account_at(AccountId account) const {
  auto it = accounts_.find(account);
  if (it == accounts_.end())
    throw Error(Errc::unknown_account, "account " + std::to_string(account));
  return it->second;
}

void Ledger::transfer(AccountId from, AccountId to, Amount amount) {
  if (amount < 0) throw Error(Errc::invalid_argument, "negative transfer");
  Amount& src = account_ref(from);
  Amount& dst = account_ref(to);
  if (src < amount)
    throw Error(Errc::insufficient_balance,
                "account " + std::to_string(from) + " has " +
                    std::to_string(src) + ", needs " + std::to_string(amount));
  src -= amount;
  dst += amount;
}

ContractId Ledger::new_contract_account() {
  const ContractId id = next_contract_++;
  accounts_[id] = 0;
  return id;
}

// -- clock and mempool ---------------------------------------------------------

void Ledger::submit_tx(Tx tx) { mempool_.push_back(std::move(tx)); }

void Ledger::insert_tx_at(std::size_t index, Tx tx) {
  index = std::min(index, mempool_.size());
  mempool_.insert(mempool_.begin() + static_cast<std::ptrdiff_t>(index),
                  std::move(tx));
}

void Ledger::apply_tx(const Tx& tx) {
  std::visit(
      [this](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, TxOpenDispute>) {
          open_dispute(t.challenger, t.block);
        } else if constexpr (std::is_same_v<T, TxCommit>) {
          commit(t.contract, t.validator, t.commit_hash);
        } else {
          reveal(t.contract, t.validator, t.decision, t.block_number, t.nonce);
        }
      },
      tx);
}

void Ledger::advance_block() {
  ++height_;
  std::vector<Tx> pending;
  pending.swap(mempool_);
  for (const Tx& tx : pending) {
    try {
      apply_tx(tx);
    } catch (const Error&) {
      ++dropped_txs_;  // invalid transactions fall out of the block
    }
  }
  fire_deadlines();
}

void Ledger::fire_deadlines() {
  for (auto& [id, contract] : auctions_) {
    if (contract.phase == AuctionPhase::Bidding &&
        height_ >= contract.start + contract.duration) {
      auction_finalize(id);
    }
  }
  for (auto& [id, contract] : commit_reveals_) {
    if (!contract.processed && height_ >= contract.reveal_deadline) {
      process_challenges(id);
    }
  }
  for (auto& [id, contract] : escrows_) {
    if (!contract.paid &&
        height_ >= contract.dispute_start + contract.dispute_duration &&
        all_games_terminal(contract.block)) {
      escrow_finalize(id);
    }
  }
}

// -- blocks and dispute games ----------------------------------------------------

ProposedBlock& Ledger::block_ref(BlockId block) {
  auto it = blocks_.find(block);
  if (it == blocks_.end())
    throw Error(Errc::unknown_dispute, "no block " + std::to_string(block));
  return it->second;
}

BlockId Ledger::propose_block(AccountId proposer, bool invalid) {
  if (account_at(proposer) < params_.proposer_deposit)
    throw Error(Errc::insufficient_balance, "cannot stake proposer deposit");
  const BlockId id = next_block_++;
  ProposedBlock block;
  block.id = id;
  block.proposer = proposer;
  block.stake_account = new_contract_account();
  block.invalid = invalid;
  transfer(proposer, block.stake_account, params_.proposer_deposit);
  block.stake = params_.proposer_deposit;
  blocks_[id] = block;
  return id;
}

void Ledger::release_stake(BlockId block_id) {
  ProposedBlock& block = block_ref(block_id);
  if (open_games_on(block_id) > 0)
    throw Error(Errc::too_early, "open disputes remain on the block");
  if (block.stake > 0) {
    transfer(block.stake_account, block.proposer, block.stake);
    block.stake = 0;
  }
}

const DisputeGame* Ledger::find_game(AccountId challenger, BlockId block) const {
  for (const auto& [id, game] : games_) {
    if (game.challenger == challenger && game.block == block) return &game;
  }
  return nullptr;
}

int Ledger::open_games_on(BlockId block) const {
  int n = 0;
  for (const auto& [id, game] : games_)
    if (game.block == block && game.status == GameStatus::Open) ++n;
  return n;
}

int Ledger::games_on(BlockId block) const {
  int n = 0;
  for (const auto& [id, game] : games_)
    if (game.block == block) ++n;
  return n;
}

bool Ledger::all_games_terminal(BlockId block) const {
  for (const auto& [id, game] : games_)
    if (game.block == block && game.status == GameStatus::Open) return false;
  return true;
}

Amount Ledger::promised_reward(const ProposedBlock& block) const {
  if (block.reward_claimed) return 0;
  const Amount stake_share = static_cast<Amount>(
      std::floor(params_.reward_fraction * static_cast<double>(block.stake)));
  return stake_share + params_.dispute_collateral;
}

ContractId Ledger::open_dispute(AccountId challenger, BlockId block_id) {
  ProposedBlock& block = block_ref(block_id);
  if (find_game(challenger, block_id) != nullptr)
    throw Error(Errc::duplicate_challenge,
                "challenger " + std::to_string(challenger) +
                    " already disputes block " + std::to_string(block_id));

  const Amount collateral = params_.dispute_collateral;
  if (account_at(challenger) < params_.validator_deposit + collateral)
    throw Error(Errc::insufficient_balance,
                "challenger cannot cover validator deposit plus collateral");
  if (account_at(block.proposer) < collateral)
    throw Error(Errc::insufficient_balance,
                "proposer cannot cover dispute collateral");

  EscrowContract* escrow = nullptr;
  if (block.escrow_contract) {
    escrow = &escrows_.at(*block.escrow_contract);
    if (height_ >= escrow->dispute_start + escrow->dispute_duration)
      throw Error(Errc::window_closed, "dispute window over");
  }

  DisputeGame game;
  game.id = new_contract_account();
  game.block = block_id;
  game.challenger = challenger;
  game.proposer = block.proposer;
  game.created_at = height_;
  game.sequence = next_sequence_++;

  if (escrow != nullptr) {
    // Challenger collateral is held by the escrow contract; record the
    // deposit, the arrival order and lock the promised reward.
    transfer(challenger, escrow->id, collateral);
    escrow->challenger_deposits[challenger] += collateral;
    escrow->challenge_order.emplace(challenger,
                                    std::make_pair(height_, game.sequence));
    if (!escrow->rewards_locked) {
      escrow->rewards_locked = true;
      escrow->reward_pool = promised_reward(block);
    }
    game.challenger_deposit_escrowed = true;
  } else {
    transfer(challenger, game.id, collateral);
  }
  transfer(block.proposer, game.id, collateral);
  game.escrow = accounts_.at(game.id);

  const ContractId id = game.id;
  games_[id] = game;
  return id;
}

PayoutRecord Ledger::finalize_dispute(ContractId game_id, GroundTruth truth) {
  auto it = games_.find(game_id);
  if (it == games_.end())
    throw Error(Errc::unknown_dispute, "no game " + std::to_string(game_id));
  DisputeGame& game = it->second;
  if (game.status != GameStatus::Open)
    throw Error(Errc::already_finalized, "game already terminal");

  ProposedBlock& block = block_ref(game.block);
  EscrowContract* escrow =
      block.escrow_contract ? &escrows_.at(*block.escrow_contract) : nullptr;
  const AccountId challenger_side =
      game.challenger_deposit_escrowed ? escrow->id : game.id;
  const Amount collateral = params_.dispute_collateral;

  PayoutRecord record;
  if (truth == GroundTruth::BlockInvalid) {
    game.status = GameStatus::ChallengerWon;
    record.status = game.status;
    transfer(challenger_side, game.challenger, collateral);
    record.challenger_refund = collateral;

    if (!block.reward_claimed) {
      // First conclusion on the block consumes the stake: the winner's share
      // plus the proposer's collateral form the reward, the rest of the
      // stake goes to the communal fund. The floor keeps the split exact.
      block.reward_claimed = true;
      record.reward_event = true;
      const Amount winner_share = static_cast<Amount>(std::floor(
          params_.reward_fraction * static_cast<double>(block.stake)));
      const Amount fund_share = block.stake - winner_share;
      transfer(block.stake_account, kCommunalFund, fund_share);
      record.to_fund = fund_share;
      if (escrow != nullptr) {
        transfer(block.stake_account, escrow->id, winner_share);
        transfer(game.id, escrow->id, collateral);
        escrow->pool_balance += winner_share + collateral;
        record.reward_to_pool = winner_share + collateral;
      } else {
        transfer(block.stake_account, game.challenger, winner_share);
        transfer(game.id, game.challenger, collateral);
        record.reward_to_challenger = winner_share + collateral;
      }
      block.stake = 0;
    } else {
      // The block was already decided; the game is moot and the proposer's
      // collateral comes back.
      transfer(game.id, game.proposer, collateral);
      record.proposer_refund = collateral;
    }
  } else {
    game.status = GameStatus::ProposerWon;
    record.status = game.status;
    transfer(challenger_side, game.proposer, collateral);
    record.forfeit_to_proposer = collateral;
    transfer(game.id, game.proposer, collateral);
    record.proposer_refund = collateral;
  }
  game.escrow = accounts_.at(game.id);
  return record;
}

// -- secondary auction -------------------------------------------------------------

ContractId Ledger::auction_init(AccountId proposer, BlockId block_id,
                                BlockNumber duration) {
  block_ref(block_id);
  if (games_on(block_id) == 0)
    throw Error(Errc::no_existing_challenge,
                "auction requires an existing challenge");
  const Amount promised = econ::reward_pot_units(params_);
  if (account_at(proposer) < promised)
    throw Error(Errc::insufficient_balance, "cannot escrow the promised reward");

  AuctionContract contract;
  contract.id = new_contract_account();
  contract.block = block_id;
  contract.operator_account = proposer;
  contract.start = height_;
  contract.duration = duration;
  contract.reserve =
      promised - tokens_to_units(params_.valuation_dispersion);
  transfer(proposer, contract.id, promised);
  contract.escrow = promised;
  const ContractId id = contract.id;
  auctions_[id] = contract;
  return id;
}

void Ledger::auction_submit_bid(ContractId auction_id, AccountId validator,
                                Amount amount) {
  auto it = auctions_.find(auction_id);
  if (it == auctions_.end())
    throw Error(Errc::unknown_contract, "no auction " + std::to_string(auction_id));
  AuctionContract& contract = it->second;
  if (contract.phase != AuctionPhase::Bidding ||
      height_ >= contract.start + contract.duration)
    throw Error(Errc::auction_closed, "bidding window over");
  const DisputeGame* game = find_game(validator, contract.block);
  if (game == nullptr || game->status != GameStatus::Open)
    throw Error(Errc::no_dispute_game,
                "bidder has no open dispute on the block");
  if (amount < contract.reserve)
    throw Error(Errc::bid_below_reserve, "bid under the reserve");
  transfer(validator, contract.id, amount);  // bid rides with its deposit
  contract.bids.push_back(Bid{validator, amount, next_sequence_++});
}

std::optional<AuctionOutcome> Ledger::auction_finalize(ContractId auction_id) {
  auto it = auctions_.find(auction_id);
  if (it == auctions_.end())
    throw Error(Errc::unknown_contract, "no auction " + std::to_string(auction_id));
  AuctionContract& contract = it->second;
  if (contract.phase != AuctionPhase::Bidding)
    throw Error(Errc::already_finalized, "auction already finalized");
  if (height_ < contract.start + contract.duration)
    throw Error(Errc::too_early, "bidding window still open");

  if (contract.bids.empty()) {
    // Nobody was induced to bid; the operator deposit comes back.
    transfer(contract.id, contract.operator_account, contract.escrow);
    contract.escrow = 0;
    contract.phase = AuctionPhase::Resolved;
    return std::nullopt;
  }

  const AuctionOutcome outcome =
      auction::resolve(contract.bids, contract.reserve);

  // Identify the winning bid (earliest top) and return everything except
  // the price, which stays locked until the dispute resolves.
  const Bid* winning_bid = nullptr;
  for (const Bid& bid : contract.bids) {
    if (bid.bidder == outcome.winner && bid.amount == outcome.winning_bid &&
        (winning_bid == nullptr || bid.sequence < winning_bid->sequence))
      winning_bid = &bid;
  }
  for (const Bid& bid : contract.bids) {
    if (&bid == winning_bid) {
      transfer(contract.id, bid.bidder, bid.amount - outcome.price);
    } else {
      transfer(contract.id, bid.bidder, bid.amount);
    }
  }

  contract.phase = AuctionPhase::Finalized;
  contract.winner = outcome.winner;
  contract.winning_bid = outcome.winning_bid;
  contract.price = outcome.price;
  contract.locked = outcome.price;
  return outcome;
}

void Ledger::auction_resolve(ContractId auction_id, bool winner_concluded_first) {
  auto it = auctions_.find(auction_id);
  if (it == auctions_.end())
    throw Error(Errc::unknown_contract, "no auction " + std::to_string(auction_id));
  AuctionContract& contract = it->second;
  if (contract.phase != AuctionPhase::Finalized)
    throw Error(Errc::not_finalized, "auction has no pending winner");
  const DisputeGame* game = find_game(*contract.winner, contract.block);
  if (game == nullptr || game->status == GameStatus::Open)
    throw Error(Errc::not_finalized, "winner's dispute is not terminal");

  if (winner_concluded_first) {
    // The contract delivered its guarantee: the winner pays the second
    // price to the operator, who also recovers the deposit.
    transfer(contract.id, contract.operator_account, contract.locked);
    transfer(contract.id, contract.operator_account, contract.escrow);
  } else {
    // Guarantee broken: the operator deposit is confiscated and the
    // winner's locked funds come back.
    transfer(contract.id, *contract.winner, contract.escrow);
    transfer(contract.id, *contract.winner, contract.locked);
  }
  contract.locked = 0;
  contract.escrow = 0;
  contract.phase = AuctionPhase::Resolved;
}

// -- escrowed reward -----------------------------------------------------------------

ContractId Ledger::attach_escrow(BlockId block_id, BlockNumber dispute_start,
                                 BlockNumber dispute_duration) {
  ProposedBlock& block = block_ref(block_id);
  if (block.escrow_contract)
    throw Error(Errc::invalid_argument, "block already has an escrow contract");
  EscrowContract contract;
  contract.id = new_contract_account();
  contract.block = block_id;
  contract.dispute_start = dispute_start;
  contract.dispute_duration = dispute_duration;
  const ContractId id = contract.id;
  escrows_[id] = contract;
  block.escrow_contract = id;
  return id;
}

void Ledger::escrow_initiate_challenge(ContractId escrow_id, AccountId challenger,
                                       Amount deposit) {
  auto it = escrows_.find(escrow_id);
  if (it == escrows_.end())
    throw Error(Errc::unknown_contract, "no escrow " + std::to_string(escrow_id));
  EscrowContract& contract = it->second;
  if (height_ >= contract.dispute_start + contract.dispute_duration)
    throw Error(Errc::window_closed, "dispute window over");
  if (deposit < 0) throw Error(Errc::invalid_argument, "negative deposit");
  transfer(challenger, contract.id, deposit);
  contract.challenger_deposits[challenger] += deposit;
  contract.challenge_order.emplace(challenger,
                                   std::make_pair(height_, next_sequence_++));
  if (!contract.rewards_locked) {
    contract.rewards_locked = true;
    contract.reward_pool = promised_reward(block_ref(contract.block));
  }
}

std::optional<AccountId> Ledger::escrow_finalize(ContractId escrow_id) {
  auto it = escrows_.find(escrow_id);
  if (it == escrows_.end())
    throw Error(Errc::unknown_contract, "no escrow " + std::to_string(escrow_id));
  EscrowContract& contract = it->second;
  if (contract.paid)
    throw Error(Errc::already_finalized, "escrow already paid out");
  if (height_ < contract.dispute_start + contract.dispute_duration)
    throw Error(Errc::too_early, "dispute window still open");
  if (!all_games_terminal(contract.block))
    throw Error(Errc::too_early, "disputes on the block are still open");

  // The winning challenger is the valid one that challenged earliest,
  // by (block, arrival sequence) of its first challenge.
  std::optional<AccountId> winner;
  std::pair<BlockNumber, std::uint64_t> best{};
  for (const auto& [challenger, order] : contract.challenge_order) {
    const DisputeGame* game = find_game(challenger, contract.block);
    if (game == nullptr || game->status != GameStatus::ChallengerWon) continue;
    if (!winner || order < best) {
      winner = challenger;
      best = order;
    }
  }

  contract.paid = true;
  contract.rewards_locked = false;
  contract.paid_to = winner;
  const Amount payout = contract.pool_balance;
  contract.pool_balance = 0;
  if (winner) {
    transfer(contract.id, *winner, payout);
  } else {
    transfer(contract.id, kCommunalFund, payout);
  }
  return winner;
}

// -- commit-reveal ----------------------------------------------------------------------

ContractId Ledger::attach_commit_reveal(BlockId block_id,
                                        BlockNumber commit_deadline,
                                        BlockNumber reveal_deadline) {
  block_ref(block_id);
  if (commit_deadline > reveal_deadline)
    throw Error(Errc::invalid_argument, "commit deadline after reveal deadline");
  CommitRevealContract contract;
  contract.id = new_contract_account();
  contract.block = block_id;
  contract.commit_deadline = commit_deadline;
  contract.reveal_deadline = reveal_deadline;
  const ContractId id = contract.id;
  commit_reveals_[id] = contract;
  return id;
}

void Ledger::commit(ContractId cr_id, AccountId validator,
                    const Hash32& commit_hash) {
  auto it = commit_reveals_.find(cr_id);
  if (it == commit_reveals_.end())
    throw Error(Errc::unknown_contract, "no commit-reveal " + std::to_string(cr_id));
  CommitRevealContract& contract = it->second;
  if (height_ >= contract.commit_deadline)
    throw Error(Errc::commit_window_closed, "commit window over");
  if (contract.commits.count(validator) != 0)
    throw Error(Errc::duplicate_commit, "one commit per validator per epoch");
  CommitEntry entry;
  entry.commit_hash = commit_hash;
  entry.commit_height = height_;
  entry.commit_sequence = next_sequence_++;
  contract.commits[validator] = entry;
}

void Ledger::reveal(ContractId cr_id, AccountId validator, Decision decision,
                    std::uint64_t block_number, const Hash32& nonce) {
  auto it = commit_reveals_.find(cr_id);
  if (it == commit_reveals_.end())
    throw Error(Errc::unknown_contract, "no commit-reveal " + std::to_string(cr_id));
  CommitRevealContract& contract = it->second;
  if (height_ < contract.commit_deadline || height_ >= contract.reveal_deadline)
    throw Error(Errc::reveal_window_closed, "outside the reveal window");
  auto entry_it = contract.commits.find(validator);
  if (entry_it == contract.commits.end())
    throw Error(Errc::no_commit, "validator never committed");
  CommitEntry& entry = entry_it->second;
  if (entry.revealed)
    throw Error(Errc::already_finalized, "commit already revealed");
  if (commit_digest(decision, block_number, nonce, validator) != entry.commit_hash)
    throw Error(Errc::hash_mismatch, "reveal does not match the commitment");
  entry.revealed = true;
  entry.decision = decision;
  entry.block_number = block_number;
}

std::vector<ContractId> Ledger::process_challenges(ContractId cr_id) {
  auto it = commit_reveals_.find(cr_id);
  if (it == commit_reveals_.end())
    throw Error(Errc::unknown_contract, "no commit-reveal " + std::to_string(cr_id));
  CommitRevealContract& contract = it->second;
  if (contract.processed)
    throw Error(Errc::already_finalized, "challenges already processed");
  if (height_ < contract.reveal_deadline)
    throw Error(Errc::too_early, "reveal window still open");
  contract.processed = true;

  // Revealed Challenge decisions open dispute games in commit order, so a
  // downstream escrow contract sees arrival order equal to commit order.
  std::vector<std::pair<std::pair<BlockNumber, std::uint64_t>, AccountId>> order;
  for (const auto& [validator, entry] : contract.commits) {
    if (entry.revealed && entry.decision == Decision::Challenge)
      order.emplace_back(std::make_pair(entry.commit_height, entry.commit_sequence),
                         validator);
  }
  std::sort(order.begin(), order.end());

  std::vector<ContractId> opened;
  for (const auto& [key, validator] : order) {
    try {
      opened.push_back(open_dispute(validator, contract.block));
    } catch (const Error&) {
      // unfunded or duplicate challengers are skipped
    }
  }
  return opened;
}

// -- snapshot ------------------------------------------------------------------------------

std::string Ledger::snapshot() const {
  std::ostringstream out;
  out << "ledger height=" << height_ << " supply=" << total_supply()
      << " dropped_txs=" << dropped_txs_ << "\n";
  for (const auto& [id, amount] : accounts_)
    out << "account " << id << " balance=" << amount << "\n";
  for (const auto& [id, block] : blocks_) {
    out << "block " << id << " proposer=" << block.proposer
        << " stake=" << block.stake << " invalid=" << block.invalid
        << " reward_claimed=" << block.reward_claimed << " escrow="
        << (block.escrow_contract ? std::to_string(*block.escrow_contract) : "-")
        << "\n";
  }
  for (const auto& [id, game] : games_) {
    out << "game " << id << " block=" << game.block
        << " challenger=" << game.challenger << " proposer=" << game.proposer
        << " t=" << game.created_at << " seq=" << game.sequence
        << " status=" << game_status_name(game.status)
        << " escrow=" << game.escrow << "\n";
  }
  for (const auto& [id, contract] : auctions_) {
    out << "auction " << id << " block=" << contract.block
        << " phase=" << static_cast<int>(contract.phase)
        << " start=" << contract.start << " duration=" << contract.duration
        << " escrow=" << contract.escrow << " reserve=" << contract.reserve
        << " price=" << contract.price << " locked=" << contract.locked
        << " winner="
        << (contract.winner ? std::to_string(*contract.winner) : "-")
        << " bids=[";
    for (const Bid& bid : contract.bids)
      out << "(" << bid.bidder << "," << bid.amount << "," << bid.sequence << ")";
    out << "]\n";
  }
  for (const auto& [id, contract] : escrows_) {
    out << "escrow " << id << " block=" << contract.block
        << " start=" << contract.dispute_start
        << " duration=" << contract.dispute_duration
        << " locked=" << contract.rewards_locked
        << " pool=" << contract.reward_pool
        << " funded=" << contract.pool_balance << " paid=" << contract.paid
        << " deposits={";
    for (const auto& [who, amount] : contract.challenger_deposits)
      out << who << ":" << amount << ",";
    out << "} order={";
    for (const auto& [who, order] : contract.challenge_order)
      out << who << ":(" << order.first << "," << order.second << "),";
    out << "}\n";
  }
  for (const auto& [id, contract] : commit_reveals_) {
    out << "commit_reveal " << id << " block=" << contract.block
        << " commit_deadline=" << contract.commit_deadline
        << " reveal_deadline=" << contract.reveal_deadline
        << " processed=" << contract.processed << " commits={";
    for (const auto& [who, entry] : contract.commits) {
      out << who << ":(" << to_hex(entry.commit_hash).substr(0, 16) << ","
          << entry.revealed << "," << static_cast<int>(entry.decision) << ","
          << entry.block_number << "," << entry.commit_height << ","
          << entry.commit_sequence << "),";
    }
    out << "}\n";
  }
  out << "mempool size=" << mempool_.size() << "\n";
  return out.str();
}

}  // namespace dsim
