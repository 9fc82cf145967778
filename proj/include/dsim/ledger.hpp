// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dsim/auction.hpp"
#include "dsim/commitment.hpp"
#include "dsim/economics.hpp"
#include "dsim/errors.hpp"
#include "dsim/money.hpp"

namespace dsim {

using BlockNumber = std::uint64_t;
using BlockId = std::uint64_t;
using ContractId = std::uint64_t;

enum class GameStatus { Open, ChallengerWon, ProposerWon };
enum class GroundTruth { BlockValid, BlockInvalid };
enum class AuctionPhase { Bidding, Finalized, Resolved };

const char* game_status_name(GameStatus status);

// One dispute game instance between a challenger and the block proposer.
// Both sides post the dispute collateral when the game opens; the game's
// own account holds it (challenger side may instead sit in an attached
// escrow contract, see `challenger_deposit_escrowed`).
struct DisputeGame {
  ContractId id = 0;  // doubles as the game's account id
  BlockId block = 0;
  AccountId challenger = 0;
  AccountId proposer = 0;
  BlockNumber created_at = 0;  // t_i
  std::uint64_t sequence = 0;  // global arrival order
  GameStatus status = GameStatus::Open;
  Amount escrow = 0;  // collateral held in the game account
  bool challenger_deposit_escrowed = false;
};

struct ProposedBlock {
  BlockId id = 0;
  AccountId proposer = 0;
  ContractId stake_account = 0;
  Amount stake = 0;   // remaining staked deposit
  bool invalid = false;  // ground truth used by scenario drivers
  bool reward_claimed = false;
  std::optional<ContractId> escrow_contract;  // reward distribution, if any
};

// Secondary auction selling the right to conclude the dispute first.
// Bids escrow their full amount; losers are refunded at finalization and
// the winner keeps `price` locked until the dispute resolves.
struct AuctionContract {
  ContractId id = 0;
  BlockId block = 0;
  AccountId operator_account = 0;  // the proposer who deployed it
  BlockNumber start = 0;
  BlockNumber duration = 0;  // bidding window in blocks
  Amount escrow = 0;         // operator deposit E, the promised reward
  Amount reserve = 0;
  std::vector<Bid> bids;
  AuctionPhase phase = AuctionPhase::Bidding;
  std::optional<AccountId> winner;
  Amount winning_bid = 0;
  Amount price = 0;   // b_second
  Amount locked = 0;  // winner funds still held
};

// Escrowed-reward contract: the challenge prize is locked when the first
// challenge arrives and released only after every dispute on the block is
// terminal, to the valid challenger that challenged earliest.
struct EscrowContract {
  ContractId id = 0;
  BlockId block = 0;
  BlockNumber dispute_start = 0;
  BlockNumber dispute_duration = 0;
  bool rewards_locked = false;
  Amount reward_pool = 0;    // promised amount, snapshotted at first challenge
  Amount pool_balance = 0;   // portion actually routed in from resolutions
  bool paid = false;
  std::optional<AccountId> paid_to;  // pool recipient once paid
  std::map<AccountId, Amount> challenger_deposits;  // cumulative bookkeeping
  std::map<AccountId, std::pair<BlockNumber, std::uint64_t>> challenge_order;
};

struct CommitEntry {
  Hash32 commit_hash{};
  bool revealed = false;
  Decision decision = Decision::NoChallenge;
  std::uint64_t block_number = 0;  // committed content, set at reveal
  BlockNumber commit_height = 0;
  std::uint64_t commit_sequence = 0;
};

struct CommitRevealContract {
  ContractId id = 0;
  BlockId block = 0;
  BlockNumber commit_deadline = 0;
  BlockNumber reveal_deadline = 0;
  bool processed = false;
  std::map<AccountId, CommitEntry> commits;
};

// Pending transactions. Challenges and commitments flow through the
// mempool so that reordering attackers can observe and act on them.
struct TxOpenDispute {
  AccountId challenger = 0;
  BlockId block = 0;
};
struct TxCommit {
  ContractId contract = 0;
  AccountId validator = 0;
  Hash32 commit_hash{};
};
struct TxReveal {
  ContractId contract = 0;
  AccountId validator = 0;
  Decision decision = Decision::NoChallenge;
  std::uint64_t block_number = 0;
  Hash32 nonce{};
};
using Tx = std::variant<TxOpenDispute, TxCommit, TxReveal>;

struct PayoutRecord {
  GameStatus status = GameStatus::Open;
  Amount challenger_refund = 0;
  Amount proposer_refund = 0;
  Amount reward_to_challenger = 0;
  Amount reward_to_pool = 0;
  Amount to_fund = 0;
  Amount forfeit_to_proposer = 0;
  bool reward_event = false;  // this resolution consumed the block stake
};

// The simulated chain: accounts, block clock, mempool and the contract
// state machines. Every unit of value lives in some account (participant,
// communal fund, game, stake or contract), so the total supply is bit-exact
// constant across all operations. Single-threaded by design; independent
// instances may run on different threads.
class Ledger {
 public:
  static constexpr AccountId kCommunalFund = 0;

  explicit Ledger(ProtocolParams params);

  const ProtocolParams& params() const { return params_; }

  // -- accounts ------------------------------------------------------------
  void create_account(AccountId account, Amount initial_balance);
  Amount balance(AccountId account) const;
  Amount total_supply() const;
  const std::map<AccountId, Amount>& accounts() const { return accounts_; }

  // -- clock and mempool ---------------------------------------------------
  BlockNumber height() const { return height_; }

  // Advances the clock one block: executes pending transactions in order,
  // then fires any deadline-triggered contract transitions. Invalid
  // transactions are dropped, never applied partially.
  void advance_block();

  void submit_tx(Tx tx);
  void insert_tx_at(std::size_t index, Tx tx);  // MEV-style reordering
  const std::vector<Tx>& mempool() const { return mempool_; }
  std::uint64_t dropped_tx_count() const { return dropped_txs_; }

  bool public_mempool() const { return public_mempool_; }
  void set_public_mempool(bool value) { public_mempool_ = value; }

  // -- blocks and dispute games ---------------------------------------------
  BlockId propose_block(AccountId proposer, bool invalid);

  // Returns remaining stake to the proposer once nothing disputes the block.
  void release_stake(BlockId block);

  ContractId open_dispute(AccountId challenger, BlockId block);
  PayoutRecord finalize_dispute(ContractId game_id, GroundTruth truth);

  // -- secondary auction ----------------------------------------------------
  ContractId auction_init(AccountId proposer, BlockId block, BlockNumber duration);
  void auction_submit_bid(ContractId auction_id, AccountId validator, Amount amount);
  // Empty auction: operator deposit refunded, contract resolved, nullopt.
  std::optional<AuctionOutcome> auction_finalize(ContractId auction_id);
  void auction_resolve(ContractId auction_id, bool winner_concluded_first);

  // -- escrowed reward -------------------------------------------------------
  ContractId attach_escrow(BlockId block, BlockNumber dispute_start,
                           BlockNumber dispute_duration);
  void escrow_initiate_challenge(ContractId escrow_id, AccountId challenger,
                                 Amount deposit);
  // Returns the selected winner; nullopt when no valid challenger exists
  // (any funded pool then falls to the communal fund).
  std::optional<AccountId> escrow_finalize(ContractId escrow_id);

  // -- commit-reveal ----------------------------------------------------------
  ContractId attach_commit_reveal(BlockId block, BlockNumber commit_deadline,
                                  BlockNumber reveal_deadline);
  void commit(ContractId cr_id, AccountId validator, const Hash32& commit_hash);
  void reveal(ContractId cr_id, AccountId validator, Decision decision,
              std::uint64_t block_number, const Hash32& nonce);
  // Opens a dispute game per revealed Challenge, in commit order. Challengers
  // that cannot fund the collateral are skipped.
  std::vector<ContractId> process_challenges(ContractId cr_id);

  // -- views -------------------------------------------------------------------
  const std::map<BlockId, ProposedBlock>& blocks() const { return blocks_; }
  const std::map<ContractId, DisputeGame>& games() const { return games_; }
  const std::map<ContractId, AuctionContract>& auctions() const { return auctions_; }
  const std::map<ContractId, EscrowContract>& escrows() const { return escrows_; }
  const std::map<ContractId, CommitRevealContract>& commit_reveals() const {
    return commit_reveals_;
  }
  const DisputeGame* find_game(AccountId challenger, BlockId block) const;
  int open_games_on(BlockId block) const;
  int games_on(BlockId block) const;
  bool all_games_terminal(BlockId block) const;

  // Canonical sorted-key text form of the full state, for replay checks.
  std::string snapshot() const;

 private:
  void transfer(AccountId from, AccountId to, Amount amount);
  Amount& account_ref(AccountId account);
  Amount account_at(AccountId account) const;
  ContractId new_contract_account();
  ProposedBlock& block_ref(BlockId block);
  void apply_tx(const Tx& tx);
  void fire_deadlines();
  Amount promised_reward(const ProposedBlock& block) const;

  ProtocolParams params_;
  BlockNumber height_ = 0;
  std::map<AccountId, Amount> accounts_;
  std::vector<Tx> mempool_;
  bool public_mempool_ = false;
  std::uint64_t dropped_txs_ = 0;
  std::uint64_t next_sequence_ = 1;
  ContractId next_contract_ = 1'000'000;
  BlockId next_block_ = 1;
  std::map<BlockId, ProposedBlock> blocks_;
  std::map<ContractId, DisputeGame> games_;
  std::map<ContractId, AuctionContract> auctions_;
  std::map<ContractId, EscrowContract> escrows_;
  std::map<ContractId, CommitRevealContract> commit_reveals_;
};

}  // namespace dsim
