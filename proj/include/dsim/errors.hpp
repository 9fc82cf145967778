// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dsim {

enum class Errc {
  // auction
  empty_auction,
  bid_below_reserve,
  // ledger / dispute game
  insufficient_balance,
  duplicate_challenge,
  already_finalized,
  unknown_dispute,
  no_existing_challenge,
  auction_closed,
  no_dispute_game,
  too_early,
  not_finalized,
  // escrowed reward
  window_closed,
  no_valid_challenger,
  // commit-reveal
  commit_window_closed,
  duplicate_commit,
  reveal_window_closed,
  hash_mismatch,
  no_commit,
  // generic
  unknown_account,
  unknown_contract,
  degenerate_stats,
  invalid_argument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace dsim
