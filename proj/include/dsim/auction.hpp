// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <span>

#include "dsim/money.hpp"
#include "dsim/rng.hpp"

namespace dsim {

using AccountId = std::uint64_t;

struct Bid {
  AccountId bidder = 0;
  Amount amount = 0;          // base units
  std::uint64_t sequence = 0; // submission order, unique per auction
};

struct AuctionOutcome {
  AccountId winner = 0;
  Amount price = 0;        // what the winner pays == second_bid
  Amount winning_bid = 0;  // b_max
  Amount second_bid = 0;   // b_second; the reserve when only one bid exists
};

namespace auction {

// Sealed-bid second-price resolution: the highest bid wins and pays the
// second-highest. Ties break toward the earliest sequence. A single bid
// pays the reserve. Pure function of its inputs.
//
// Throws Error(empty_auction) with no bids and Error(bid_below_reserve)
// when any bid is under the reserve.
AuctionOutcome resolve(std::span<const Bid> bids, Amount reserve);

// Private valuation of winning the dispute: uniform on [reward - dispersion,
// reward], in tokens. Deterministic for a fixed stream state.
double draw_valuation(Rng& rng, double reward, double dispersion);

}  // namespace auction
}  // namespace dsim
