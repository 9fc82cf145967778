// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsim/auction.hpp"

#include "dsim/errors.hpp"

namespace dsim {
namespace auction {

AuctionOutcome resolve(std::span<const Bid> bids, Amount reserve) {
  if (bids.empty()) throw Error(Errc::empty_auction, "no bids to resolve");
  for (const Bid& bid : bids) {
    if (bid.amount < reserve)
      throw Error(Errc::bid_below_reserve,
                  "bid " + std::to_string(bid.amount) + " under reserve " +
                      std::to_string(reserve));
  }

  // Higher amount wins; on equal amounts the earlier sequence wins.
  auto beats = [](const Bid& a, const Bid& b) {
    if (a.amount != b.amount) return a.amount > b.amount;
    return a.sequence < b.sequence;
  };

  const Bid* best = &bids[0];
  const Bid* runner_up = nullptr;
  for (std::size_t i = 1; i < bids.size(); ++i) {
    const Bid* bid = &bids[i];
    if (beats(*bid, *best)) {
      runner_up = best;
      best = bid;
    } else if (runner_up == nullptr || beats(*bid, *runner_up)) {
      runner_up = bid;
    }
  }

  AuctionOutcome outcome;
  outcome.winner = best->bidder;
  outcome.winning_bid = best->amount;
  outcome.second_bid = runner_up != nullptr ? runner_up->amount : reserve;
  outcome.price = outcome.second_bid;
  return outcome;
}

double draw_valuation(Rng& rng, double reward, double dispersion) {
  return reward - dispersion * rng.next_unit();
}

}  // namespace auction
}  // namespace dsim
