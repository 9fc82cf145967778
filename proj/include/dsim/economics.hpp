// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include "dsim/money.hpp"

namespace dsim {

// Protocol constants of the simulated economy. Deposits are integer base
// units; the reward fraction, participation cost and valuation dispersion
// are real-valued (cost and dispersion in tokens).
struct ProtocolParams {
  Amount proposer_deposit = 100 * kUnitsPerToken;    // forfeitable stake
  Amount validator_deposit = 50 * kUnitsPerToken;    // participation right
  Amount dispute_collateral = 10 * kUnitsPerToken;   // posted per dispute
  Amount collateral_cap = 1000 * kUnitsPerToken;     // upper bound on the above
  double reward_fraction = 1.0;                      // share of stake paid out
  double participation_cost = 0.001;                 // tokens, per challenge/bid
  double valuation_dispersion = 1.0;                 // tokens, width of the
                                                     // valuation interval

  // Field-level violations; empty means the params are usable.
  std::vector<std::string> validate() const;
  bool valid() const { return validate().empty(); }
};

namespace econ {

struct OrderStats {
  double expected_max;
  double expected_second;
};

// Gross prize a winning challenger can claim, in tokens.
double reward_pot(const ProtocolParams& params);

// Same prize quantized to base units; the floor goes to the winner and the
// remainder of the stake split to the communal fund, so the sum is exact.
Amount reward_pot_units(const ProtocolParams& params);

// Expected largest and second-largest of n i.i.d. uniform draws on [0, mu].
OrderStats expected_order_stats(int n, double mu);

// Expected winner surplus in a second-price auction with n bidders whose
// valuations differ by at most mu: mu / (n + 1).
double expected_surplus(int n, double mu);

// Whether entering an n-bidder auction beats abstaining, at cost c.
// Strict: indifference at the boundary resolves to abstention.
bool participation_beneficial(double mu, double c, int n);

// Whether one more bidder joins when k are already in.
bool marginal_entry_beneficial(double mu, double c, int k);

// Fixed point of sequential entry starting from k0 participants: the
// smallest k >= k0 at which another entry is no longer beneficial.
int equilibrium_entrants(double mu, double c, int k0);

// Net cost to a proposer who wins its own dispute through a controlled
// validator: (1 - alpha) * D_P, in the same unit as dp.
double scenario1_cost(double alpha, double dp);

// Expected second-highest valuation among n uniform draws on [R - mu, R].
double expected_second_bid(double reward, double mu, int n);

// Expected net loss of a proposer who sells the winning-challenger slot in
// a second-price auction: (1 - alpha) * D_P + 2 mu / (n + 1).
double proposer_expected_net_loss(double alpha, double dp, double mu, int n);

}  // namespace econ
}  // namespace dsim
