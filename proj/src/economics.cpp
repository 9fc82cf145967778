// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsim/economics.hpp"

#include <cmath>
#include <stdexcept>

namespace dsim {

std::vector<std::string> ProtocolParams::validate() const {
  std::vector<std::string> errors;
  if (proposer_deposit <= 0) errors.push_back("proposer_deposit must be positive");
  if (validator_deposit <= 0) errors.push_back("validator_deposit must be positive");
  if (dispute_collateral <= 0 || dispute_collateral >= collateral_cap)
    errors.push_back("dispute_collateral out of (0, collateral_cap)");
  if (!(reward_fraction > 0.0) || reward_fraction > 1.0)
    errors.push_back("reward_fraction out of (0,1]");
  if (!(participation_cost > 0.0))
    errors.push_back("participation_cost must be positive");
  if (!(valuation_dispersion > 0.0))
    errors.push_back("valuation_dispersion must be positive");
  else if (proposer_deposit > 0 && reward_fraction > 0.0 &&
           valuation_dispersion >
               reward_fraction * to_tokens(proposer_deposit) +
                   to_tokens(dispute_collateral) + 1e-12)
    errors.push_back("valuation_dispersion exceeds the reward pot");
  return errors;
}

namespace econ {

namespace {

void require_bidders(int n) {
  if (n < 1) throw std::invalid_argument("bidder count must be at least 1");
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

double reward_pot(const ProtocolParams& params) {
  return params.reward_fraction * to_tokens(params.proposer_deposit) +
         to_tokens(params.dispute_collateral);
}

Amount reward_pot_units(const ProtocolParams& params) {
  const double stake_share =
      params.reward_fraction * static_cast<double>(params.proposer_deposit);
  return static_cast<Amount>(std::floor(stake_share)) + params.dispute_collateral;
}

OrderStats expected_order_stats(int n, double mu) {
  require_bidders(n);
  require_positive(mu, "dispersion");
  const double dn = static_cast<double>(n);
  return {dn / (dn + 1.0) * mu, (dn - 1.0) / (dn + 1.0) * mu};
}

double expected_surplus(int n, double mu) {
  require_bidders(n);
  require_positive(mu, "dispersion");
  return mu / (static_cast<double>(n) + 1.0);
}

bool participation_beneficial(double mu, double c, int n) {
  require_bidders(n);
  return mu > c * (static_cast<double>(n) + 1.0);
}

bool marginal_entry_beneficial(double mu, double c, int k) {
  if (k < 1) throw std::invalid_argument("participant count must be at least 1");
  return mu > c * (static_cast<double>(k) + 2.0);
}

int equilibrium_entrants(double mu, double c, int k0) {
  if (k0 < 1) throw std::invalid_argument("initial count must be at least 1");
  require_positive(c, "cost");
  const double approx = mu / c;
  if (!(approx < 2e9)) throw std::invalid_argument("entry count exceeds int range");
  // Jump just below the fixed point, then let the entry rule settle the
  // final steps; the result is exactly the iterated predicate's.
  long k = k0;
  if (approx - 4.0 > static_cast<double>(k)) k = static_cast<long>(approx - 4.0);
  while (mu > c * (static_cast<double>(k) + 2.0)) ++k;
  return static_cast<int>(k);
}

double scenario1_cost(double alpha, double dp) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("reward fraction out of (0,1]");
  return (1.0 - alpha) * dp;
}

double expected_second_bid(double reward, double mu, int n) {
  require_bidders(n);
  require_positive(mu, "dispersion");
  if (mu > reward) throw std::invalid_argument("dispersion exceeds the reward");
  return reward - 2.0 * mu / (static_cast<double>(n) + 1.0);
}

double proposer_expected_net_loss(double alpha, double dp, double mu, int n) {
  require_bidders(n);
  return (1.0 - alpha) * dp + 2.0 * mu / (static_cast<double>(n) + 1.0);
}

}  // namespace econ
}  // namespace dsim
