// Copyright 2026 disputesim contributors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsim/economics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

using namespace dsim;

namespace {

// Independent order-statistic oracle: plain std::mt19937_64 draws, nothing
// shared with the simulator's RNG or auction code.
struct OrderStatSample {
  double mean_max = 0, se_max = 0;
  double mean_second = 0, se_second = 0;
  double mean_surplus = 0, se_surplus = 0;
};

OrderStatSample sample_order_stats(int n, double mu, long trials,
                                   std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto unit = [&gen] {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  };
  std::vector<double> maxes, seconds, surpluses;
  maxes.reserve(trials);
  for (long t = 0; t < trials; ++t) {
    double best = -1, second = -1;
    for (int i = 0; i < n; ++i) {
      const double x = mu * unit();
      if (x > best) {
        second = best;
        best = x;
      } else if (x > second) {
        second = x;
      }
    }
    if (n == 1) second = 0.0;
    maxes.push_back(best);
    seconds.push_back(second);
    surpluses.push_back(best - second);
  }
  auto stats = [trials](const std::vector<double>& xs, double& mean, double& se) {
    mean = 0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(trials);
    double ss = 0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    se = std::sqrt(ss / static_cast<double>(trials - 1) /
                   static_cast<double>(trials));
  };
  OrderStatSample out;
  stats(maxes, out.mean_max, out.se_max);
  stats(seconds, out.mean_second, out.se_second);
  stats(surpluses, out.mean_surplus, out.se_surplus);
  return out;
}

ProtocolParams params_with(double alpha, Amount dp_tokens = 100,
                           Amount dg_tokens = 10) {
  ProtocolParams params;
  params.proposer_deposit = dp_tokens * kUnitsPerToken;
  params.dispute_collateral = dg_tokens * kUnitsPerToken;
  params.reward_fraction = alpha;
  return params;
}

}  // namespace

TEST_SUITE("economics") {

TEST_CASE("reward pot is alpha * D_P + D_g") {
  CHECK(econ::reward_pot(params_with(1.0)) == doctest::Approx(110.0));
  CHECK(econ::reward_pot(params_with(0.01)) == doctest::Approx(11.0));
  CHECK(econ::reward_pot(params_with(0.5)) == doctest::Approx(60.0));
  CHECK(econ::reward_pot_units(params_with(1.0)) == 110 * kUnitsPerToken);
  CHECK(econ::reward_pot_units(params_with(0.5)) == 60 * kUnitsPerToken);
}

TEST_CASE("expected order statistics of uniform valuations") {
  const auto one = econ::expected_order_stats(1, 1.0);
  CHECK(one.expected_max == doctest::Approx(0.5));
  CHECK(one.expected_second == doctest::Approx(0.0));

  const auto five = econ::expected_order_stats(5, 1.0);
  CHECK(five.expected_max == doctest::Approx(5.0 / 6.0));
  CHECK(five.expected_second == doctest::Approx(4.0 / 6.0));

  CHECK_THROWS_AS(econ::expected_order_stats(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(econ::expected_surplus(0, 1.0), std::invalid_argument);
}

TEST_CASE("closed forms match an independent Monte Carlo oracle") {
  const long trials = 100'000;
  std::uint64_t seed = 0xD15B;
  for (int n : {1, 2, 5, 10, 50}) {
    const OrderStatSample mc = sample_order_stats(n, 1.0, trials, seed++);
    const auto expected = econ::expected_order_stats(n, 1.0);
    CHECK(std::abs(mc.mean_max - expected.expected_max) <= 3 * mc.se_max);
    if (n > 1) {
      CHECK(std::abs(mc.mean_second - expected.expected_second) <=
            3 * mc.se_second);
    }
    CHECK(std::abs(mc.mean_surplus - econ::expected_surplus(n, 1.0)) <=
          3 * mc.se_surplus);
  }
}

TEST_CASE("expected second bid matches the order-statistic oracle") {
  // second-highest of 9 draws on [109, 110]
  const OrderStatSample mc = sample_order_stats(9, 1.0, 100'000, 0xBEEF);
  const double simulated = 109.0 + mc.mean_second;
  CHECK(std::abs(simulated - econ::expected_second_bid(110.0, 1.0, 9)) <=
        3 * mc.se_second);
}

TEST_CASE("winner surplus examples") {
  CHECK(econ::expected_surplus(1, 1.0) == doctest::Approx(0.5));
  CHECK(econ::expected_surplus(9, 1.0) == doctest::Approx(0.1));
  for (int n : {1, 2, 5, 9, 33}) {
    const auto stats = econ::expected_order_stats(n, 3.25);
    CHECK(econ::expected_surplus(n, 3.25) ==
          doctest::Approx(stats.expected_max - stats.expected_second));
  }
}

TEST_CASE("surplus strictly shrinks with competition") {
  double previous = 1e300;
  for (int n = 1; n <= 1024; n *= 2) {
    const double surplus = econ::expected_surplus(n, 2.5);
    CHECK(surplus < previous);
    previous = surplus;
  }
}

TEST_CASE("participation conditions are strict") {
  CHECK(econ::participation_beneficial(1.0, 0.1, 5));
  CHECK_FALSE(econ::participation_beneficial(0.6, 0.1, 5));  // boundary
  CHECK_FALSE(econ::participation_beneficial(1.0, 0.5, 1));  // boundary

  const double c = 0.1;
  CHECK(econ::marginal_entry_beneficial(3.1 * c, c, 1));
  CHECK_FALSE(econ::marginal_entry_beneficial(3.0 * c, c, 1));
  CHECK_FALSE(econ::marginal_entry_beneficial(10.0, 1.0, 8));
}

TEST_CASE("participation equals positive expected surplus net of cost") {
  std::mt19937_64 gen(7);
  auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 1000; ++i) {
    const double mu = 0.01 + 10.0 * unit();
    const double c = 0.001 + unit();
    const int n = 1 + static_cast<int>(gen() % 50);
    CHECK(econ::participation_beneficial(mu, c, n) ==
          (econ::expected_surplus(n, mu) - c > 0));
  }
}

TEST_CASE("sequential entry fixed point") {
  CHECK(econ::equilibrium_entrants(10.0, 1.0, 1) == 8);
  CHECK(econ::equilibrium_entrants(2.0, 1.0, 1) == 1);
  CHECK(econ::equilibrium_entrants(3.5, 1.0, 1) == 2);

  // brute-force oracle: simulate joins one by one
  std::mt19937_64 gen(11);
  auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 200; ++i) {
    const double mu = 0.1 + 20.0 * unit();
    const double c = 0.05 + 2.0 * unit();
    const int k0 = 1 + static_cast<int>(gen() % 4);
    int k = k0;
    while (mu > c * (k + 2)) ++k;
    CHECK(econ::equilibrium_entrants(mu, c, k0) == k);
  }
}

TEST_CASE("scenario-1 self-challenge cost") {
  CHECK(econ::scenario1_cost(1.0, 100.0) == doctest::Approx(0.0));
  CHECK(econ::scenario1_cost(0.99, 100.0) == doctest::Approx(1.0));
  CHECK(econ::scenario1_cost(0.01, 100.0) == doctest::Approx(99.0));
}

TEST_CASE("expected second bid examples") {
  CHECK(econ::expected_second_bid(110.0, 1.0, 9) == doctest::Approx(109.8));
  CHECK(econ::expected_second_bid(110.0, 1.0, 1) == doctest::Approx(109.0));
  CHECK_THROWS_AS(econ::expected_second_bid(1.0, 2.0, 3), std::invalid_argument);
}

TEST_CASE("proposer expected net loss") {
  CHECK(econ::proposer_expected_net_loss(1.0, 100.0, 1.0, 9) ==
        doctest::Approx(0.2));
  CHECK(econ::proposer_expected_net_loss(0.5, 100.0, 6.0, 2) ==
        doctest::Approx(54.0));
  CHECK(econ::proposer_expected_net_loss(1.0, 100.0, 1.0, 1'000'000) ==
        doctest::Approx(0.0).epsilon(1e-5));

  // strictly decreasing in n and alpha, bounded below by (1-alpha)D_P
  double previous = 1e300;
  for (int n = 1; n <= 64; n *= 2) {
    const double loss = econ::proposer_expected_net_loss(0.8, 100.0, 1.0, n);
    CHECK(loss < previous);
    CHECK(loss > (1.0 - 0.8) * 100.0);
    previous = loss;
  }
  previous = 1e300;
  for (double alpha : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    const double loss = econ::proposer_expected_net_loss(alpha, 100.0, 1.0, 9);
    CHECK(loss < previous);
    previous = loss;
  }
}

TEST_CASE("loss equals forfeited deposits minus auction revenue") {
  std::mt19937_64 gen(13);
  auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 500; ++i) {
    const double alpha = 0.01 + 0.99 * unit();
    const double dp = 1.0 + 500.0 * unit();
    const double dg = 0.5 + 50.0 * unit();
    const double reward = alpha * dp + dg;
    const double mu = reward * (0.01 + 0.98 * unit());
    const int n = 1 + static_cast<int>(gen() % 100);
    const double loss = econ::proposer_expected_net_loss(alpha, dp, mu, n);
    const double identity =
        (dp + dg) - econ::expected_second_bid(reward, mu, n);
    CHECK(std::abs(loss - identity) <= 1e-12 * std::max(1.0, std::abs(loss)));
  }
}

TEST_CASE("protocol params validation") {
  ProtocolParams good = params_with(1.0);
  CHECK(good.validate().empty());

  ProtocolParams bad_alpha = params_with(1.5);
  const auto problems = bad_alpha.validate();
  REQUIRE(problems.size() == 1);
  CHECK(problems.front() == "reward_fraction out of (0,1]");

  ProtocolParams zero_alpha = params_with(0.0);
  CHECK_FALSE(zero_alpha.validate().empty());

  ProtocolParams bad_collateral = params_with(1.0);
  bad_collateral.collateral_cap = bad_collateral.dispute_collateral;
  CHECK_FALSE(bad_collateral.validate().empty());

  ProtocolParams wide = params_with(0.01);  // reward pot 11
  wide.valuation_dispersion = 12.0;
  CHECK_FALSE(wide.validate().empty());

  ProtocolParams free_entry = params_with(1.0);
  free_entry.participation_cost = 0.0;
  CHECK_FALSE(free_entry.validate().empty());
}

}  // TEST_SUITE
