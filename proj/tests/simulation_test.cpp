// Copyright 2026 The pinch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pinch/simulation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles/oracles.hpp"
#include "pinch/errors.hpp"
#include "pinch/placement.hpp"

namespace pinch {
namespace {

UrllcParams const kUrllc{1e-5, 256, 256};

SystemParams defaults(int count) {
  SystemParams p;
  p.num_antennas_N = count;
  return p;
}

SimulationConfig small_config(SweepKind kind, std::vector<double> values,
                              std::int64_t trials) {
  SimulationConfig c;
  c.num_trials = trials;
  c.sweep = {kind, std::move(values)};
  return c;
}

TEST(SampleUser, DegenerateAreaIsOrigin) {
  RngStream rng(5);
  auto const u = sample_user(rng, 0.0);
  EXPECT_EQ(u.x, 0.0);
  EXPECT_EQ(u.y, 0.0);
  EXPECT_THROW(sample_user(rng, -1.0), DomainError);
}

TEST(SampleUser, CoversSquareUniformly) {
  RngStream rng(123);
  double sx = 0.0;
  double sy = 0.0;
  int const draws = 100000;
  for (int i = 0; i < draws; ++i) {
    auto const u = sample_user(rng, 10.0);
    ASSERT_GE(u.x, 0.0);
    ASSERT_LT(u.x, 10.0);
    ASSERT_GE(u.y, -5.0);
    ASSERT_LT(u.y, 5.0);
    sx += u.x;
    sy += u.y;
  }
  // Standard error of each mean is 10 / sqrt(12 * 1e5) ~ 0.009.
  EXPECT_NEAR(sx / draws, 5.0, 0.05);
  EXPECT_NEAR(sy / draws, 0.0, 0.05);
}

TEST(SampleUser, SameSeedSameUser) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    RngStream a(derive_trial_seed(9, 2, t));
    RngStream b(derive_trial_seed(9, 2, t));
    auto const ua = sample_user(a, 10.0);
    auto const ub = sample_user(b, 10.0);
    EXPECT_EQ(ua.x, ub.x);
    EXPECT_EQ(ua.y, ub.y);
  }
  EXPECT_NE(derive_trial_seed(9, 2, 0), derive_trial_seed(9, 3, 0));
  EXPECT_NE(derive_trial_seed(9, 2, 0), derive_trial_seed(10, 2, 0));
  EXPECT_NE(derive_trial_seed(9, 2, 0), derive_trial_seed(9, 2, 1));
}

TEST(RngStream, UniformStaysInUnitInterval) {
  RngStream rng(0);
  for (int i = 0; i < 10000; ++i) {
    double const u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(EvaluatePinching, SingleAntennaMatchesDirectRate) {
  SystemParams const p = defaults(1);
  for (double y : {0.0, 1.0, 4.0}) {
    UserPosition const user{3.0, y};
    double const gamma = p.transmit_power_pt * p.path_gain() * p.path_gain() /
                         (p.noise_power_sigma2 * (y * y + 9.0));
    auto const out = evaluate_pinching(user, p, kUrllc);
    EXPECT_NEAR(out.rate_nats, oracle::rate(gamma, kUrllc.tau()), 1e-12);
  }
}

TEST(EvaluatePinching, RateFallsWithLateralOffset) {
  SystemParams const p = defaults(5);
  double previous = INFINITY;
  for (double y = 0.0; y <= 8.0; y += 0.5) {
    double const rate = evaluate_pinching({4.0, y}, p, kUrllc).rate_nats;
    EXPECT_LT(rate, previous);
    previous = rate;
  }
}

TEST(EvaluatePinching, MoreAntennasHelpAtLowPower) {
  SystemParams p3 = defaults(3);
  SystemParams p7 = defaults(7);
  p3.transmit_power_pt = p7.transmit_power_pt = dbm_to_watts(0.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 40; ++i) {
    UserPosition const user{u(rng), u(rng) - 5.0};
    EXPECT_GE(evaluate_pinching(user, p7, kUrllc).rate_nats,
              evaluate_pinching(user, p3, kUrllc).rate_nats);
  }
}

TEST(EvaluatePinching, OutcomeIsConsistent) {
  SystemParams p = defaults(5);
  p.transmit_power_pt = dbm_to_watts(-10.0);
  for (double y : {0.0, 3.0, 9.0}) {
    auto const out = evaluate_pinching({2.0, y}, p, kUrllc);
    EXPECT_GE(out.rate_nats, 0.0);
    EXPECT_EQ(out.qos_ok, out.rate_nats >= target_rate_nats(kUrllc) - 1e-12);
  }
}

TEST(EvaluateConventional, SingleAntennaAtFeed) {
  SystemParams const p = defaults(1);
  UserPosition const user{6.0, 2.0};
  double const gamma = p.transmit_power_pt * p.path_gain() * p.path_gain() /
                       (p.noise_power_sigma2 * (36.0 + 4.0 + 9.0));
  EXPECT_NEAR(evaluate_conventional(user, p, kUrllc),
              oracle::rate(gamma, kUrllc.tau()), 1e-12);
}

TEST(EvaluateConventional, MatchesArrayOracle) {
  SystemParams const p = defaults(4);
  UserPosition const user{3.0, -1.0};
  double const half = 0.5 * p.wavelength();
  double sum = 0.0;
  for (int n = 1; n <= 4; ++n) {
    double const x = (n - 2.5) * half;
    sum += 1.0 / oracle::distance3(x, user, p);
  }
  double const gamma = p.transmit_power_pt * p.path_gain() * p.path_gain() /
                       (4 * p.noise_power_sigma2) * sum * sum;
  EXPECT_NEAR(conventional_snr(user, p) / gamma, 1.0, 1e-13);
}

TEST(EvaluateConventional, PinchingWinsForDistantUsers) {
  SystemParams const p = defaults(5);
  for (double x : {3.0, 6.0, 9.5}) {
    UserPosition const user{x, 1.0};
    EXPECT_GT(evaluate_pinching(user, p, kUrllc).rate_nats,
              evaluate_conventional(user, p, kUrllc));
  }
}

TEST(RunSweep, IndependentOfThreadCount) {
  auto const config = small_config(SweepKind::kPower, {0, 20, 40}, 60);
  SystemParams const p = defaults(5);
  auto const one = run_sweep(config, p, kUrllc, {1, true});
  auto const four = run_sweep(config, p, kUrllc, {4, true});
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t s = 0; s < one.size(); ++s) {
    EXPECT_EQ(one[s].mean_rate_pinching_bits, four[s].mean_rate_pinching_bits);
    EXPECT_EQ(*one[s].mean_rate_conventional_bits,
              *four[s].mean_rate_conventional_bits);
    EXPECT_EQ(one[s].outage_fraction, four[s].outage_fraction);
    ASSERT_EQ(one[s].records.size(), four[s].records.size());
    for (std::size_t t = 0; t < one[s].records.size(); ++t) {
      EXPECT_EQ(one[s].records[t].user.x, four[s].records[t].user.x);
      EXPECT_EQ(one[s].records[t].rate_pinching_nats,
                four[s].records[t].rate_pinching_nats);
    }
  }
}

TEST(RunSweep, AggregatesMatchRecords) {
  auto const config = small_config(SweepKind::kPower, {-10, 10}, 80);
  auto const results = run_sweep(config, defaults(3), kUrllc, {0, true});
  for (auto const& r : results) {
    ASSERT_EQ(r.records.size(), static_cast<std::size_t>(r.trials));
    EXPECT_EQ(r.trials + r.alignment_failures, 80);
    double sum = 0.0;
    double conventional = 0.0;
    int outages = 0;
    for (auto const& t : r.records) {
      sum += t.rate_pinching_nats;
      conventional += *t.rate_conventional_nats;
      outages += !t.qos_ok;
    }
    EXPECT_NEAR(r.mean_rate_pinching_bits, sum / r.trials / std::log(2.0), 1e-12);
    EXPECT_NEAR(*r.mean_rate_conventional_bits,
                conventional / r.trials / std::log(2.0), 1e-12);
    EXPECT_EQ(r.outage_fraction, static_cast<double>(outages) / r.trials);
    EXPECT_GE(r.outage_fraction, 0.0);
    EXPECT_LE(r.outage_fraction, 1.0);
  }
}

TEST(RunSweep, BaselineCanBeDisabled) {
  auto config = small_config(SweepKind::kPower, {10}, 10);
  config.baseline_enabled = false;
  auto const results = run_sweep(config, defaults(3), kUrllc, {1, true});
  EXPECT_FALSE(results[0].mean_rate_conventional_bits.has_value());
  EXPECT_FALSE(results[0].records[0].rate_conventional_nats.has_value());
}

TEST(RunSweep, LongerBlocksRaiseRate) {
  auto const config = small_config(SweepKind::kBlocklength, {64, 128, 256, 512}, 100);
  auto const results = run_sweep(config, defaults(5), kUrllc);
  for (std::size_t s = 1; s < results.size(); ++s) {
    EXPECT_GT(results[s].mean_rate_pinching_bits,
              results[s - 1].mean_rate_pinching_bits);
  }
}

TEST(RunSweep, LargerAreaLowersRate) {
  auto const config = small_config(SweepKind::kArea, {5, 10, 20, 40}, 200);
  auto const results = run_sweep(config, defaults(5), kUrllc);
  for (std::size_t s = 1; s < results.size(); ++s) {
    EXPECT_LT(results[s].mean_rate_pinching_bits,
              results[s - 1].mean_rate_pinching_bits);
  }
}

TEST(RunSweep, AntennaSweepChangesCount) {
  auto const config = small_config(SweepKind::kAntennas, {1, 3, 7}, 30);
  auto const results = run_sweep(config, defaults(5), kUrllc);
  ASSERT_EQ(results.size(), 3u);
  EXPECT_EQ(results[1].swept_value, 3.0);
}

TEST(RunSweep, RejectsInvalidConfig) {
  SystemParams const p = defaults(3);
  EXPECT_THROW(run_sweep(small_config(SweepKind::kPower, {}, 10), p, kUrllc),
               DomainError);
  EXPECT_THROW(run_sweep(small_config(SweepKind::kPower, {10, 5}, 10), p, kUrllc),
               DomainError);
  EXPECT_THROW(run_sweep(small_config(SweepKind::kPower, {10}, 0), p, kUrllc),
               DomainError);
  EXPECT_THROW(run_sweep(small_config(SweepKind::kAntennas, {2.5}, 10), p, kUrllc),
               DomainError);
  EXPECT_THROW(run_sweep(small_config(SweepKind::kArea, {0}, 10), p, kUrllc),
               DomainError);
}

TEST(SweepKind, RoundTripsNames) {
  for (auto kind : {SweepKind::kPower, SweepKind::kBlocklength, SweepKind::kArea,
                    SweepKind::kAntennas}) {
    EXPECT_EQ(parse_sweep_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_sweep_kind("bandwidth"), DomainError);
}

}  // namespace
}  // namespace pinch
