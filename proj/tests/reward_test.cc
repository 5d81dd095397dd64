// Copyright 2026 The fedbandit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reward.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "error.h"

namespace fedbandit {
namespace {

RewardModel Fixture() {
  return RewardModel::FromMeans({{0.9, 0.2}, {0.1, 0.7}, {0.8, 0.2}});
}

TEST(RewardModelTest, HeterogeneousFixture) {
  const RewardModel m = Fixture();
  EXPECT_NEAR(m.global_means()[0], 0.6, 1e-12);
  EXPECT_NEAR(m.global_means()[1], 1.1 / 3.0, 1e-12);
  EXPECT_EQ(m.optimal_arm(), 0);
  EXPECT_EQ(m.local_optimal_arm(1), 1);
  EXPECT_EQ(m.gaps()[0], 0.0);
  EXPECT_NEAR(m.gaps()[1], 0.6 - 1.1 / 3.0, 1e-12);
}

TEST(RewardModelTest, HomogeneousMeansHaveZeroGaps) {
  const RewardModel m = RewardModel::FromMeans(
      std::vector<std::vector<double>>(3, std::vector<double>(4, 0.35)));
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(m.global_means()[k], 0.35, 1e-12);
    EXPECT_EQ(m.gaps()[k], 0.0);
  }
  EXPECT_EQ(m.optimal_arm(), 0);
}

TEST(RewardModelTest, RejectsBadShapes) {
  EXPECT_THROW(RewardModel::FromMeans({{0.1}, {0.2}, {0.3}}), Error);
  EXPECT_THROW(RewardModel::FromMeans({{0.1, 0.2}, {0.2, 0.3}}), Error);
  EXPECT_THROW(RewardModel::FromMeans({{0.1, 0.2}, {0.2}, {0.3, 0.1}}), Error);
  EXPECT_THROW(RewardModel::FromMeans({{0.1, 1.2}, {0.2, 0.1}, {0.3, 0.1}}),
               Error);
}

TEST(SampleTest, DegenerateBernoulli) {
  const RewardModel m =
      RewardModel::FromMeans({{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}});
  Rng rng(1);
  for (int s = 0; s < 1000; ++s) {
    EXPECT_EQ(m.Sample(0, 0, rng), 1.0);
    EXPECT_EQ(m.Sample(2, 1, rng), 0.0);
  }
}

TEST(SampleTest, BernoulliMonteCarloMean) {
  const RewardModel m =
      RewardModel::FromMeans({{0.3, 0.5}, {0.3, 0.5}, {0.3, 0.5}});
  Rng rng(2);
  constexpr int kDraws = 1000000;
  double sum = 0.0;
  for (int s = 0; s < kDraws; ++s) sum += m.Sample(0, 0, rng);
  EXPECT_NEAR(sum / kDraws, 0.3, 0.002);
}

TEST(SampleTest, BernoulliWithinThreeSigmaEveryCell) {
  const RewardModel m = Fixture();
  Rng rng(3);
  constexpr int kDraws = 100000;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 2; ++k) {
      double sum = 0.0;
      for (int s = 0; s < kDraws; ++s) sum += m.Sample(i, k, rng);
      const double mu = m.local_mean(i, k);
      EXPECT_NEAR(sum / kDraws, mu, 3.0 * std::sqrt(mu * (1 - mu) / kDraws));
    }
  }
}

TEST(SampleTest, ClampedGaussianStaysInRange) {
  const RewardModel m = RewardModel::FromMeans(
      {{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}}, RewardKind::kClampedGaussian, 1.0);
  Rng rng(4);
  for (int s = 0; s < 1000000; ++s) {
    const double x = m.Sample(1, 0, rng);
    ASSERT_GE(x, 0.0);
    ASSERT_LE(x, 1.0);
  }
}

TEST(SampleTest, PoolReplayModes) {
  RewardModel::Pools pools(3, std::vector<std::vector<uint8_t>>(2));
  for (int i = 0; i < 3; ++i) {
    pools[i][0] = {1, 0, 1, 1};
    pools[i][1] = {0, 0, 1, 0};
  }
  const RewardModel stream = RewardModel::FromPools(pools, ReplayMode::kStream);
  EXPECT_NEAR(stream.local_mean(0, 0), 0.75, 1e-15);
  EXPECT_NEAR(stream.global_means()[1], 0.25, 1e-15);
  Rng rng(9);
  const std::vector<double> expected = {1, 0, 1, 1, 1, 0};
  for (int64_t ord = 1; ord <= 6; ++ord) {
    EXPECT_EQ(stream.Sample(2, 0, rng, ord), expected[ord - 1]);
  }
  const RewardModel sample = RewardModel::FromPools(pools, ReplayMode::kSample);
  double sum = 0.0;
  for (int s = 0; s < 100000; ++s) sum += sample.Sample(0, 0, rng);
  EXPECT_NEAR(sum / 100000, 0.75, 0.01);

  pools[1][1].clear();
  try {
    RewardModel::FromPools(pools, ReplayMode::kSample);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyArm);
  }
}

TEST(RewardProperty, GlobalMeanIsAgentAverage) {
  Rng rng(8);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int m = 2 + static_cast<int>(rng() % 5);
    const RewardModel model = BuildSynthetic(n, m, rng);
    double best = 0.0;
    for (int k = 0; k < m; ++k) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        const double mu = model.local_mean(i, k);
        ASSERT_GE(mu, 0.0);
        ASSERT_LE(mu, 1.0);
        sum += mu;
      }
      EXPECT_NEAR(model.global_means()[k], sum / n, 1e-12);
      best = std::max(best, model.global_means()[k]);
    }
    EXPECT_EQ(model.best_mean(), best);
    for (int k = 0; k < m; ++k) EXPECT_GE(model.gaps()[k], 0.0);
    EXPECT_EQ(model.gaps()[model.optimal_arm()], 0.0);
    const RewardModel again = RewardModel::FromMeans(model.local_means());
    EXPECT_EQ(again.global_means(), model.global_means());
  }
}

}  // namespace
}  // namespace fedbandit
