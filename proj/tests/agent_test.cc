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

#include "agent.h"

#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "error.h"

namespace fedbandit {
namespace {

constexpr double kInf = kInfiniteEpsilon;

TEST(ConfidenceTest, Alpha1) {
  EXPECT_DOUBLE_EQ(Alpha1(3), 64.0 / 129140163.0);
}

TEST(ConfidenceTest, GossipFixtures) {
  // 1 + 64/3^17 from a high-precision evaluation.
  EXPECT_NEAR(ConfidenceGossipFromLog(6.0, 1.0, 3), 1.000000495585560009,
              1e-15);
  EXPECT_DOUBLE_EQ(ConfidenceGossip(10, 1, 3), Alpha1(3));
  const double a1 = Alpha1(4);
  for (int64_t n : {1, 3, 50, 1000}) {
    const double r1 = ConfidenceGossip(n, 500, 4) - a1;
    const double r2 = ConfidenceGossip(2 * n, 500, 4) - a1;
    EXPECT_NEAR(r1 / r2, std::sqrt(2.0), 1e-12);
  }
}

TEST(ConfidenceTest, FedFixture) {
  // High-precision evaluation of the closed form.
  EXPECT_NEAR(ConfidenceFed(100, 100, 1000, 3, 1.0), 32.771972888347009,
              1e-12);
}

TEST(ConfidenceTest, FedLimitAndDominance) {
  Rng rng(6);
  for (int iter = 0; iter < 2000; ++iter) {
    const int64_t n = 1 + static_cast<int64_t>(rng() % 10000);
    const int64_t t = 1 + static_cast<int64_t>(rng() % 100000);
    const int64_t horizon = t + static_cast<int64_t>(rng() % 100000);
    const int agents = 3 + static_cast<int>(rng() % 8);
    const double eps = 0.1 + Uniform01(rng) * 10.0;
    const double c = ConfidenceGossip(n, t, agents);
    EXPECT_EQ(ConfidenceFed(n, t, horizon, agents, kInf), c);
    EXPECT_GE(ConfidenceFed(n, t, horizon, agents, eps), c - 1e-15);
  }
}

TEST(ConfidenceTest, Errors) {
  try {
    ConfidenceFed(1, 1, 10, 3, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidEpsilon);
  }
  EXPECT_THROW(ConfidenceGossip(0, 5, 3), Error);
  EXPECT_THROW(ConfidenceGossip(1, 0, 3), Error);
  EXPECT_THROW(ConfidenceFed(1, 1, 0, 3, 1.0), Error);
}

TEST(ConfidenceTest, Ucb1) {
  EXPECT_DOUBLE_EQ(ConfidenceUcb1(4, 100), std::sqrt(2.0 * std::log(100.0) / 4));
  ConfidenceRule rule;
  rule.kind = ConfidenceRule::Kind::kUcb1;
  EXPECT_DOUBLE_EQ(rule(4, 100), ConfidenceUcb1(4, 100));
}

TEST(TildeNTest, MaxOverNeighbors) {
  const std::vector<int64_t> own = {5};
  const std::vector<int64_t> a = {3};
  const std::vector<int64_t> b = {7};
  EXPECT_EQ(UpdateTildeN(own, {a, b}), (std::vector<int64_t>{7}));
  const std::vector<int64_t> same = {7};
  EXPECT_EQ(UpdateTildeN(same, {a, same}), same);
}

TEST(TildeNTest, OneHopPerTick) {
  // Path 1-2-3; only agent 1 has n = 5.
  std::vector<std::vector<int64_t>> n = {{5}, {1}, {1}};
  std::vector<std::vector<int64_t>> tilde = n;
  const std::vector<std::vector<int>> nbrs = {{1}, {0, 2}, {1}};
  auto round = [&] {
    std::vector<std::vector<int64_t>> next(3);
    for (int i = 0; i < 3; ++i) {
      std::vector<std::span<const int64_t>> views;
      for (int j : nbrs[i]) views.push_back(tilde[j]);
      next[i] = UpdateTildeN(n[i], views);
    }
    tilde = next;
  };
  round();
  EXPECT_EQ(tilde[1][0], 5);
  EXPECT_EQ(tilde[2][0], 1);
  round();
  EXPECT_EQ(tilde[2][0], 5);
}

TEST(LaggingTest, StrictThreshold) {
  const int agents = 3;
  const std::vector<int64_t> n = {3, 3, 3};
  const std::vector<int64_t> tilde = {3 + agents + 1, 3, 3 + agents};
  EXPECT_EQ(LaggingArms(n, tilde, agents), (std::vector<int>{0}));
}

TEST(SelectArmTest, Argmax) {
  Rng rng(1);
  const std::vector<double> theta = {0.5, 0.4};
  EXPECT_EQ(SelectArm(theta, std::vector<double>{0.1, 0.3}, {}, rng), 1);
  EXPECT_EQ(SelectArm(std::vector<double>{0.7, 0.7},
                      std::vector<double>{0.0, 0.0}, {}, rng),
            0);
  const std::vector<int> lagging = {2};
  EXPECT_EQ(SelectArm(std::vector<double>{0.9, 0.1, 0.0},
                      std::vector<double>{0.0, 0.0, 0.0}, lagging, rng),
            2);
}

TEST(SelectArmTest, UniformOverLaggingSet) {
  Rng rng(2);
  const std::vector<int> lagging = {0, 2, 3};
  const std::vector<double> zero(4, 0.0);
  std::map<int, int> freq;
  for (int s = 0; s < 30000; ++s) ++freq[SelectArm(zero, zero, lagging, rng)];
  ASSERT_EQ(freq.size(), 3u);
  for (const auto& [arm, count] : freq) EXPECT_NEAR(count / 30000.0, 1 / 3.0, 0.02);
}

TEST(SelectArmProperty, ShiftInvariant) {
  Rng rng(3);
  ConfidenceRule rule;
  rule.num_agents = 4;
  for (int iter = 0; iter < 2000; ++iter) {
    const int m = 2 + static_cast<int>(rng() % 6);
    std::vector<double> theta(m);
    std::vector<int64_t> n(m);
    for (int k = 0; k < m; ++k) {
      theta[k] = Uniform01(rng);
      n[k] = 1 + static_cast<int64_t>(rng() % 50);
    }
    const int64_t t = 1 + static_cast<int64_t>(rng() % 1000);
    const int base = SelectArm(theta, n, t, rule, {}, rng);
    std::vector<double> shifted = theta;
    for (double& v : shifted) v += 0.25;
    EXPECT_EQ(SelectArm(shifted, n, t, rule, {}, rng), base);
  }
}

TEST(RecordTest, CleanRunningMean) {
  Rng rng(1);
  const std::vector<double> first = {0.2, 1.0};
  AgentState s = InitializeAgent(0, first, PrivacySettings{}, rng);
  EXPECT_EQ(s.n, (std::vector<int64_t>{1, 1}));
  EXPECT_EQ(s.theta, s.x_tilde);
  RecordObservation(s, 0, 0.4, rng);
  EXPECT_NEAR(s.x_tilde[0], 0.3, 1e-15);
  EXPECT_EQ(s.n[0], 2);
  try {
    RecordObservation(s, 0, 1.5, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRewardOutOfRange);
  }
}

TEST(RecordTest, InfiniteEpsilonMatchesClean) {
  for (DecomposeMode mode : {DecomposeMode::kPull, DecomposeMode::kWallclock}) {
    Rng rng(7), noise_a(8), noise_b(8);
    PrivacySettings dp;
    dp.enabled = true;
    dp.epsilon = kInf;
    dp.mode = mode;
    dp.horizon = 500;
    const std::vector<double> first = {1.0, 0.0, 1.0};
    AgentState clean = InitializeAgent(0, first, PrivacySettings{}, noise_a);
    AgentState priv = InitializeAgent(0, first, dp, noise_b);
    EXPECT_EQ(clean.x_tilde, priv.x_tilde);
    for (int t = 0; t < 500; ++t) {
      const int arm = static_cast<int>(rng() % 3);
      const double reward = (rng() % 2) ? 1.0 : 0.0;
      RecordObservation(clean, arm, reward, noise_a);
      RecordObservation(priv, arm, reward, noise_b);
      ASSERT_EQ(clean.x_tilde, priv.x_tilde);
    }
    int64_t total = 0;
    for (int64_t c : priv.n) total += c;
    EXPECT_EQ(total, 500 + 3);
    if (mode == DecomposeMode::kWallclock) {
      for (const PrivateStream& st : priv.streams) EXPECT_EQ(st.length(), 501);
    }
  }
}

TEST(RecordTest, FiniteEpsilonAddsMemoizedNoise) {
  Rng noise(9);
  PrivacySettings dp;
  dp.enabled = true;
  dp.epsilon = 1.0;
  dp.horizon = 1024;
  const std::vector<double> first = {1.0, 0.0};
  AgentState s = InitializeAgent(0, first, dp, noise);
  EXPECT_EQ(s.streams[0].ledger().scale(), 10.0);
  EXPECT_NE(s.x_tilde[0], 1.0);
  const auto noise_11 = s.streams[0].ledger().Find({1, 1});
  ASSERT_TRUE(noise_11.has_value());
  EXPECT_DOUBLE_EQ(s.x_tilde[0], 1.0 + *noise_11);
  RecordObservation(s, 0, 1.0, noise);
  const auto noise_12 = s.streams[0].ledger().Find({1, 2});
  ASSERT_TRUE(noise_12.has_value());
  EXPECT_DOUBLE_EQ(s.x_tilde[0], (2.0 + *noise_12) / 2.0);
}

}  // namespace
}  // namespace fedbandit
