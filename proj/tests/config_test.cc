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

#include "config.h"

#include <string>

#include <gtest/gtest.h>

#include "error.h"
#include "test_util.h"

namespace fedbandit {
namespace {

ErrorCode ParseCode(const std::string& text) {
  try {
    ParseConfig(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

TEST(ParseConfigTest, MinimalConfigFillsDefaults) {
  const ExperimentConfig c =
      ParseConfig("graph = complete\nsim.N = 3\nsim.M = 5\nsim.T = 1000\n");
  EXPECT_EQ(c.trials, 100);
  EXPECT_TRUE(std::isinf(c.epsilon));
  EXPECT_EQ(c.master_seed, 0u);
  EXPECT_EQ(c.num_arms, 5);
  EXPECT_EQ(c.algorithm, Algorithm::kGossipUcb);
}

TEST(ParseConfigTest, Values) {
  const ExperimentConfig c = ParseConfig(
      "# comment line\n"
      "graph = erdos_renyi 0.4 9   # trailing comment\n"
      "sim.N = 6\n"
      "sim.algorithm = fed_ucb\n"
      "dp.epsilon = 0.5\n"
      "dp.decompose = wallclock\n"
      "sim.band = per-agent\n"
      "monitor.local = on\n");
  EXPECT_EQ(c.graph.kind, GraphSpec::Kind::kErdosRenyi);
  EXPECT_EQ(c.graph.p, 0.4);
  EXPECT_EQ(c.graph.seed, 9u);
  EXPECT_EQ(c.epsilon, 0.5);
  EXPECT_EQ(c.decompose, DecomposeMode::kWallclock);
  EXPECT_EQ(c.band, BandMode::kPerAgent);
  EXPECT_TRUE(c.monitors.local);
  EXPECT_FALSE(c.monitors.global);
}

TEST(ParseConfigTest, EdgeListsAreOneBased) {
  const ExperimentConfig c = ParseConfig("graph = 1-2, 2-3, 3-4\nsim.N = 4\n");
  EXPECT_EQ(c.graph.kind, GraphSpec::Kind::kEdges);
  ASSERT_EQ(c.graph.edges.size(), 3u);
  EXPECT_EQ(c.graph.edges[0], (Edge{0, 1}));
  EXPECT_EQ(c.graph.edges[2], (Edge{2, 3}));
}

TEST(ParseConfigTest, InfiniteEpsilonString) {
  const ExperimentConfig c = ParseConfig("dp.epsilon = inf\n");
  EXPECT_TRUE(std::isinf(c.epsilon));
  EXPECT_EQ(c.algorithm, Algorithm::kGossipUcb);
}

TEST(ParseConfigTest, Errors) {
  EXPECT_EQ(ParseCode("sim.N = 2\n"), ErrorCode::kValidationError);
  EXPECT_EQ(ParseCode("sim.M = 1\n"), ErrorCode::kValidationError);
  EXPECT_EQ(ParseCode("sim.algorithm = fed_ucb\ndp.epsilon = 0\n"),
            ErrorCode::kValidationError);
  EXPECT_EQ(ParseCode("graph = star\n"), ErrorCode::kValidationError);
  EXPECT_EQ(ParseCode("sim.colour = blue\n"), ErrorCode::kValidationError);
  EXPECT_EQ(ParseCode("sim.N 3\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("sim.N = three\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("sim.N = 3\nsim.N = 4\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("graph = 1-2, 2-x\n"), ErrorCode::kParseError);
  try {
    ParseConfig("sim.N = 2\n");
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).rfind("sim.N:", 0), 0u);
  }
  try {
    LoadConfig("/nonexistent/x.cfg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

TEST(SerializeConfigProperty, RoundTrip) {
  Rng rng(314);
  for (int iter = 0; iter < 500; ++iter) {
    ExperimentConfig c;
    c.num_agents = testing_util::UniformInt(rng, 3, 9);
    c.num_arms = testing_util::UniformInt(rng, 2, 6);
    c.horizon = testing_util::UniformInt(rng, 1, 100) * 100;
    c.trials = testing_util::UniformInt(rng, 1, 200);
    c.master_seed = rng();
    c.threads = testing_util::UniformInt(rng, 1, 8);
    c.band = rng() % 2 ? BandMode::kPerAgent : BandMode::kTrialMean;
    switch (rng() % 5) {
      case 0: c.graph.kind = GraphSpec::Kind::kComplete; break;
      case 1: c.graph.kind = GraphSpec::Kind::kPath; break;
      case 2: c.graph.kind = GraphSpec::Kind::kCycle; break;
      case 3:
        c.graph.kind = GraphSpec::Kind::kErdosRenyi;
        c.graph.p = 0.05 + 0.95 * Uniform01(rng);
        c.graph.seed = rng();
        break;
      default:
        c.graph.kind = GraphSpec::Kind::kEdges;
        c.graph.edges = testing_util::RandomConnectedEdges(rng, c.num_agents);
    }
    const int alg = static_cast<int>(rng() % 3);
    c.algorithm = static_cast<Algorithm>(alg);
    if (c.algorithm == Algorithm::kFedUcb && rng() % 2) {
      c.epsilon = 0.01 + 10.0 * Uniform01(rng);
      c.log_base = 1.5 + Uniform01(rng);
      c.decompose = rng() % 2 ? DecomposeMode::kWallclock : DecomposeMode::kPull;
    }
    if (rng() % 2) {
      std::vector<std::vector<double>> means(c.num_agents,
                                             std::vector<double>(c.num_arms));
      for (auto& row : means)
        for (double& v : row) v = Uniform01(rng);
      c.reward.means = means;
    }
    c.reward.kind = rng() % 2 ? RewardKind::kClampedGaussian : RewardKind::kBernoulli;
    c.reward.sigma = 0.1 + Uniform01(rng);
    c.reward.seed = rng();
    if (c.algorithm != Algorithm::kLocalUcb) {
      c.monitors = {rng() % 2 == 0, rng() % 2 == 0, rng() % 2 == 0,
                    rng() % 2 == 0, rng() % 2 == 0};
    }
    c.stride = rng() % 2 ? 100 : 0;
    ValidateConfig(c);
    const std::string text = SerializeConfig(c);
    const ExperimentConfig back = ParseConfig(text);
    ASSERT_EQ(back, c) << text;
    EXPECT_EQ(SerializeConfig(back), text);
  }
}

TEST(SetConfigValueTest, Overrides) {
  ExperimentConfig c;
  SetConfigValue(c, "sim.trials", "7");
  SetConfigValue(c, "sim.seed", "12345678901234");
  SetConfigValue(c, "dataset.csv", "/data/diabetic_data.csv");
  SetConfigValue(c, "dataset.split", "sequential");
  EXPECT_EQ(c.trials, 7);
  EXPECT_EQ(c.master_seed, 12345678901234u);
  EXPECT_EQ(c.dataset.split, SplitMode::kSequential);
  EXPECT_THROW(SetConfigValue(c, "dataset.split", "halves"), Error);
  EXPECT_EQ(ConfigKeys().size(), 26u);
}

}  // namespace
}  // namespace fedbandit
