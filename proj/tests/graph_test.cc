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

#include "graph.h"

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "error.h"
#include "gossip.h"
#include "test_util.h"

namespace fedbandit {
namespace {

ErrorCode CodeOf(int n, std::vector<Edge> edges) {
  try {
    BuildGraph(n, edges);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

TEST(BuildGraphTest, TriangleHasUnitDistances) {
  const Graph g = BuildGraph(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(g.distance(i, j), i == j ? 0 : 1);
  }
}

TEST(BuildGraphTest, PathDistance) {
  const Graph g = BuildGraph(3, std::vector<Edge>{{0, 1}, {1, 2}});
  EXPECT_EQ(g.distance(0, 2), 2);
  EXPECT_EQ(g.distance(2, 0), 2);
  EXPECT_EQ(g.neighbors(1), (std::vector<int>{0, 2}));
}

TEST(BuildGraphTest, RejectsBadInput) {
  EXPECT_EQ(CodeOf(4, {{0, 1}, {2, 3}}), ErrorCode::kDisconnectedGraph);
  EXPECT_EQ(CodeOf(3, {{0, 1}, {1, 1}, {1, 2}}), ErrorCode::kSelfLoop);
  EXPECT_EQ(CodeOf(3, {{0, 1}, {1, 0}, {1, 2}}), ErrorCode::kDuplicateEdge);
  EXPECT_EQ(CodeOf(2, {{0, 1}}), ErrorCode::kTooFewAgents);
  EXPECT_EQ(CodeOf(3, {{0, 1}, {1, 3}}), ErrorCode::kInvalidArgument);
}

TEST(GeneratorTest, Shapes) {
  EXPECT_EQ(CompleteGraph(5).edges().size(), 10u);
  EXPECT_EQ(PathGraph(5).edges().size(), 4u);
  EXPECT_EQ(CycleGraph(5).edges().size(), 5u);
  EXPECT_EQ(PathGraph(5).distance(0, 4), 4);
  EXPECT_EQ(CycleGraph(6).distance(0, 3), 3);
}

TEST(GeneratorTest, ErdosRenyiIsSeededAndConnected) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Graph a = ErdosRenyiGraph(8, 0.3, seed);
    const Graph b = ErdosRenyiGraph(8, 0.3, seed);
    EXPECT_EQ(a.edges(), b.edges());
    for (int j = 0; j < 8; ++j) EXPECT_LT(a.distance(0, j), 8);
  }
}

TEST(GossipMatrixTest, TriangleEntries) {
  const GossipMatrix m = BuildGossipMatrix(CompleteGraph(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(m.w(i, j), i == j ? 2.0 / 3.0 : 1.0 / 6.0, 1e-15);
    }
  }
  EXPECT_NEAR(m.lambda2, 0.5, 1e-12);
  EXPECT_EQ(m.num_edges, 3);
}

TEST(GossipMatrixTest, PathEntries) {
  const GossipMatrix m = BuildGossipMatrix(PathGraph(3));
  EXPECT_NEAR(m.w(0, 0), 0.75, 1e-15);
  EXPECT_NEAR(m.w(1, 1), 0.5, 1e-15);
  EXPECT_NEAR(m.w(2, 2), 0.75, 1e-15);
  EXPECT_NEAR(m.w(0, 1), 0.25, 1e-15);
  EXPECT_NEAR(m.w(1, 2), 0.25, 1e-15);
  EXPECT_EQ(m.w(0, 2), 0.0);
}

TEST(Lambda2Test, CompleteGraphClosedForm) {
  for (int n = 3; n <= 12; ++n) {
    EXPECT_NEAR(BuildGossipMatrix(CompleteGraph(n)).lambda2,
                1.0 - 1.0 / (n - 1), 1e-12)
        << "N=" << n;
  }
}

TEST(Lambda2Test, PathOfTen) {
  // Path Laplacian spectrum 2 - 2 cos(pi k / N); |E| = 9.
  const double expected =
      1.0 - (2.0 - 2.0 * std::cos(std::numbers::pi / 10.0)) / 18.0;
  const double got = BuildGossipMatrix(PathGraph(10)).lambda2;
  EXPECT_NEAR(got, expected, 1e-12);
  EXPECT_NEAR(got, 0.9946, 1e-4);
}

TEST(Lambda2Test, RejectsNonSquare) {
  EXPECT_THROW(Lambda2Of(Eigen::MatrixXd::Zero(2, 3)), Error);
}

TEST(GossipMatrixProperty, RandomConnectedGraphs) {
  Rng rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const Graph g = testing_util::RandomConnectedGraph(rng, 3, 12);
    const GossipMatrix m = BuildGossipMatrix(g);
    const int n = g.num_agents();
    EXPECT_LT((m.w - m.w.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(m.w.row(i).sum(), 1.0, 1e-12);
      EXPECT_NEAR(m.w.col(i).sum(), 1.0, 1e-12);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.w);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10);
    EXPECT_NEAR(es.eigenvalues().maxCoeff(), 1.0, 1e-10);
    EXPECT_LT(m.lambda2, 1.0);
  }
}

TEST(GossipMatrixProperty, EqualsAverageOfSampledTickMatrices) {
  Rng rng(5);
  for (int iter = 0; iter < 3; ++iter) {
    const Graph g = testing_util::RandomConnectedGraph(rng, 3, 6);
    const int n = g.num_agents();
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    constexpr int kDraws = 100000;
    for (int s = 0; s < kDraws; ++s) {
      sum += EdgeGossipMatrix(n, PickEdge(g, s + 1, rng).active_edge);
    }
    sum /= kDraws;
    EXPECT_LT((sum - BuildGossipMatrix(g).w).cwiseAbs().maxCoeff(), 5e-3);
  }
}

TEST(GraphProperty, BfsMatchesFloydWarshall) {
  Rng rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const Graph g = testing_util::RandomConnectedGraph(rng, 3, 8);
    const int n = g.num_agents();
    constexpr int kInf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (const Edge& e : g.edges()) d[e.a][e.b] = d[e.b][e.a] = 1;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        ASSERT_EQ(g.distance(i, j), d[i][j]);
        EXPECT_EQ(g.distance(i, j), g.distance(j, i));
        EXPECT_LT(g.distance(i, j), n);
      }
    }
  }
}

}  // namespace
}  // namespace fedbandit
