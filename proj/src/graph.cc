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

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "error.h"
#include "rng.h"

namespace fedbandit {

Graph BuildGraph(int num_agents, std::span<const Edge> edges) {
  if (num_agents < 3) {
    throw Error(ErrorCode::kTooFewAgents,
                "graph needs at least 3 agents, got " +
                    std::to_string(num_agents));
  }
  Graph g;
  g.num_agents_ = num_agents;
  g.neighbors_.assign(num_agents, {});
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= num_agents || e.b >= num_agents) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge endpoint out of range: (" + std::to_string(e.a + 1) +
                      "," + std::to_string(e.b + 1) + ")");
    }
    if (e.a == e.b) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at agent " + std::to_string(e.a + 1));
    }
    Edge norm{std::min(e.a, e.b), std::max(e.a, e.b)};
    if (!seen.emplace(norm.a, norm.b).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge (" + std::to_string(norm.a + 1) + "," +
                      std::to_string(norm.b + 1) + ")");
    }
    g.edges_.push_back(norm);
    g.neighbors_[norm.a].push_back(norm.b);
    g.neighbors_[norm.b].push_back(norm.a);
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());

  const size_t n = static_cast<size_t>(num_agents);
  g.distances_.assign(n * n, -1);
  for (int src = 0; src < num_agents; ++src) {
    int* row = &g.distances_[src * n];
    row[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors_[u]) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int v = 0; v < num_agents; ++v) {
      if (row[v] < 0) {
        throw Error(ErrorCode::kDisconnectedGraph,
                    "graph is disconnected: no path from agent " +
                        std::to_string(src + 1) + " to agent " +
                        std::to_string(v + 1));
      }
    }
  }
  return g;
}

Graph CompleteGraph(int num_agents) {
  std::vector<Edge> edges;
  for (int i = 0; i < num_agents; ++i)
    for (int j = i + 1; j < num_agents; ++j) edges.push_back({i, j});
  return BuildGraph(num_agents, edges);
}

Graph PathGraph(int num_agents) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < num_agents; ++i) edges.push_back({i, i + 1});
  return BuildGraph(num_agents, edges);
}

Graph CycleGraph(int num_agents) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < num_agents; ++i) edges.push_back({i, i + 1});
  if (num_agents >= 3) edges.push_back({0, num_agents - 1});
  return BuildGraph(num_agents, edges);
}

Graph ErdosRenyiGraph(int num_agents, double p, uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "erdos_renyi edge probability must be in (0, 1]");
  }
  constexpr int kMaxAttempts = 10000;
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (int i = 0; i < num_agents; ++i)
      for (int j = i + 1; j < num_agents; ++j)
        if (Uniform01(rng) < p) edges.push_back({i, j});
    try {
      return BuildGraph(num_agents, edges);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDisconnectedGraph) throw;
    }
  }
  throw Error(ErrorCode::kDisconnectedGraph,
              "erdos_renyi: no connected sample in " +
                  std::to_string(kMaxAttempts) + " attempts");
}

Eigen::MatrixXd EdgeGossipMatrix(int num_agents, const Edge& edge) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Identity(num_agents, num_agents);
  w(edge.a, edge.a) = 0.5;
  w(edge.b, edge.b) = 0.5;
  w(edge.a, edge.b) = 0.5;
  w(edge.b, edge.a) = 0.5;
  return w;
}

GossipMatrix BuildGossipMatrix(const Graph& graph) {
  const int n = graph.num_agents();
  const auto& edges = graph.edges();
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : edges) {
    laplacian(e.a, e.a) += 1.0;
    laplacian(e.b, e.b) += 1.0;
    laplacian(e.a, e.b) -= 1.0;
    laplacian(e.b, e.a) -= 1.0;
  }
  GossipMatrix out;
  out.num_edges = static_cast<int>(edges.size());
  out.w = Eigen::MatrixXd::Identity(n, n) -
          laplacian / (2.0 * static_cast<double>(edges.size()));
  out.lambda2 = Lambda2Of(out.w);
  return out;
}

double Lambda2Of(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "lambda2 needs a square matrix of size >= 2");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumericalFailure,
                "symmetric eigensolver did not converge");
  }
  // Eigenvalues come back in increasing order.
  const auto& ev = solver.eigenvalues();
  return ev(ev.size() - 2);
}

}  // namespace fedbandit
