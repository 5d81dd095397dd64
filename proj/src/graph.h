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

#ifndef FEDBANDIT_SRC_GRAPH_H_
#define FEDBANDIT_SRC_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace fedbandit {

// Undirected edge between two agents, stored with a < b. Agent indices are
// 0-based in the library; configuration files use 1-based indices.
struct Edge {
  int a = 0;
  int b = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple, undirected, connected communication graph with all-pairs hop
// distances. Immutable after construction.
class Graph {
 public:
  int num_agents() const { return num_agents_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int agent) const {
    return neighbors_[agent];
  }
  int distance(int from, int to) const {
    return distances_[static_cast<size_t>(from) * num_agents_ + to];
  }

 private:
  friend Graph BuildGraph(int, std::span<const Edge>);

  int num_agents_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> distances_;  // row-major N x N
};

// Validates the edge list and computes BFS distances. Throws Error with
// kTooFewAgents, kSelfLoop, kDuplicateEdge, kInvalidArgument (endpoint out
// of range) or kDisconnectedGraph.
Graph BuildGraph(int num_agents, std::span<const Edge> edges);

Graph CompleteGraph(int num_agents);
Graph PathGraph(int num_agents);
Graph CycleGraph(int num_agents);
// G(N, p) resampled from the same seeded stream until connected.
Graph ErdosRenyiGraph(int num_agents, double p, uint64_t seed);

struct GossipMatrix {
  Eigen::MatrixXd w;
  double lambda2 = 0.0;
  int num_edges = 0;
};

// Expected one-tick gossip operator: the average over edges of
// I - (e_i - e_j)(e_i - e_j)^T / 2.
GossipMatrix BuildGossipMatrix(const Graph& graph);

// Second-largest eigenvalue of a symmetric matrix. Throws kNumericalFailure
// if the eigensolver does not converge.
double Lambda2Of(const Eigen::MatrixXd& matrix);

// Per-tick gossip matrix for a single active edge.
Eigen::MatrixXd EdgeGossipMatrix(int num_agents, const Edge& edge);

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_GRAPH_H_
