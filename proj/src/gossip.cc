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

#include "gossip.h"

#include "error.h"

namespace fedbandit {

GossipTick PickEdge(const Graph& graph, int64_t t, Rng& rng) {
  const auto& edges = graph.edges();
  std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
  return GossipTick{t, edges[pick(rng)]};
}

void GossipUpdateInPlace(std::span<double> theta, const Edge& active_edge,
                         std::span<const double> delta) {
  if (theta.size() != delta.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "gossip update: theta and delta sizes differ");
  }
  const double avg = 0.5 * (theta[active_edge.a] + theta[active_edge.b]);
  theta[active_edge.a] = avg;
  theta[active_edge.b] = avg;
  for (size_t i = 0; i < theta.size(); ++i) theta[i] += delta[i];
}

std::vector<double> GossipUpdate(std::span<const double> theta_prev,
                                 const Edge& active_edge,
                                 std::span<const double> delta) {
  std::vector<double> next(theta_prev.begin(), theta_prev.end());
  GossipUpdateInPlace(next, active_edge, delta);
  return next;
}

}  // namespace fedbandit
