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

#ifndef FEDBANDIT_SRC_GOSSIP_H_
#define FEDBANDIT_SRC_GOSSIP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "graph.h"
#include "rng.h"

namespace fedbandit {

struct GossipTick {
  int64_t t = 0;
  Edge active_edge;
};

// One edge, uniform over E.
GossipTick PickEdge(const Graph& graph, int64_t t, Rng& rng);

// theta(t) = W(t) theta(t-1) + delta for one arm. Both endpoints of the
// active edge read each other's t-1 value; everyone else only drifts by
// their own delta.
std::vector<double> GossipUpdate(std::span<const double> theta_prev,
                                 const Edge& active_edge,
                                 std::span<const double> delta);

// In-place form used by the simulator. `theta` and `delta` have one entry
// per agent.
void GossipUpdateInPlace(std::span<double> theta, const Edge& active_edge,
                         std::span<const double> delta);

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_GOSSIP_H_
