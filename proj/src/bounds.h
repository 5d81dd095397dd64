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

// Closed-form regret upper bounds and their constants, used to overlay
// theory on simulated regret curves. All logarithms are natural.

#ifndef FEDBANDIT_SRC_BOUNDS_H_
#define FEDBANDIT_SRC_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "agent.h"

namespace fedbandit {

struct BoundParams {
  int num_agents = 3;
  int num_arms = 2;
  double lambda2 = 0.5;
  int64_t horizon = 1;
  double epsilon = kInfiniteEpsilon;
  std::vector<double> gaps;  // one per arm; the optimal arm has gap 0
};

// (3M-1)N + 2 pi^2/3 + 2 l^(1/12) / ((1 - l^(1/3)) (1 - l^(1/12))).
double Alpha2(int num_agents, int num_arms, double lambda2);
// Alpha2 + 4N.
double Alpha3(int num_agents, int num_arms, double lambda2);

// Mixing threshold: the smallest integer L >= 1 such that
// N t lambda2^(t/6) / (1 - lambda2^(1/3)) < 1 for every t >= L.
// Throws kInvalidArgument outside lambda2 in (0,1), N >= 1, and kOverflow
// when L would exceed 1e9.
int64_t ComputeL(double lambda2, int num_agents);

struct ArmBound {
  enum class Status { kOptimal, kDefined, kGapTooSmall };
  Status status = Status::kOptimal;
  double gap = 0.0;
  double value = 0.0;  // kDefined only
};

struct RegretBound {
  std::vector<ArmBound> per_arm;
  int64_t mixing_threshold = 0;  // L

  // Sum over suboptimal arms; nullopt when any arm has gap <= 2 alpha1.
  std::optional<double> total() const;
  // Same, but throws kGapTooSmall instead of returning nullopt.
  double TotalOrThrow() const;
};

// Per-agent bound on R_i(T) for gossip UCB.
RegretBound RegretBoundGossip(const BoundParams& params);
// Per-agent bound on R_i(T) for the private variant (adds 4N ln T + 4N per
// arm relative to the gossip bound's structure).
RegretBound RegretBoundFed(const BoundParams& params);

struct AsymptoticOrder {
  enum class Regime { kLogHorizon, kGraphMixing };
  Regime regime = Regime::kLogHorizon;
  double horizon_term = 0.0;  // N M ln T, or N M ln^2.5 T / eps
  double mixing_term = 0.0;   // M log_{1/l} N, or M (N ln T + log_{1/l} N)
  // Horizon at which the two terms are equal (1 if the horizon term already
  // dominates at T = 1).
  double crossover_horizon = 1.0;
};

// Leading-order regime of the bound. Uses the private form when
// params.epsilon is finite.
AsymptoticOrder ComputeAsymptoticOrder(const BoundParams& params);

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_BOUNDS_H_
