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

#ifndef FEDBANDIT_SRC_AGENT_H_
#define FEDBANDIT_SRC_AGENT_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "privacy.h"
#include "rng.h"

namespace fedbandit {

inline constexpr double kInfiniteEpsilon =
    std::numeric_limits<double>::infinity();

// 64 / N^17, the bias allowance added to every confidence radius.
double Alpha1(int num_agents);

// sqrt(2 N ln t / n) + alpha1(N). Natural log; t = 1 gives alpha1 alone.
double ConfidenceGossip(int64_t n, int64_t t, int num_agents);
// Same radius with ln t supplied directly and a real-valued count.
double ConfidenceGossipFromLog(double n, double log_t, int num_agents);

// alpha1 + sqrt(2N (128 N ln^2 T ln t ln n / (n^2 eps^2) + 1/n) ln t).
// With eps = infinity this equals ConfidenceGossip. Throws kInvalidEpsilon
// for eps <= 0.
double ConfidenceFed(int64_t n, int64_t t, int64_t horizon, int num_agents,
                     double epsilon);

// Plain UCB1 radius sqrt(2 ln t / n), used by the local baseline.
double ConfidenceUcb1(int64_t n, int64_t t);

// Which confidence radius an agent uses.
struct ConfidenceRule {
  enum class Kind { kGossip, kFed, kUcb1 };
  Kind kind = Kind::kGossip;
  int num_agents = 3;
  int64_t horizon = 1;
  double epsilon = kInfiniteEpsilon;

  double operator()(int64_t n, int64_t t) const;
};

enum class DecomposeMode { kPull, kWallclock };

struct PrivacySettings {
  bool enabled = false;
  double epsilon = kInfiniteEpsilon;
  double log_base = 2.0;
  DecomposeMode mode = DecomposeMode::kPull;
  int64_t horizon = 1;
};

// Per-agent bandit state. Vectors are indexed by arm.
struct AgentState {
  int id = 0;
  std::vector<int64_t> n;        // own pull counts
  std::vector<int64_t> n_tilde;  // estimate of the network-wide max count
  std::vector<double> x_tilde;   // (possibly noisy) empirical means
  std::vector<double> theta;     // gossip estimates
  std::vector<double> sums;      // clean reward sums
  std::vector<PrivateStream> streams;  // DP mode only
  PrivacySettings privacy;

  int num_arms() const { return static_cast<int>(n.size()); }
};

// Initialization round: one pull of every arm, counts set to 1,
// theta = x_tilde = first observation (noised in DP mode, where it is
// stream position 1 of each arm).
AgentState InitializeAgent(int id, std::span<const double> first_rewards,
                           const PrivacySettings& privacy, Rng& noise_rng);

// Elementwise max of own counts and the neighbors' estimates.
std::vector<int64_t> UpdateTildeN(
    std::span<const int64_t> own_n,
    const std::vector<std::span<const int64_t>>& neighbor_tilde_n);

// Arms k with n_k < n_tilde_k - N (strict).
std::vector<int> LaggingArms(std::span<const int64_t> n,
                             std::span<const int64_t> n_tilde,
                             int num_agents);

// Uniform member of `lagging` when it is nonempty; otherwise the argmax of
// estimate_k + radius(n_k, t), lowest index on ties.
int SelectArm(std::span<const double> estimates, std::span<const int64_t> n,
              int64_t t, const ConfidenceRule& radius,
              std::span<const int> lagging, Rng& rng);
// Same rule with the radii already evaluated per arm.
int SelectArm(std::span<const double> estimates,
              std::span<const double> radii, std::span<const int> lagging,
              Rng& rng);

// Increments n[arm] and refreshes x_tilde[arm]. In DP mode the mean is
// re-released from the arm's private stream; other arms carry forward.
// Throws kRewardOutOfRange if reward is outside [0,1].
void RecordObservation(AgentState& state, int arm, double reward,
                       Rng& noise_rng);

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_AGENT_H_
