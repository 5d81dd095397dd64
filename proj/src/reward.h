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

#ifndef FEDBANDIT_SRC_REWARD_H_
#define FEDBANDIT_SRC_REWARD_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "rng.h"

namespace fedbandit {

enum class RewardKind {
  kBernoulli,
  // mu + N(0, sigma^2) clamped to [0, 1]. The clamp biases the mean, so this
  // mode replicates experiments but is not used for mean-accuracy checks.
  kClampedGaussian,
  // Rewards replayed from per-(agent, arm) pools of observed {0,1} outcomes.
  kEmpiricalPool,
};

enum class ReplayMode { kSample, kStream };

// Heterogeneous reward environment. Agent i observes arm k with local mean
// mu_{i,k}; the global mean of arm k is the plain average over agents.
class RewardModel {
 public:
  using Pools = std::vector<std::vector<std::vector<uint8_t>>>;

  // local_means[i][k] in [0,1]. Requires N >= 3 and M >= 2.
  static RewardModel FromMeans(std::vector<std::vector<double>> local_means,
                               RewardKind kind = RewardKind::kBernoulli,
                               double sigma = 1.0);
  // pools[i][k] holds the {0,1} outcomes agent i can replay for arm k; local
  // means are the pool averages.
  static RewardModel FromPools(Pools pools, ReplayMode replay);

  int num_agents() const { return static_cast<int>(local_means_.size()); }
  int num_arms() const { return static_cast<int>(global_means_.size()); }
  RewardKind kind() const { return kind_; }
  double sigma() const { return sigma_; }
  ReplayMode replay() const { return replay_; }

  double local_mean(int agent, int arm) const {
    return local_means_[agent][arm];
  }
  const std::vector<std::vector<double>>& local_means() const {
    return local_means_;
  }
  const std::vector<double>& global_means() const { return global_means_; }
  // Lowest index among maximizers of the global mean.
  int optimal_arm() const { return optimal_arm_; }
  double best_mean() const { return global_means_[optimal_arm_]; }
  const std::vector<double>& gaps() const { return gaps_; }
  // Locally best arm of one agent (lowest index on ties).
  int local_optimal_arm(int agent) const;

  // Draws X_{i,k}. `ordinal` is the 1-based pull count of (agent, arm) and is
  // only consulted by stream replay.
  double Sample(int agent, int arm, Rng& rng, int64_t ordinal = 1) const;

 private:
  void Derive();

  std::vector<std::vector<double>> local_means_;
  std::vector<double> global_means_;
  std::vector<double> gaps_;
  int optimal_arm_ = 0;
  RewardKind kind_ = RewardKind::kBernoulli;
  double sigma_ = 1.0;
  ReplayMode replay_ = ReplayMode::kSample;
  std::shared_ptr<const Pools> pools_;
};

// Local means drawn i.i.d. uniform on [0,1]; arms keep their generated order.
RewardModel BuildSynthetic(int num_agents, int num_arms, Rng& rng,
                           RewardKind kind = RewardKind::kBernoulli,
                           double sigma = 1.0);

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_REWARD_H_
