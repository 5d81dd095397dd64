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

#include <algorithm>
#include <cmath>
#include <string>

#include "error.h"

namespace fedbandit {
namespace {

void RequirePositive(int64_t n, int64_t t) {
  if (n < 1 || t < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "confidence radius needs n >= 1 and t >= 1");
  }
}

}  // namespace

double Alpha1(int num_agents) {
  return 64.0 / std::pow(static_cast<double>(num_agents), 17.0);
}

double ConfidenceGossipFromLog(double n, double log_t, int num_agents) {
  return std::sqrt(2.0 * num_agents * log_t / n) + Alpha1(num_agents);
}

double ConfidenceGossip(int64_t n, int64_t t, int num_agents) {
  RequirePositive(n, t);
  return ConfidenceGossipFromLog(static_cast<double>(n),
                                 std::log(static_cast<double>(t)), num_agents);
}

double ConfidenceFed(int64_t n, int64_t t, int64_t horizon, int num_agents,
                     double epsilon) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidEpsilon, "epsilon must be > 0");
  }
  RequirePositive(n, t);
  if (horizon < 1) {
    throw Error(ErrorCode::kInvalidArgument, "horizon must be >= 1");
  }
  if (std::isinf(epsilon)) return ConfidenceGossip(n, t, num_agents);
  const double nn = static_cast<double>(n);
  const double log_t = std::log(static_cast<double>(t));
  const double log_horizon = std::log(static_cast<double>(horizon));
  const double dp_term = 128.0 * num_agents * log_horizon * log_horizon *
                         log_t * std::log(nn) / (nn * nn * epsilon * epsilon);
  return Alpha1(num_agents) +
         std::sqrt(2.0 * num_agents * (dp_term + 1.0 / nn) * log_t);
}

double ConfidenceUcb1(int64_t n, int64_t t) {
  RequirePositive(n, t);
  return std::sqrt(2.0 * std::log(static_cast<double>(t)) /
                   static_cast<double>(n));
}

double ConfidenceRule::operator()(int64_t n, int64_t t) const {
  switch (kind) {
    case Kind::kGossip:
      return ConfidenceGossip(n, t, num_agents);
    case Kind::kFed:
      return ConfidenceFed(n, t, horizon, num_agents, epsilon);
    case Kind::kUcb1:
      return ConfidenceUcb1(n, t);
  }
  return 0.0;
}

AgentState InitializeAgent(int id, std::span<const double> first_rewards,
                           const PrivacySettings& privacy, Rng& noise_rng) {
  const size_t m = first_rewards.size();
  AgentState s;
  s.id = id;
  s.privacy = privacy;
  s.n.assign(m, 1);
  s.n_tilde.assign(m, 1);
  s.sums.assign(first_rewards.begin(), first_rewards.end());
  s.x_tilde.assign(first_rewards.begin(), first_rewards.end());
  if (privacy.enabled) {
    const double scale =
        NoiseScale(privacy.epsilon, privacy.horizon, privacy.log_base);
    s.streams.assign(m, PrivateStream(scale));
    for (size_t k = 0; k < m; ++k) {
      s.streams[k].Append(first_rewards[k]);
      s.x_tilde[k] = s.streams[k].NoisyMean(1, noise_rng);
    }
  }
  s.theta = s.x_tilde;
  return s;
}

std::vector<int64_t> UpdateTildeN(
    std::span<const int64_t> own_n,
    const std::vector<std::span<const int64_t>>& neighbor_tilde_n) {
  std::vector<int64_t> out(own_n.begin(), own_n.end());
  for (const auto& nb : neighbor_tilde_n) {
    for (size_t k = 0; k < out.size(); ++k) out[k] = std::max(out[k], nb[k]);
  }
  return out;
}

std::vector<int> LaggingArms(std::span<const int64_t> n,
                             std::span<const int64_t> n_tilde,
                             int num_agents) {
  std::vector<int> out;
  for (size_t k = 0; k < n.size(); ++k)
    if (n[k] < n_tilde[k] - num_agents) out.push_back(static_cast<int>(k));
  return out;
}

int SelectArm(std::span<const double> estimates, std::span<const int64_t> n,
              int64_t t, const ConfidenceRule& radius,
              std::span<const int> lagging, Rng& rng) {
  if (!lagging.empty()) return SelectArm(estimates, {}, lagging, rng);
  std::vector<double> radii(estimates.size());
  for (size_t k = 0; k < radii.size(); ++k) radii[k] = radius(n[k], t);
  return SelectArm(estimates, radii, lagging, rng);
}

int SelectArm(std::span<const double> estimates,
              std::span<const double> radii, std::span<const int> lagging,
              Rng& rng) {
  if (!lagging.empty()) {
    std::uniform_int_distribution<size_t> pick(0, lagging.size() - 1);
    return lagging[pick(rng)];
  }
  int best = 0;
  double best_q = -std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < estimates.size(); ++k) {
    const double q = estimates[k] + radii[k];
    if (q > best_q) {
      best_q = q;
      best = static_cast<int>(k);
    }
  }
  return best;
}

void RecordObservation(AgentState& state, int arm, double reward,
                       Rng& noise_rng) {
  if (!(reward >= 0.0 && reward <= 1.0)) {
    throw Error(ErrorCode::kRewardOutOfRange,
                "reward outside [0,1]: " + std::to_string(reward));
  }
  const size_t k = static_cast<size_t>(arm);
  ++state.n[k];
  state.sums[k] += reward;
  if (!state.privacy.enabled) {
    state.x_tilde[k] = state.sums[k] / static_cast<double>(state.n[k]);
    return;
  }
  if (state.privacy.mode == DecomposeMode::kWallclock) {
    for (size_t j = 0; j < state.streams.size(); ++j)
      state.streams[j].Append(j == k ? reward : 0.0);
  } else {
    state.streams[k].Append(reward);
  }
  state.x_tilde[k] = state.streams[k].NoisyMean(state.n[k], noise_rng);
}

}  // namespace fedbandit
