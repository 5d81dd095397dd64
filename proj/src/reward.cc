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

#include "reward.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.h"

namespace fedbandit {
namespace {

void ValidateShape(const std::vector<std::vector<double>>& means) {
  if (means.size() < 3) {
    throw Error(ErrorCode::kTooFewAgents,
                "reward model needs at least 3 agents");
  }
  const size_t m = means.front().size();
  if (m < 2) {
    throw Error(ErrorCode::kValidationError,
                "reward model needs at least 2 arms");
  }
  for (const auto& row : means) {
    if (row.size() != m) {
      throw Error(ErrorCode::kValidationError,
                  "reward means must be a rectangular N x M matrix");
    }
    for (double mu : row) {
      if (!(mu >= 0.0 && mu <= 1.0)) {
        throw Error(ErrorCode::kValidationError,
                    "local mean outside [0,1]: " + std::to_string(mu));
      }
    }
  }
}

}  // namespace

RewardModel RewardModel::FromMeans(
    std::vector<std::vector<double>> local_means, RewardKind kind,
    double sigma) {
  if (kind == RewardKind::kEmpiricalPool) {
    throw Error(ErrorCode::kInvalidArgument,
                "empirical pools must be built with FromPools");
  }
  ValidateShape(local_means);
  if (kind == RewardKind::kClampedGaussian && !(sigma > 0.0)) {
    throw Error(ErrorCode::kValidationError, "reward.sigma must be > 0");
  }
  RewardModel model;
  model.local_means_ = std::move(local_means);
  model.kind_ = kind;
  model.sigma_ = sigma;
  model.Derive();
  return model;
}

RewardModel RewardModel::FromPools(Pools pools, ReplayMode replay) {
  std::vector<std::vector<double>> means;
  for (size_t i = 0; i < pools.size(); ++i) {
    std::vector<double> row;
    for (size_t k = 0; k < pools[i].size(); ++k) {
      const auto& pool = pools[i][k];
      if (pool.empty()) {
        throw Error(ErrorCode::kEmptyArm,
                    "agent " + std::to_string(i + 1) + " has no samples for arm " +
                        std::to_string(k + 1));
      }
      double sum = 0.0;
      for (uint8_t r : pool) sum += r;
      row.push_back(sum / static_cast<double>(pool.size()));
    }
    means.push_back(std::move(row));
  }
  ValidateShape(means);
  RewardModel model;
  model.local_means_ = std::move(means);
  model.kind_ = RewardKind::kEmpiricalPool;
  model.replay_ = replay;
  model.pools_ = std::make_shared<const Pools>(std::move(pools));
  model.Derive();
  return model;
}

void RewardModel::Derive() {
  const int n = num_agents();
  const size_t m = local_means_.front().size();
  global_means_.assign(m, 0.0);
  for (size_t k = 0; k < m; ++k) {
    double sum = 0.0;
    for (const auto& row : local_means_) sum += row[k];
    global_means_[k] = sum / n;
  }
  optimal_arm_ = static_cast<int>(
      std::max_element(global_means_.begin(), global_means_.end()) -
      global_means_.begin());
  gaps_.resize(m);
  for (size_t k = 0; k < m; ++k)
    gaps_[k] = global_means_[optimal_arm_] - global_means_[k];
}

int RewardModel::local_optimal_arm(int agent) const {
  const auto& row = local_means_[agent];
  return static_cast<int>(std::max_element(row.begin(), row.end()) -
                          row.begin());
}

double RewardModel::Sample(int agent, int arm, Rng& rng,
                           int64_t ordinal) const {
  switch (kind_) {
    case RewardKind::kBernoulli:
      return Uniform01(rng) < local_means_[agent][arm] ? 1.0 : 0.0;
    case RewardKind::kClampedGaussian: {
      std::normal_distribution<double> noise(0.0, sigma_);
      return std::clamp(local_means_[agent][arm] + noise(rng), 0.0, 1.0);
    }
    case RewardKind::kEmpiricalPool: {
      const auto& pool = (*pools_)[agent][arm];
      size_t idx;
      if (replay_ == ReplayMode::kStream) {
        idx = static_cast<size_t>((ordinal - 1) %
                                  static_cast<int64_t>(pool.size()));
      } else {
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        idx = pick(rng);
      }
      return pool[idx];
    }
  }
  return 0.0;
}

RewardModel BuildSynthetic(int num_agents, int num_arms, Rng& rng,
                           RewardKind kind, double sigma) {
  if (num_agents < 3) {
    throw Error(ErrorCode::kTooFewAgents,
                "synthetic rewards need at least 3 agents");
  }
  if (num_arms < 2) {
    throw Error(ErrorCode::kValidationError,
                "synthetic rewards need at least 2 arms");
  }
  std::vector<std::vector<double>> means(num_agents,
                                         std::vector<double>(num_arms));
  for (auto& row : means)
    for (double& mu : row) mu = Uniform01(rng);
  return RewardModel::FromMeans(std::move(means), kind, sigma);
}

}  // namespace fedbandit
