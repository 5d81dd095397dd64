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

#ifndef FEDBANDIT_SRC_SIMULATION_H_
#define FEDBANDIT_SRC_SIMULATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agent.h"
#include "graph.h"
#include "reward.h"

namespace fedbandit {

struct GraphSpec {
  enum class Kind { kComplete, kPath, kCycle, kErdosRenyi, kEdges };
  Kind kind = Kind::kComplete;
  double p = 0.5;
  uint64_t seed = 0;
  std::vector<Edge> edges;  // 0-based, kEdges only

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct RewardSpec {
  RewardKind kind = RewardKind::kBernoulli;
  double sigma = 1.0;
  // Explicit N x M local means; drawn uniformly from `seed` when absent.
  std::optional<std::vector<std::vector<double>>> means;
  uint64_t seed = 0;

  friend bool operator==(const RewardSpec&, const RewardSpec&) = default;
};

enum class SplitMode { kRandom, kSequential };

struct DatasetSpec {
  std::string csv;  // empty: no dataset
  SplitMode split = SplitMode::kRandom;
  uint64_t seed = 0;
  ReplayMode replay = ReplayMode::kSample;

  friend bool operator==(const DatasetSpec&, const DatasetSpec&) = default;
};

enum class Algorithm { kGossipUcb, kFedUcb, kLocalUcb };
enum class BandMode { kTrialMean, kPerAgent };

struct MonitorFlags {
  bool information = false;  // exact propagation of the max-count estimate
  bool local = false;        // n > n_tilde(t+1) - 3MN
  bool global = false;       // max_j n_j <= 2 n_i once n_i >= (3M+1)N
  bool conservation = false; // sum theta == sum x_tilde
  bool strict = false;       // violations become kMonitorViolation errors

  bool any() const { return information || local || global || conservation; }
  friend bool operator==(const MonitorFlags&, const MonitorFlags&) = default;
};

struct ExperimentConfig {
  GraphSpec graph;
  int num_agents = 3;
  int num_arms = 2;
  int64_t horizon = 1000;
  int trials = 100;
  Algorithm algorithm = Algorithm::kGossipUcb;
  double epsilon = kInfiniteEpsilon;
  double log_base = 2.0;
  DecomposeMode decompose = DecomposeMode::kPull;
  RewardSpec reward;
  DatasetSpec dataset;
  uint64_t master_seed = 0;
  int64_t stride = 0;  // 0: gcd(horizon, 100)
  BandMode band = BandMode::kTrialMean;
  int threads = 1;
  MonitorFlags monitors;

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

// Throws kValidationError with a field-level message.
void ValidateConfig(const ExperimentConfig& config);
int64_t EffectiveStride(const ExperimentConfig& config);
std::vector<int64_t> Checkpoints(const ExperimentConfig& config);

// Immutable, shareable inputs of every trial.
struct Environment {
  Graph graph;
  GossipMatrix gossip;
  RewardModel rewards;
};

Graph BuildGraphFromSpec(const GraphSpec& spec, int num_agents);
Environment BuildEnvironment(const ExperimentConfig& config);

struct Violation {
  int agent = 0;  // 0-based
  int arm = 0;    // 0-based
  int64_t t = 0;
  std::string detail;
};

struct MonitorVerdict {
  std::string name;
  bool enabled = false;
  int64_t checks = 0;
  std::optional<Violation> first_violation;

  bool passed() const { return !first_violation.has_value(); }
};

// Names: "information_propagation", "local_consistency",
// "global_consistency", "gossip_conservation".
std::vector<MonitorVerdict> MakeVerdicts(const MonitorFlags& flags);

// Snapshot counts n(tau) for the last N ticks. n(0) holds the
// initialization counts and n(tau) = 0 for tau < 0.
class CountHistory {
 public:
  CountHistory(int num_agents, int num_arms, int depth);

  void Push(int64_t tau, const std::vector<std::vector<int64_t>>& counts);
  int64_t At(int agent, int arm, int64_t tau) const;
  int64_t latest() const { return latest_; }

 private:
  int num_agents_;
  int num_arms_;
  int depth_;
  int64_t latest_ = -1;
  std::vector<std::vector<std::vector<int64_t>>> ring_;
};

// Global state at the end of tick t, visible only to the harness.
struct MonitorInput {
  int64_t t = 0;
  const Graph* graph = nullptr;
  const CountHistory* history = nullptr;  // holds n(t) = start-of-tick counts
  const std::vector<std::vector<int64_t>>* n_tilde_next = nullptr;
  const std::vector<AgentState>* agents = nullptr;  // post-gossip
};

// Read-only checks; records the first violation per monitor.
void RunMonitors(const MonitorInput& input, std::vector<MonitorVerdict>& out);

struct TrialTrace {
  uint64_t seed = 0;
  std::vector<int64_t> checkpoints;
  std::vector<std::vector<double>> regret;  // [agent][checkpoint]
  std::vector<std::vector<int64_t>> pulls;  // [agent][arm], incl. init pull
  std::vector<MonitorVerdict> monitors;
};

TrialTrace RunTrial(const ExperimentConfig& config, const Environment& env,
                    uint64_t trial_seed);

struct ExperimentResult {
  std::vector<int64_t> checkpoints;
  std::vector<double> mean;  // over trials and agents
  std::vector<double> min;   // per band mode
  std::vector<double> max;
  BandMode band = BandMode::kTrialMean;
  std::vector<TrialTrace> trials;
  double lambda2 = 0.0;
  std::vector<double> global_means;

  bool monitors_passed() const;
};

// Trials run on config.threads workers; the result does not depend on the
// thread count.
ExperimentResult RunExperiment(const ExperimentConfig& config);
ExperimentResult RunExperiment(const ExperimentConfig& config,
                               const Environment& env);
// Recomputes mean/min/max from the trials with the given band mode.
void Aggregate(ExperimentResult& result, BandMode band);

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_SIMULATION_H_
