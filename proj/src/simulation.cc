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

#include "simulation.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include "dataset.h"
#include "error.h"
#include "gossip.h"
#include "rng.h"

namespace fedbandit {
namespace {

[[noreturn]] void Invalid(const std::string& field, const std::string& msg) {
  throw Error(ErrorCode::kValidationError, field + ": " + msg);
}

constexpr double kConservationTolerance = 1e-9;

}  // namespace

void ValidateConfig(const ExperimentConfig& c) {
  if (c.num_agents < 3) Invalid("sim.N", "need at least 3 agents");
  if (c.num_arms < 2) Invalid("sim.M", "need at least 2 arms");
  if (c.horizon < 1) Invalid("sim.T", "horizon must be >= 1");
  if (c.trials < 1) Invalid("sim.trials", "need at least 1 trial");
  if (c.threads < 1) Invalid("sim.threads", "need at least 1 thread");
  if (!(c.epsilon > 0.0)) Invalid("dp.epsilon", "must be > 0 or inf");
  if (!(c.log_base > 1.0)) Invalid("dp.log_base", "must be > 1");
  if (c.algorithm != Algorithm::kFedUcb && !std::isinf(c.epsilon)) {
    Invalid("dp.epsilon", "a finite epsilon requires sim.algorithm=fed_ucb");
  }
  if (c.algorithm == Algorithm::kLocalUcb && c.monitors.any()) {
    Invalid("monitor", "consistency monitors need gossip_ucb or fed_ucb");
  }
  if (c.stride < 0) Invalid("sim.stride", "must be >= 1");
  if (c.stride > 0 && c.horizon % c.stride != 0) {
    Invalid("sim.stride", "must divide sim.T");
  }
  if (c.graph.kind == GraphSpec::Kind::kErdosRenyi &&
      !(c.graph.p > 0.0 && c.graph.p <= 1.0)) {
    Invalid("graph", "erdos_renyi probability must be in (0, 1]");
  }
  if (c.reward.kind == RewardKind::kClampedGaussian && !(c.reward.sigma > 0.0)) {
    Invalid("reward.sigma", "must be > 0");
  }
  if (c.reward.kind == RewardKind::kEmpiricalPool && c.dataset.csv.empty()) {
    Invalid("reward.kind", "empirical rewards need dataset.csv");
  }
  if (c.reward.means) {
    const auto& m = *c.reward.means;
    if (static_cast<int>(m.size()) != c.num_agents) {
      Invalid("reward.means", "expected " + std::to_string(c.num_agents) +
                                  " rows (one per agent)");
    }
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != c.num_arms) {
        Invalid("reward.means", "expected " + std::to_string(c.num_arms) +
                                    " columns (one per arm)");
      }
      for (double mu : row)
        if (!(mu >= 0.0 && mu <= 1.0)) Invalid("reward.means", "values must lie in [0,1]");
    }
  }
  if (!c.dataset.csv.empty() && c.num_arms != kDiabetesArms) {
    Invalid("sim.M", "the diabetes dataset defines exactly 5 arms");
  }
}

int64_t EffectiveStride(const ExperimentConfig& config) {
  return config.stride > 0 ? config.stride : std::gcd(config.horizon, int64_t{100});
}

std::vector<int64_t> Checkpoints(const ExperimentConfig& config) {
  const int64_t stride = EffectiveStride(config);
  std::vector<int64_t> out;
  for (int64_t t = stride; t <= config.horizon; t += stride) out.push_back(t);
  return out;
}

Graph BuildGraphFromSpec(const GraphSpec& spec, int num_agents) {
  switch (spec.kind) {
    case GraphSpec::Kind::kComplete:
      return CompleteGraph(num_agents);
    case GraphSpec::Kind::kPath:
      return PathGraph(num_agents);
    case GraphSpec::Kind::kCycle:
      return CycleGraph(num_agents);
    case GraphSpec::Kind::kErdosRenyi:
      return ErdosRenyiGraph(num_agents, spec.p, spec.seed);
    case GraphSpec::Kind::kEdges:
      return BuildGraph(num_agents, spec.edges);
  }
  throw Error(ErrorCode::kInternal, "unknown graph kind");
}

Environment BuildEnvironment(const ExperimentConfig& config) {
  ValidateConfig(config);
  Graph graph = BuildGraphFromSpec(config.graph, config.num_agents);
  GossipMatrix gossip = BuildGossipMatrix(graph);
  auto rewards = [&]() -> RewardModel {
    if (!config.dataset.csv.empty()) {
      DatasetEnv data = LoadDiabetes(config.dataset.csv, config.num_agents,
                                     config.dataset.split, config.dataset.seed);
      return RewardModel::FromPools(std::move(data.pools),
                                    config.dataset.replay);
    }
    if (config.reward.means) {
      return RewardModel::FromMeans(*config.reward.means, config.reward.kind,
                                    config.reward.sigma);
    }
    Rng rng(config.reward.seed);
    return BuildSynthetic(config.num_agents, config.num_arms, rng,
                          config.reward.kind, config.reward.sigma);
  }();
  return Environment{std::move(graph), std::move(gossip), std::move(rewards)};
}

std::vector<MonitorVerdict> MakeVerdicts(const MonitorFlags& flags) {
  std::vector<MonitorVerdict> out(4);
  out[0].name = "information_propagation";
  out[0].enabled = flags.information;
  out[1].name = "local_consistency";
  out[1].enabled = flags.local;
  out[2].name = "global_consistency";
  out[2].enabled = flags.global;
  out[3].name = "gossip_conservation";
  out[3].enabled = flags.conservation;
  return out;
}

CountHistory::CountHistory(int num_agents, int num_arms, int depth)
    : num_agents_(num_agents),
      num_arms_(num_arms),
      depth_(depth),
      ring_(depth, std::vector<std::vector<int64_t>>(
                       num_agents, std::vector<int64_t>(num_arms, 0))) {}

void CountHistory::Push(int64_t tau,
                        const std::vector<std::vector<int64_t>>& counts) {
  if (tau != latest_ + 1) {
    throw Error(ErrorCode::kInternal, "count history must be pushed in order");
  }
  ring_[static_cast<size_t>(tau % depth_)] = counts;
  latest_ = tau;
}

int64_t CountHistory::At(int agent, int arm, int64_t tau) const {
  if (tau < 0) return 0;
  if (tau > latest_ || tau <= latest_ - depth_) {
    throw Error(ErrorCode::kInternal, "count history lookup out of window");
  }
  return ring_[static_cast<size_t>(tau % depth_)][agent][arm];
}

void RunMonitors(const MonitorInput& in, std::vector<MonitorVerdict>& out) {
  const Graph& graph = *in.graph;
  const auto& agents = *in.agents;
  const auto& tilde_next = *in.n_tilde_next;
  const CountHistory& hist = *in.history;
  const int n_agents = graph.num_agents();
  const int m = agents.front().num_arms();
  const int64_t t = in.t;
  auto fail = [&](MonitorVerdict& v, int i, int k, std::string detail) {
    if (!v.first_violation) v.first_violation = Violation{i, k, t, std::move(detail)};
  };

  MonitorVerdict& info = out[0];
  if (info.enabled) {
    for (int i = 0; i < n_agents; ++i) {
      for (int k = 0; k < m; ++k) {
        int64_t expected = 0;
        for (int j = 0; j < n_agents; ++j)
          expected = std::max(expected, hist.At(j, k, t - graph.distance(j, i)));
        ++info.checks;
        if (tilde_next[i][k] != expected) {
          fail(info, i, k,
               "n_tilde(t+1)=" + std::to_string(tilde_next[i][k]) +
                   " but max_j n_j(t-d_ji)=" + std::to_string(expected));
        }
      }
    }
  }

  MonitorVerdict& local = out[1];
  if (local.enabled) {
    const int64_t slack = 3LL * m * n_agents;
    for (int i = 0; i < n_agents; ++i) {
      for (int k = 0; k < m; ++k) {
        const int64_t n_ik = hist.At(i, k, t);
        ++local.checks;
        if (!(n_ik > tilde_next[i][k] - slack)) {
          fail(local, i, k,
               "n=" + std::to_string(n_ik) + " <= n_tilde(t+1) - 3MN = " +
                   std::to_string(tilde_next[i][k] - slack));
        }
      }
    }
  }

  MonitorVerdict& global = out[2];
  if (global.enabled) {
    const int64_t threshold = (3LL * m + 1) * n_agents;
    for (int k = 0; k < m; ++k) {
      int64_t max_n = 0;
      for (int j = 0; j < n_agents; ++j) max_n = std::max(max_n, hist.At(j, k, t));
      for (int i = 0; i < n_agents; ++i) {
        const int64_t n_ik = hist.At(i, k, t);
        if (n_ik < threshold) continue;
        ++global.checks;
        if (max_n > 2 * n_ik) {
          fail(global, i, k,
               "max_j n_j=" + std::to_string(max_n) + " > 2n_i=" +
                   std::to_string(2 * n_ik));
        }
      }
    }
  }

  MonitorVerdict& cons = out[3];
  if (cons.enabled) {
    for (int k = 0; k < m; ++k) {
      double sum_theta = 0.0;
      double sum_x = 0.0;
      for (const AgentState& a : agents) {
        sum_theta += a.theta[k];
        sum_x += a.x_tilde[k];
      }
      ++cons.checks;
      if (!(std::fabs(sum_theta - sum_x) < kConservationTolerance)) {
        fail(cons, 0, k,
             "|sum theta - sum x_tilde| = " +
                 std::to_string(std::fabs(sum_theta - sum_x)));
      }
    }
  }
}

TrialTrace RunTrial(const ExperimentConfig& config, const Environment& env,
                    uint64_t trial_seed) {
  const Graph& graph = env.graph;
  const RewardModel& rewards = env.rewards;
  const int n_agents = graph.num_agents();
  const int m = rewards.num_arms();
  const int64_t horizon = config.horizon;
  const int64_t stride = EffectiveStride(config);
  const bool cooperative = config.algorithm != Algorithm::kLocalUcb;
  const bool monitoring = config.monitors.any();

  Rng edge_rng(MixSeed(trial_seed, kEdgeStream));
  std::vector<Rng> reward_rng, select_rng, noise_rng;
  for (int i = 0; i < n_agents; ++i) {
    reward_rng.emplace_back(AgentStreamSeed(trial_seed, i, kRewardStream));
    select_rng.emplace_back(AgentStreamSeed(trial_seed, i, kSelectStream));
    noise_rng.emplace_back(AgentStreamSeed(trial_seed, i, kNoiseStream));
  }

  PrivacySettings privacy;
  privacy.enabled = config.algorithm == Algorithm::kFedUcb;
  privacy.epsilon = config.epsilon;
  privacy.log_base = config.log_base;
  privacy.mode = config.decompose;
  privacy.horizon = horizon;

  ConfidenceRule rule;
  rule.num_agents = n_agents;
  rule.horizon = horizon;
  rule.epsilon = config.epsilon;
  switch (config.algorithm) {
    case Algorithm::kGossipUcb:
      rule.kind = ConfidenceRule::Kind::kGossip;
      break;
    case Algorithm::kFedUcb:
      rule.kind = ConfidenceRule::Kind::kFed;
      break;
    case Algorithm::kLocalUcb:
      rule.kind = ConfidenceRule::Kind::kUcb1;
      break;
  }

  std::vector<AgentState> agents;
  agents.reserve(n_agents);
  std::vector<double> first(m);
  for (int i = 0; i < n_agents; ++i) {
    for (int k = 0; k < m; ++k) first[k] = rewards.Sample(i, k, reward_rng[i], 1);
    agents.push_back(InitializeAgent(i, first, privacy, noise_rng[i]));
  }

  TrialTrace trace;
  trace.seed = trial_seed;
  trace.checkpoints = Checkpoints(config);
  trace.regret.assign(n_agents, {});
  for (auto& r : trace.regret) r.reserve(trace.checkpoints.size());
  trace.monitors = MakeVerdicts(config.monitors);

  CountHistory history(n_agents, m, n_agents + 1);
  std::vector<std::vector<int64_t>> snapshot(n_agents);
  for (int i = 0; i < n_agents; ++i) snapshot[i] = agents[i].n;
  if (monitoring) history.Push(0, snapshot);

  std::vector<std::vector<int64_t>> tilde_cur(n_agents), tilde_next(n_agents);
  for (int i = 0; i < n_agents; ++i) tilde_cur[i] = agents[i].n_tilde;
  std::vector<double> regret(n_agents, 0.0);
  std::vector<std::vector<double>> prev_x(n_agents);
  std::vector<double> theta_k(n_agents), delta_k(n_agents);
  std::vector<std::span<const int64_t>> nb_views;
  const double best = rewards.best_mean();

  for (int64_t t = 1; t <= horizon; ++t) {
    for (int i = 0; i < n_agents; ++i) snapshot[i] = agents[i].n;
    if (monitoring) history.Push(t, snapshot);

    for (int i = 0; i < n_agents; ++i) {
      AgentState& a = agents[i];
      std::vector<int> lagging;
      int64_t rule_t = t;
      std::span<const double> estimates = a.theta;
      if (cooperative) {
        nb_views.clear();
        for (int j : graph.neighbors(i)) nb_views.emplace_back(tilde_cur[j]);
        tilde_next[i] = UpdateTildeN(snapshot[i], nb_views);
        lagging = LaggingArms(snapshot[i], tilde_cur[i], n_agents);
      } else {
        rule_t = m + t - 1;  // total local pulls so far
        estimates = a.x_tilde;
      }
      const int arm =
          SelectArm(estimates, snapshot[i], rule_t, rule, lagging, select_rng[i]);
      prev_x[i] = a.x_tilde;
      const double reward =
          rewards.Sample(i, arm, reward_rng[i], a.n[arm] + 1);
      RecordObservation(a, arm, reward, noise_rng[i]);
      regret[i] += best - rewards.global_means()[arm];
    }

    if (cooperative) {
      const GossipTick tick = PickEdge(graph, t, edge_rng);
      for (int k = 0; k < m; ++k) {
        for (int i = 0; i < n_agents; ++i) {
          theta_k[i] = agents[i].theta[k];
          delta_k[i] = agents[i].x_tilde[k] - prev_x[i][k];
        }
        GossipUpdateInPlace(theta_k, tick.active_edge, delta_k);
        for (int i = 0; i < n_agents; ++i) agents[i].theta[k] = theta_k[i];
      }
      for (int i = 0; i < n_agents; ++i) {
        agents[i].n_tilde = tilde_next[i];
        std::swap(tilde_cur[i], tilde_next[i]);
      }
      // tilde_cur now holds n_tilde(t+1).
      if (monitoring) {
        MonitorInput input{t, &graph, &history, &tilde_cur, &agents};
        RunMonitors(input, trace.monitors);
        if (config.monitors.strict) {
          for (const auto& v : trace.monitors) {
            if (v.first_violation) {
              const Violation& x = *v.first_violation;
              throw Error(ErrorCode::kMonitorViolation,
                          v.name + " violated at agent " +
                              std::to_string(x.agent + 1) + ", arm " +
                              std::to_string(x.arm + 1) + ", t=" +
                              std::to_string(x.t) + ": " + x.detail);
            }
          }
        }
      }
    }

    if (t % stride == 0) {
      for (int i = 0; i < n_agents; ++i) trace.regret[i].push_back(regret[i]);
    }
  }

  trace.pulls.resize(n_agents);
  for (int i = 0; i < n_agents; ++i) trace.pulls[i] = agents[i].n;
  return trace;
}

bool ExperimentResult::monitors_passed() const {
  for (const auto& t : trials)
    for (const auto& v : t.monitors)
      if (!v.passed()) return false;
  return true;
}

void Aggregate(ExperimentResult& result, BandMode band) {
  result.band = band;
  const size_t c = result.checkpoints.size();
  result.mean.assign(c, 0.0);
  result.min.assign(c, std::numeric_limits<double>::infinity());
  result.max.assign(c, -std::numeric_limits<double>::infinity());
  if (result.trials.empty()) return;
  const double n_trials = static_cast<double>(result.trials.size());
  for (size_t p = 0; p < c; ++p) {
    for (const TrialTrace& tr : result.trials) {
      double agent_sum = 0.0;
      for (const auto& row : tr.regret) {
        agent_sum += row[p];
        if (band == BandMode::kPerAgent) {
          result.min[p] = std::min(result.min[p], row[p]);
          result.max[p] = std::max(result.max[p], row[p]);
        }
      }
      const double agent_avg = agent_sum / static_cast<double>(tr.regret.size());
      result.mean[p] += agent_avg / n_trials;
      if (band == BandMode::kTrialMean) {
        result.min[p] = std::min(result.min[p], agent_avg);
        result.max[p] = std::max(result.max[p], agent_avg);
      }
    }
    // Guard the mean against summation rounding at the band edges.
    result.mean[p] = std::clamp(result.mean[p], result.min[p], result.max[p]);
  }
}

ExperimentResult RunExperiment(const ExperimentConfig& config,
                               const Environment& env) {
  ValidateConfig(config);
  ExperimentResult result;
  result.checkpoints = Checkpoints(config);
  result.lambda2 = env.gossip.lambda2;
  result.global_means = env.rewards.global_means();
  result.trials.resize(config.trials);

  std::vector<std::exception_ptr> errors(config.trials);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int idx = next++; idx < config.trials; idx = next++) {
      try {
        result.trials[idx] =
            RunTrial(config, env, TrialSeed(config.master_seed, idx));
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };
  const int workers = std::min(config.threads, config.trials);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Aggregate(result, config.band);
  return result;
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  const Environment env = BuildEnvironment(config);
  return RunExperiment(config, env);
}

}  // namespace fedbandit
