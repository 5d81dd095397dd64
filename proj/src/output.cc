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

#include "output.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "bounds.h"
#include "config.h"
#include "error.h"

namespace fedbandit {
namespace {

using json = nlohmann::ordered_json;

json OptionalNumber(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json ConfigEcho(const ExperimentConfig& config) {
  json echo = json::object();
  std::istringstream lines(SerializeConfig(config));
  std::string line;
  while (std::getline(lines, line)) {
    const size_t eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    echo[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return echo;
}

}  // namespace

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

BoundCurve ComputeBoundCurve(const ExperimentConfig& config, double lambda2,
                             const std::vector<double>& global_means) {
  BoundCurve curve;
  curve.checkpoints = Checkpoints(config);
  const double best =
      *std::max_element(global_means.begin(), global_means.end());
  BoundParams p;
  p.num_agents = config.num_agents;
  p.num_arms = config.num_arms;
  p.lambda2 = lambda2;
  p.epsilon = config.epsilon;
  for (double mu : global_means) p.gaps.push_back(best - mu);

  try {
    curve.mixing_threshold = ComputeL(lambda2, config.num_agents);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOverflow) throw;
    curve.note = e.what();
    curve.gossip.assign(curve.checkpoints.size(), std::nullopt);
    curve.fed.assign(curve.checkpoints.size(), std::nullopt);
    return curve;
  }
  for (int64_t t : curve.checkpoints) {
    p.horizon = t;
    const auto g = RegretBoundGossip(p).total();
    const auto f = RegretBoundFed(p).total();
    if (!g || !f) curve.note = "some gap is <= 2 * alpha1";
    curve.gossip.push_back(g);
    curve.fed.push_back(f);
  }
  return curve;
}

void WriteTraces(std::ostream& out, const ExperimentResult& result) {
  out << "trial,agent,t,cumulative_regret\n";
  for (size_t r = 0; r < result.trials.size(); ++r) {
    const TrialTrace& trace = result.trials[r];
    for (size_t i = 0; i < trace.regret.size(); ++i) {
      for (size_t c = 0; c < trace.checkpoints.size(); ++c) {
        out << (r + 1) << ',' << (i + 1) << ',' << trace.checkpoints[c] << ','
            << FormatDouble(trace.regret[i][c]) << '\n';
      }
    }
  }
}

std::string SummaryJson(const ExperimentConfig& config,
                        const ExperimentResult& result,
                        const BoundCurve& bounds) {
  json j;
  j["format"] = kOutputFormat;
  j["config"] = ConfigEcho(config);
  j["lambda2"] = result.lambda2;
  j["global_means"] = result.global_means;
  j["band"] = BandModeName(result.band);
  j["checkpoints"] = result.checkpoints;
  j["mean"] = result.mean;
  j["min"] = result.min;
  j["max"] = result.max;

  json monitors = json::array();
  if (!result.trials.empty()) {
    const size_t count = result.trials.front().monitors.size();
    for (size_t m = 0; m < count; ++m) {
      json entry;
      entry["name"] = result.trials.front().monitors[m].name;
      entry["enabled"] = result.trials.front().monitors[m].enabled;
      int64_t checks = 0;
      int failed_trials = 0;
      json first = nullptr;
      for (size_t r = 0; r < result.trials.size(); ++r) {
        const MonitorVerdict& v = result.trials[r].monitors[m];
        checks += v.checks;
        if (v.first_violation) {
          ++failed_trials;
          if (first.is_null()) {
            first = {{"trial", r + 1},
                     {"agent", v.first_violation->agent + 1},
                     {"arm", v.first_violation->arm + 1},
                     {"t", v.first_violation->t},
                     {"detail", v.first_violation->detail}};
          }
        }
      }
      entry["checks"] = checks;
      entry["failed_trials"] = failed_trials;
      entry["passed"] = failed_trials == 0;
      entry["first_violation"] = first;
      monitors.push_back(entry);
    }
  }
  j["monitors"] = monitors;

  json overlay;
  overlay["mixing_threshold"] = bounds.mixing_threshold;
  json gossip = json::array();
  json fed = json::array();
  for (size_t c = 0; c < bounds.checkpoints.size(); ++c) {
    gossip.push_back(OptionalNumber(bounds.gossip[c]));
    fed.push_back(OptionalNumber(bounds.fed[c]));
  }
  overlay["regret_bound_gossip"] = gossip;
  overlay["regret_bound_fed"] = fed;
  if (!bounds.note.empty()) overlay["note"] = bounds.note;
  j["bounds"] = overlay;
  return j.dump(2) + "\n";
}

void WriteBoundsCsv(std::ostream& out, const BoundCurve& bounds) {
  out << "t,regret_bound_gossip,regret_bound_fed\n";
  for (size_t c = 0; c < bounds.checkpoints.size(); ++c) {
    out << bounds.checkpoints[c] << ',';
    if (bounds.gossip[c]) out << FormatDouble(*bounds.gossip[c]);
    out << ',';
    if (bounds.fed[c]) out << FormatDouble(*bounds.fed[c]);
    out << '\n';
  }
}

std::string DatasetReportJson(const DatasetEnv& env) {
  json j;
  j["format"] = kOutputFormat;
  j["total_records"] = env.total_records;
  j["retained_records"] = env.retained_records;
  j["arm_totals"] = env.arm_totals;
  j["arm_pooled_means"] = env.arm_pooled_means;
  json agents = json::array();
  for (int i = 0; i < env.num_agents; ++i) {
    json counts = json::array();
    json means = json::array();
    for (int k = 0; k < kDiabetesArms; ++k) {
      counts.push_back(env.count(i, k));
      means.push_back(env.mean(i, k));
    }
    agents.push_back({{"agent", i + 1}, {"counts", counts}, {"means", means}});
  }
  j["agents"] = agents;
  return j.dump(2) + "\n";
}

std::string DatasetReportTable(const DatasetEnv& env) {
  std::ostringstream out;
  char buf[64];
  out << "records: " << env.total_records
      << "  retained: " << env.retained_records << "\n";
  out << "arm";
  for (int i = 0; i < env.num_agents; ++i) out << "  agent" << (i + 1) << " mean (n)";
  out << "  pooled mean (n)\n";
  for (int k = 0; k < kDiabetesArms; ++k) {
    out << (k + 1);
    for (int i = 0; i < env.num_agents; ++i) {
      std::snprintf(buf, sizeof(buf), "  %.4f (%lld)", env.mean(i, k),
                    static_cast<long long>(env.count(i, k)));
      out << buf;
    }
    std::snprintf(buf, sizeof(buf), "  %.4f (%lld)\n", env.arm_pooled_means[k],
                  static_cast<long long>(env.arm_totals[k]));
    out << buf;
  }
  return out.str();
}

}  // namespace fedbandit
