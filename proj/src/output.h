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

// Result files: per-trial traces (CSV), a versioned JSON summary, bound
// curves (CSV) and a dataset report (JSON).

#ifndef FEDBANDIT_SRC_OUTPUT_H_
#define FEDBANDIT_SRC_OUTPUT_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dataset.h"
#include "simulation.h"

namespace fedbandit {

inline constexpr int kOutputFormat = 1;

// Both bounds evaluated with horizon = t at each checkpoint. An entry is
// empty when the bound is undefined (gap too small or L out of range).
struct BoundCurve {
  std::vector<int64_t> checkpoints;
  std::vector<std::optional<double>> gossip;
  std::vector<std::optional<double>> fed;
  int64_t mixing_threshold = 0;  // 0 when L overflowed
  std::string note;              // reason for empty entries, if any
};

BoundCurve ComputeBoundCurve(const ExperimentConfig& config, double lambda2,
                             const std::vector<double>& global_means);

// Header `trial,agent,t,cumulative_regret`; trial and agent are 1-based and
// rows are ordered by (trial, agent, t).
void WriteTraces(std::ostream& out, const ExperimentResult& result);

// Single JSON object with "format": 1.
std::string SummaryJson(const ExperimentConfig& config,
                        const ExperimentResult& result,
                        const BoundCurve& bounds);

// Header `t,regret_bound_gossip,regret_bound_fed`; empty cells when
// undefined.
void WriteBoundsCsv(std::ostream& out, const BoundCurve& bounds);

std::string DatasetReportJson(const DatasetEnv& env);
// Human-readable arm x agent table of means and counts.
std::string DatasetReportTable(const DatasetEnv& env);

// Shortest round-trip decimal form of v.
std::string FormatDouble(double v);

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_OUTPUT_H_
