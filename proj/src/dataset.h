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

// Ingestion of the UCI "Diabetes 130-US hospitals" readmission table as a
// five-arm federated bandit: medications become arms, readmission labels
// become {0,1} rewards and the records are split among hospitals (agents).

#ifndef FEDBANDIT_SRC_DATASET_H_
#define FEDBANDIT_SRC_DATASET_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reward.h"
#include "simulation.h"

namespace fedbandit {

inline constexpr int kDiabetesArms = 5;

// The 23 medication columns of the UCI table.
const std::vector<std::string>& DiabetesMedicationColumns();

// Arm (0-based) for a record given its medication values, or nullopt when
// any medication is "Up"/"Down" (only "No"/"Steady" records are kept).
// A record with steady medications from several groups takes the lowest
// arm: insulin, then metformin, then the arm-3 group, then the arm-4 group.
std::optional<int> ArmForMedications(
    const std::vector<std::string_view>& column_names,
    const std::vector<std::string_view>& values);

// ">30" -> 1; "<30" and "NO" (no record) -> 0. Throws kSchemaError for any
// other label.
uint8_t RewardForReadmission(std::string_view label);

struct DatasetEnv {
  int num_agents = 0;
  int64_t total_records = 0;
  int64_t retained_records = 0;
  std::vector<int64_t> arm_totals;      // retained records per arm, pre-split
  std::vector<double> arm_pooled_means; // pre-split reward mean per arm
  // pools[i][k]: rewards of agent i's records on arm k, in split order.
  RewardModel::Pools pools;

  int64_t count(int agent, int arm) const {
    return static_cast<int64_t>(pools[agent][arm].size());
  }
  double mean(int agent, int arm) const;
};

// Throws kSchemaError (missing column, bad label), kEmptyArm (an agent has
// no records for an arm) or kIoError.
DatasetEnv LoadDiabetes(std::istream& csv, int num_agents, SplitMode split,
                        uint64_t seed);
DatasetEnv LoadDiabetes(const std::string& csv_path, int num_agents,
                        SplitMode split, uint64_t seed);

// Splits one RFC-4180 line (quoted fields, doubled quotes) into fields.
std::vector<std::string> SplitCsvLine(std::string_view line);

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_DATASET_H_
