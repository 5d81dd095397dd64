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

#include "dataset.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>

#include "error.h"
#include "rng.h"

namespace fedbandit {
namespace {

// "sitagliptin" is listed as "citoglipton" in the published table.
constexpr std::string_view kSitagliptinAlias = "citoglipton";

const std::map<std::string, int, std::less<>>& MedicationArms() {
  static const auto* arms = new std::map<std::string, int, std::less<>>{
      {"insulin", 0},
      {"metformin", 1},
      {"repaglinide", 2},
      {"glipizide", 2},
      {"rosiglitazone", 2},
      {"acarbose", 2},
      {"miglitol", 2},
      {"troglitazone", 2},
      {"nateglinide", 3},
      {"chlorpropamide", 3},
      {"glyburide", 3},
      {"examide", 3},
      {"glimepiride", 3},
      {"acetohexamide", 3},
      {"tolbutamide", 3},
      {"pioglitazone", 3},
      {"sitagliptin", 3},
      {"glyburide-metformin", 3},
      {"glipizide-metformin", 3},
      {"glimepiride-pioglitazone", 3},
      {"metformin-rosiglitazone", 3},
      {"metformin-pioglitazone", 3},
      // Not named in any group; treated as one more "other steady" drug.
      {"tolazamide", 3},
  };
  return *arms;
}

std::string_view Canonical(std::string_view column) {
  return column == kSitagliptinAlias ? std::string_view("sitagliptin")
                                     : column;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

}  // namespace

const std::vector<std::string>& DiabetesMedicationColumns() {
  static const auto* cols = new std::vector<std::string>{
      "metformin",           "repaglinide",
      "nateglinide",         "chlorpropamide",
      "glimepiride",         "acetohexamide",
      "glipizide",           "glyburide",
      "tolbutamide",         "pioglitazone",
      "rosiglitazone",       "acarbose",
      "miglitol",            "troglitazone",
      "tolazamide",          "examide",
      "citoglipton",         "insulin",
      "glyburide-metformin", "glipizide-metformin",
      "glimepiride-pioglitazone", "metformin-rosiglitazone",
      "metformin-pioglitazone"};
  return *cols;
}

std::optional<int> ArmForMedications(
    const std::vector<std::string_view>& column_names,
    const std::vector<std::string_view>& values) {
  int arm = kDiabetesArms - 1;  // no medication at all
  for (size_t c = 0; c < column_names.size(); ++c) {
    const std::string_view v = Trim(values[c]);
    if (v == "No") continue;
    if (v != "Steady") return std::nullopt;
    const auto it = MedicationArms().find(Canonical(column_names[c]));
    if (it == MedicationArms().end()) {
      throw Error(ErrorCode::kSchemaError,
                  "unknown medication column: " + std::string(column_names[c]));
    }
    arm = std::min(arm, it->second);
  }
  return arm;
}

uint8_t RewardForReadmission(std::string_view label) {
  label = Trim(label);
  if (label == ">30") return 1;
  if (label == "<30" || label == "NO") return 0;
  throw Error(ErrorCode::kSchemaError,
              "unexpected readmission label: " + std::string(label));
}

double DatasetEnv::mean(int agent, int arm) const {
  const auto& pool = pools[agent][arm];
  if (pool.empty()) return 0.0;
  return std::accumulate(pool.begin(), pool.end(), 0.0) /
         static_cast<double>(pool.size());
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

DatasetEnv LoadDiabetes(std::istream& csv, int num_agents, SplitMode split,
                        uint64_t seed) {
  if (num_agents < 1) {
    throw Error(ErrorCode::kInvalidArgument, "dataset needs >= 1 agent");
  }
  std::string line;
  if (!std::getline(csv, line)) {
    throw Error(ErrorCode::kSchemaError, "dataset CSV is empty");
  }
  const std::vector<std::string> header = SplitCsvLine(line);
  auto column_of = [&](std::string_view name) -> std::optional<size_t> {
    for (size_t c = 0; c < header.size(); ++c)
      if (Trim(header[c]) == name) return c;
    return std::nullopt;
  };

  std::vector<size_t> med_cols;
  std::vector<std::string_view> med_names;
  for (const std::string& med : DiabetesMedicationColumns()) {
    auto col = column_of(med);
    if (!col && med == kSitagliptinAlias) col = column_of("sitagliptin");
    if (!col) {
      throw Error(ErrorCode::kSchemaError, "missing column: " + med);
    }
    med_cols.push_back(*col);
    med_names.push_back(med);
  }
  const auto label_col = column_of("readmitted");
  if (!label_col) {
    throw Error(ErrorCode::kSchemaError, "missing column: readmitted");
  }

  struct Record {
    int arm;
    uint8_t reward;
  };
  std::vector<Record> records;
  DatasetEnv env;
  env.num_agents = num_agents;
  int64_t line_no = 1;
  std::vector<std::string_view> values(med_cols.size());
  while (std::getline(csv, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    ++env.total_records;
    const std::vector<std::string> fields = SplitCsvLine(line);
    const size_t needed =
        std::max(*label_col, *std::max_element(med_cols.begin(), med_cols.end()));
    if (fields.size() <= needed) {
      throw Error(ErrorCode::kSchemaError,
                  "line " + std::to_string(line_no) + ": too few fields");
    }
    for (size_t c = 0; c < med_cols.size(); ++c) values[c] = fields[med_cols[c]];
    const std::optional<int> arm = ArmForMedications(med_names, values);
    if (!arm) continue;
    records.push_back({*arm, RewardForReadmission(fields[*label_col])});
  }
  env.retained_records = static_cast<int64_t>(records.size());

  env.arm_totals.assign(kDiabetesArms, 0);
  env.arm_pooled_means.assign(kDiabetesArms, 0.0);
  for (const Record& r : records) {
    ++env.arm_totals[r.arm];
    env.arm_pooled_means[r.arm] += r.reward;
  }
  for (int k = 0; k < kDiabetesArms; ++k) {
    if (env.arm_totals[k] > 0)
      env.arm_pooled_means[k] /= static_cast<double>(env.arm_totals[k]);
  }

  std::vector<size_t> order(records.size());
  std::iota(order.begin(), order.end(), size_t{0});
  if (split == SplitMode::kRandom) {
    Rng rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  env.pools.assign(num_agents,
                   std::vector<std::vector<uint8_t>>(kDiabetesArms));
  const size_t base = records.size() / num_agents;
  const size_t extra = records.size() % num_agents;
  size_t pos = 0;
  for (int i = 0; i < num_agents; ++i) {
    const size_t take = base + (static_cast<size_t>(i) < extra ? 1 : 0);
    for (size_t j = 0; j < take; ++j, ++pos) {
      const Record& r = records[order[pos]];
      env.pools[i][r.arm].push_back(r.reward);
    }
  }
  for (int i = 0; i < num_agents; ++i) {
    for (int k = 0; k < kDiabetesArms; ++k) {
      if (env.pools[i][k].empty()) {
        throw Error(ErrorCode::kEmptyArm,
                    "agent " + std::to_string(i + 1) +
                        " has no records for arm " + std::to_string(k + 1));
      }
    }
  }
  return env;
}

DatasetEnv LoadDiabetes(const std::string& csv_path, int num_agents,
                        SplitMode split, uint64_t seed) {
  std::ifstream in(csv_path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open dataset: " + csv_path);
  }
  return LoadDiabetes(in, num_agents, split, seed);
}

}  // namespace fedbandit
