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

// Experiment configuration files: one `key = value` per line, `#` starts a
// comment, keys are grouped in dotted sections (graph, sim.*, reward.*,
// dp.*, dataset.*, monitor.*). Agent indices in edge lists are 1-based.
//
//   graph = erdos_renyi 0.5 7
//   sim.N = 5
//   sim.M = 3
//   sim.T = 2000
//   dp.epsilon = inf

#ifndef FEDBANDIT_SRC_CONFIG_H_
#define FEDBANDIT_SRC_CONFIG_H_

#include <string>
#include <string_view>
#include <vector>

#include "simulation.h"

namespace fedbandit {

// Throws kParseError for malformed lines or values and kValidationError for
// unknown keys or out-of-range settings.
ExperimentConfig ParseConfig(std::string_view text);
ExperimentConfig LoadConfig(const std::string& path);

// Applies one key. Does not run whole-config validation.
void SetConfigValue(ExperimentConfig& config, std::string_view key,
                    std::string_view value);

// Canonical text form; ParseConfig(SerializeConfig(c)) == c.
std::string SerializeConfig(const ExperimentConfig& config);

const std::vector<std::string>& ConfigKeys();

std::string AlgorithmName(Algorithm a);
std::string BandModeName(BandMode b);

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_CONFIG_H_
