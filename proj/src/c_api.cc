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

#include "fedbandit/fedbandit.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "bounds.h"
#include "config.h"
#include "dataset.h"
#include "error.h"
#include "output.h"
#include "simulation.h"

struct fb_config {
  fedbandit::ExperimentConfig config;
};

struct fb_result {
  fedbandit::ExperimentConfig config;
  fedbandit::ExperimentResult result;
};

struct fb_dataset {
  fedbandit::DatasetEnv env;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
fb_status Guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return FB_OK;
  } catch (const fedbandit::Error& e) {
    g_last_error = e.what();
    return static_cast<fb_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FB_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FB_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) {
    throw fedbandit::Error(fedbandit::ErrorCode::kInvalidArgument, what);
  }
}

char* Duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void WriteFile(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
  out.close();
  if (!out) {
    throw fedbandit::Error(fedbandit::ErrorCode::kIoError,
                           "cannot write " + path.string());
  }
}

}  // namespace

extern "C" {

const char* fb_version(void) { return "1.0.0"; }

const char* fb_status_name(fb_status status) {
  return fedbandit::ErrorCodeName(static_cast<fedbandit::ErrorCode>(status));
}

const char* fb_last_error(void) { return g_last_error.c_str(); }

void fb_string_free(char* s) { std::free(s); }

fb_status fb_config_load(const char* path, fb_config** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new fb_config{fedbandit::LoadConfig(path)};
  });
}

fb_status fb_config_parse(const char* text, fb_config** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new fb_config{fedbandit::ParseConfig(text)};
  });
}

fb_status fb_config_set(fb_config* config, const char* key,
                        const char* value) {
  return Guard([&] {
    Require(config != nullptr && key != nullptr && value != nullptr,
            "null argument");
    fedbandit::ExperimentConfig next = config->config;
    fedbandit::SetConfigValue(next, key, value);
    fedbandit::ValidateConfig(next);
    config->config = std::move(next);
  });
}

fb_status fb_config_serialize(const fb_config* config, char** out) {
  return Guard([&] {
    Require(config != nullptr && out != nullptr, "null argument");
    *out = Duplicate(fedbandit::SerializeConfig(config->config));
  });
}

void fb_config_free(fb_config* config) { delete config; }

fb_status fb_run(const fb_config* config, fb_result** out) {
  return Guard([&] {
    Require(config != nullptr && out != nullptr, "null argument");
    auto* r = new fb_result{config->config, {}};
    try {
      r->result = fedbandit::RunExperiment(config->config);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

void fb_result_free(fb_result* result) { delete result; }

size_t fb_result_num_checkpoints(const fb_result* result) {
  return result == nullptr ? 0 : result->result.checkpoints.size();
}

size_t fb_result_num_trials(const fb_result* result) {
  return result == nullptr ? 0 : result->result.trials.size();
}

size_t fb_result_checkpoints(const fb_result* result, int64_t* out,
                             size_t capacity) {
  if (result == nullptr) return 0;
  const auto& cp = result->result.checkpoints;
  for (size_t i = 0; i < cp.size() && i < capacity && out != nullptr; ++i) {
    out[i] = cp[i];
  }
  return cp.size();
}

size_t fb_result_series(const fb_result* result, fb_series which, double* out,
                        size_t capacity) {
  if (result == nullptr) return 0;
  const std::vector<double>* v = &result->result.mean;
  if (which == FB_SERIES_MIN) v = &result->result.min;
  if (which == FB_SERIES_MAX) v = &result->result.max;
  for (size_t i = 0; i < v->size() && i < capacity && out != nullptr; ++i) {
    out[i] = (*v)[i];
  }
  return v->size();
}

double fb_result_lambda2(const fb_result* result) {
  return result == nullptr ? 0.0 : result->result.lambda2;
}

int fb_result_monitors_passed(const fb_result* result) {
  return result != nullptr && result->result.monitors_passed() ? 1 : 0;
}

fb_status fb_result_final_regret(const fb_result* result, size_t trial,
                                 size_t agent, double* out) {
  return Guard([&] {
    Require(result != nullptr && out != nullptr, "null argument");
    Require(trial < result->result.trials.size(), "trial out of range");
    const auto& regret = result->result.trials[trial].regret;
    Require(agent < regret.size(), "agent out of range");
    *out = regret[agent].back();
  });
}

fb_status fb_result_pulls(const fb_result* result, size_t trial, size_t agent,
                          size_t arm, int64_t* out) {
  return Guard([&] {
    Require(result != nullptr && out != nullptr, "null argument");
    Require(trial < result->result.trials.size(), "trial out of range");
    const auto& pulls = result->result.trials[trial].pulls;
    Require(agent < pulls.size(), "agent out of range");
    Require(arm < pulls[agent].size(), "arm out of range");
    *out = pulls[agent][arm];
  });
}

fb_status fb_result_write(const fb_result* result, const char* dir) {
  return Guard([&] {
    Require(result != nullptr && dir != nullptr, "null argument");
    const std::filesystem::path root(dir);
    std::error_code ec;
    std::filesystem::create_directories(root, ec);
    if (ec) {
      throw fedbandit::Error(fedbandit::ErrorCode::kIoError,
                             "cannot create " + root.string());
    }
    std::ostringstream traces;
    fedbandit::WriteTraces(traces, result->result);
    const fedbandit::BoundCurve bounds = fedbandit::ComputeBoundCurve(
        result->config, result->result.lambda2, result->result.global_means);
    WriteFile(root / "traces.csv", traces.str());
    WriteFile(root / "summary.json",
              fedbandit::SummaryJson(result->config, result->result, bounds));
  });
}

fb_status fb_result_traces_csv(const fb_result* result, char** out) {
  return Guard([&] {
    Require(result != nullptr && out != nullptr, "null argument");
    std::ostringstream traces;
    fedbandit::WriteTraces(traces, result->result);
    *out = Duplicate(traces.str());
  });
}

fb_status fb_analyze_csv(const fb_config* config, char** out) {
  return Guard([&] {
    Require(config != nullptr && out != nullptr, "null argument");
    const fedbandit::Environment env =
        fedbandit::BuildEnvironment(config->config);
    const fedbandit::BoundCurve bounds = fedbandit::ComputeBoundCurve(
        config->config, env.gossip.lambda2, env.rewards.global_means());
    std::ostringstream csv;
    fedbandit::WriteBoundsCsv(csv, bounds);
    *out = Duplicate(csv.str());
  });
}

fb_status fb_compute_L(double lambda2, int num_agents, int64_t* out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = fedbandit::ComputeL(lambda2, num_agents);
  });
}

fb_status fb_dataset_load(const char* csv_path, int num_agents,
                          int split_sequential, uint64_t split_seed,
                          fb_dataset** out) {
  return Guard([&] {
    Require(csv_path != nullptr && out != nullptr, "null argument");
    const auto split = split_sequential ? fedbandit::SplitMode::kSequential
                                        : fedbandit::SplitMode::kRandom;
    *out = new fb_dataset{fedbandit::LoadDiabetes(
        std::string(csv_path), num_agents, split, split_seed)};
  });
}

fb_status fb_dataset_report_json(const fb_dataset* dataset, char** out) {
  return Guard([&] {
    Require(dataset != nullptr && out != nullptr, "null argument");
    *out = Duplicate(fedbandit::DatasetReportJson(dataset->env));
  });
}

fb_status fb_dataset_report_table(const fb_dataset* dataset, char** out) {
  return Guard([&] {
    Require(dataset != nullptr && out != nullptr, "null argument");
    *out = Duplicate(fedbandit::DatasetReportTable(dataset->env));
  });
}

void fb_dataset_free(fb_dataset* dataset) { delete dataset; }

}  // extern "C"
