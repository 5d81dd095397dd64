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

// Command-line front end:
//
//   fedbandit run --config exp.cfg --out results/
//   fedbandit analyze --config exp.cfg [--out bounds.csv]
//   fedbandit dataset --csv diabetic_data.csv [--json report.json]

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fedbandit/fedbandit.h"

namespace {

struct ConfigDeleter {
  void operator()(fb_config* c) const { fb_config_free(c); }
};
struct ResultDeleter {
  void operator()(fb_result* r) const { fb_result_free(r); }
};
struct DatasetDeleter {
  void operator()(fb_dataset* d) const { fb_dataset_free(d); }
};
struct StringDeleter {
  void operator()(char* s) const { fb_string_free(s); }
};
using ConfigPtr = std::unique_ptr<fb_config, ConfigDeleter>;
using ResultPtr = std::unique_ptr<fb_result, ResultDeleter>;
using DatasetPtr = std::unique_ptr<fb_dataset, DatasetDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int Fail(fb_status status) {
  std::cerr << "error [" << fb_status_name(status) << "]: " << fb_last_error()
            << "\n";
  return static_cast<int>(status);
}

bool WriteText(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error [IoError]: cannot write " << path << "\n";
    return false;
  }
  return true;
}

struct RunOptions {
  std::string config;
  std::string out = "results";
  bool strict = false;
  std::optional<int> trials;
  std::optional<unsigned long long> seed;
  std::optional<std::string> band;
  std::optional<int> threads;
};

int DoRun(const RunOptions& opt) {
  fb_config* raw = nullptr;
  fb_status st = fb_config_load(opt.config.c_str(), &raw);
  if (st != FB_OK) return Fail(st);
  ConfigPtr config(raw);
  auto set = [&](const char* key, const std::string& value) {
    return fb_config_set(config.get(), key, value.c_str());
  };
  if (opt.trials && (st = set("sim.trials", std::to_string(*opt.trials))) != FB_OK)
    return Fail(st);
  if (opt.seed && (st = set("sim.seed", std::to_string(*opt.seed))) != FB_OK)
    return Fail(st);
  if (opt.band && (st = set("sim.band", *opt.band)) != FB_OK) return Fail(st);
  if (opt.threads && (st = set("sim.threads", std::to_string(*opt.threads))) != FB_OK)
    return Fail(st);
  if (opt.strict && (st = set("monitor.strict", "on")) != FB_OK) return Fail(st);

  fb_result* res_raw = nullptr;
  if ((st = fb_run(config.get(), &res_raw)) != FB_OK) return Fail(st);
  ResultPtr result(res_raw);
  if ((st = fb_result_write(result.get(), opt.out.c_str())) != FB_OK) return Fail(st);

  const size_t n = fb_result_num_checkpoints(result.get());
  std::vector<double> mean(n);
  fb_result_series(result.get(), FB_SERIES_MEAN, mean.data(), n);
  std::printf("lambda2 = %.6f\nfinal mean regret = %.4f\nwrote %s/traces.csv, %s/summary.json\n",
              fb_result_lambda2(result.get()), n ? mean.back() : 0.0,
              opt.out.c_str(), opt.out.c_str());
  if (!fb_result_monitors_passed(result.get())) {
    std::cerr << "warning: monitor violations recorded (see summary.json)\n";
    if (opt.strict) return static_cast<int>(FB_MONITOR_VIOLATION);
  }
  return 0;
}

int DoAnalyze(const std::string& config_path, const std::string& out) {
  fb_config* raw = nullptr;
  fb_status st = fb_config_load(config_path.c_str(), &raw);
  if (st != FB_OK) return Fail(st);
  ConfigPtr config(raw);
  char* csv = nullptr;
  if ((st = fb_analyze_csv(config.get(), &csv)) != FB_OK) return Fail(st);
  StringPtr text(csv);
  return WriteText(out, text.get()) ? 0 : static_cast<int>(FB_IO_ERROR);
}

int DoDataset(const std::string& csv, int agents, const std::string& split,
              unsigned long long seed, const std::string& json_out) {
  fb_dataset* raw = nullptr;
  fb_status st = fb_dataset_load(csv.c_str(), agents, split == "sequential",
                                 seed, &raw);
  if (st != FB_OK) return Fail(st);
  DatasetPtr dataset(raw);
  char* table = nullptr;
  if ((st = fb_dataset_report_table(dataset.get(), &table)) != FB_OK) return Fail(st);
  StringPtr table_text(table);
  std::cout << table_text.get();
  if (!json_out.empty()) {
    char* json = nullptr;
    if ((st = fb_dataset_report_json(dataset.get(), &json)) != FB_OK) return Fail(st);
    StringPtr json_text(json);
    if (!WriteText(json_out, json_text.get())) return static_cast<int>(FB_IO_ERROR);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decentralized multi-agent UCB simulator"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "Run an experiment");
  run->add_option("--config", run_opt.config, "Config file")->required();
  run->add_option("--out", run_opt.out, "Output directory");
  run->add_flag("--strict", run_opt.strict, "Fail on monitor violations");
  run->add_option("--trials", run_opt.trials, "Override sim.trials");
  run->add_option("--seed", run_opt.seed, "Override sim.seed");
  run->add_option("--band", run_opt.band, "Override sim.band")
      ->check(CLI::IsMember({"trial-mean", "per-agent"}));
  run->add_option("--threads", run_opt.threads, "Override sim.threads");

  std::string analyze_config;
  std::string analyze_out;
  CLI::App* analyze = app.add_subcommand("analyze", "Write bound curves");
  analyze->add_option("--config", analyze_config, "Config file")->required();
  analyze->add_option("--out", analyze_out, "CSV path (default: stdout)");

  std::string csv;
  int agents = 3;
  std::string split = "random";
  unsigned long long split_seed = 0;
  std::string json_out;
  CLI::App* dataset = app.add_subcommand("dataset", "Summarize the diabetes data");
  dataset->add_option("--csv", csv, "UCI diabetes CSV")->required();
  dataset->add_option("--agents", agents, "Number of agents");
  dataset->add_option("--split", split, "random or sequential")
      ->check(CLI::IsMember({"random", "sequential"}));
  dataset->add_option("--seed", split_seed, "Split seed");
  dataset->add_option("--json", json_out, "Also write a JSON report");

  CLI11_PARSE(app, argc, argv);

  if (*run) return DoRun(run_opt);
  if (*analyze) return DoAnalyze(analyze_config, analyze_out);
  return DoDataset(csv, agents, split, split_seed, json_out);
}
