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

#include "config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "error.h"

namespace fedbandit {
namespace {

template <typename E>
using NameTable = std::vector<std::pair<E, std::string_view>>;

const NameTable<Algorithm> kAlgorithms = {
    {Algorithm::kGossipUcb, "gossip_ucb"},
    {Algorithm::kFedUcb, "fed_ucb"},
    {Algorithm::kLocalUcb, "local_ucb"}};
const NameTable<BandMode> kBands = {{BandMode::kTrialMean, "trial-mean"},
                                    {BandMode::kPerAgent, "per-agent"}};
const NameTable<RewardKind> kRewardKinds = {
    {RewardKind::kBernoulli, "bernoulli"},
    {RewardKind::kClampedGaussian, "gaussian"},
    {RewardKind::kEmpiricalPool, "empirical"}};
const NameTable<DecomposeMode> kDecompose = {
    {DecomposeMode::kPull, "pull"}, {DecomposeMode::kWallclock, "wallclock"}};
const NameTable<SplitMode> kSplits = {{SplitMode::kRandom, "random"},
                                      {SplitMode::kSequential, "sequential"}};
const NameTable<ReplayMode> kReplays = {{ReplayMode::kSample, "sample"},
                                        {ReplayMode::kStream, "stream"}};

std::string_view Trim(std::string_view s) {
  const auto ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Tokens(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && seps.find(s[i]) != std::string_view::npos) ++i;
    size_t j = i;
    while (j < s.size() && seps.find(s[j]) == std::string_view::npos) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void Invalid(std::string_view key, const std::string& msg) {
  throw Error(ErrorCode::kValidationError, std::string(key) + ": " + msg);
}

template <typename E>
E Lookup(const NameTable<E>& table, std::string_view key,
         std::string_view value) {
  for (const auto& [e, name] : table) {
    if (name == value) return e;
  }
  std::string options;
  for (const auto& entry : table) {
    if (!options.empty()) options += "|";
    options += entry.second;
  }
  Invalid(key, "expected one of " + options + ", got '" + std::string(value) +
                   "'");
}

template <typename E>
std::string NameOf(const NameTable<E>& table, E e) {
  for (const auto& [v, name] : table) {
    if (v == e) return std::string(name);
  }
  throw Error(ErrorCode::kInternal, "unnamed enum value");
}

template <typename T>
T ParseInt(std::string_view key, std::string_view text) {
  text = Trim(text);
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kParseError,
                std::string(key) + ": not an integer: '" + std::string(text) +
                    "'");
  }
  return v;
}

double ParseReal(std::string_view key, std::string_view text) {
  text = Trim(text);
  if (text == "inf" || text == "+inf") return kInfiniteEpsilon;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
      std::isnan(v)) {
    throw Error(ErrorCode::kParseError,
                std::string(key) + ": not a number: '" + std::string(text) +
                    "'");
  }
  return v;
}

bool ParseSwitch(std::string_view key, std::string_view value) {
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  Invalid(key, "expected on|off, got '" + std::string(value) + "'");
}

std::string FormatReal(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<Edge> ParseEdges(std::string_view key, std::string_view text) {
  std::vector<Edge> edges;
  for (std::string_view tok : Tokens(text, " ,\t")) {
    const size_t dash = tok.find('-');
    if (dash == std::string_view::npos) {
      throw Error(ErrorCode::kParseError,
                  std::string(key) + ": edge must look like a-b, got '" +
                      std::string(tok) + "'");
    }
    const int a = ParseInt<int>(key, tok.substr(0, dash));
    const int b = ParseInt<int>(key, tok.substr(dash + 1));
    if (a < 1 || b < 1) Invalid(key, "agent indices are 1-based");
    edges.push_back({a - 1, b - 1});
  }
  if (edges.empty()) Invalid(key, "empty edge list");
  return edges;
}

GraphSpec ParseGraph(std::string_view key, std::string_view value) {
  GraphSpec g;
  const std::vector<std::string_view> tok = Tokens(value, " \t");
  if (tok.empty()) Invalid(key, "empty graph spec");
  const std::string_view head = tok[0];
  auto expect_args = [&](size_t n) {
    if (tok.size() != n + 1) {
      Invalid(key, std::string(head) + " takes " + std::to_string(n) +
                       " argument(s)");
    }
  };
  if (head == "complete") {
    expect_args(0);
    g.kind = GraphSpec::Kind::kComplete;
  } else if (head == "path") {
    expect_args(0);
    g.kind = GraphSpec::Kind::kPath;
  } else if (head == "cycle") {
    expect_args(0);
    g.kind = GraphSpec::Kind::kCycle;
  } else if (head == "erdos_renyi") {
    expect_args(2);
    g.kind = GraphSpec::Kind::kErdosRenyi;
    g.p = ParseReal(key, tok[1]);
    g.seed = ParseInt<uint64_t>(key, tok[2]);
  } else if (head == "edges") {
    g.kind = GraphSpec::Kind::kEdges;
    g.edges = ParseEdges(key, value.substr(value.find("edges") + 5));
  } else if (!head.empty() && head[0] >= '0' && head[0] <= '9') {
    g.kind = GraphSpec::Kind::kEdges;
    g.edges = ParseEdges(key, value);
  } else {
    Invalid(key, "unknown graph generator '" + std::string(head) + "'");
  }
  return g;
}

std::string FormatGraph(const GraphSpec& g) {
  switch (g.kind) {
    case GraphSpec::Kind::kComplete:
      return "complete";
    case GraphSpec::Kind::kPath:
      return "path";
    case GraphSpec::Kind::kCycle:
      return "cycle";
    case GraphSpec::Kind::kErdosRenyi:
      return "erdos_renyi " + FormatReal(g.p) + " " + std::to_string(g.seed);
    case GraphSpec::Kind::kEdges: {
      std::string s = "edges";
      for (const Edge& e : g.edges) {
        s += " " + std::to_string(e.a + 1) + "-" + std::to_string(e.b + 1);
      }
      return s;
    }
  }
  return "complete";
}

// Rows separated by ';', entries by spaces or commas.
std::vector<std::vector<double>> ParseMatrix(std::string_view key,
                                             std::string_view value) {
  std::vector<std::vector<double>> rows;
  for (std::string_view row : Tokens(value, ";")) {
    if (Trim(row).empty()) continue;
    std::vector<double> r;
    for (std::string_view tok : Tokens(row, " ,\t")) r.push_back(ParseReal(key, tok));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) Invalid(key, "empty matrix");
  return rows;
}

std::string FormatMatrix(const std::vector<std::vector<double>>& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i > 0) s += "; ";
    for (size_t k = 0; k < m[i].size(); ++k) {
      if (k > 0) s += " ";
      s += FormatReal(m[i][k]);
    }
  }
  return s;
}

}  // namespace

const std::vector<std::string>& ConfigKeys() {
  static const auto* keys = new std::vector<std::string>{
      "graph",           "sim.N",          "sim.M",
      "sim.T",           "sim.trials",     "sim.algorithm",
      "sim.seed",        "sim.stride",     "sim.band",
      "sim.threads",     "reward.kind",    "reward.sigma",
      "reward.means",    "reward.seed",    "dp.epsilon",
      "dp.log_base",     "dp.decompose",   "dataset.csv",
      "dataset.split",   "dataset.seed",   "dataset.replay",
      "monitor.propagation",  "monitor.local", "monitor.global",
      "monitor.conservation", "monitor.strict"};
  return *keys;
}

std::string AlgorithmName(Algorithm a) { return NameOf(kAlgorithms, a); }
std::string BandModeName(BandMode b) { return NameOf(kBands, b); }

void SetConfigValue(ExperimentConfig& c, std::string_view key,
                    std::string_view value) {
  key = Trim(key);
  value = Trim(value);
  if (key == "graph") {
    c.graph = ParseGraph(key, value);
  } else if (key == "sim.N") {
    c.num_agents = ParseInt<int>(key, value);
  } else if (key == "sim.M") {
    c.num_arms = ParseInt<int>(key, value);
  } else if (key == "sim.T") {
    c.horizon = ParseInt<int64_t>(key, value);
  } else if (key == "sim.trials") {
    c.trials = ParseInt<int>(key, value);
  } else if (key == "sim.algorithm") {
    c.algorithm = Lookup(kAlgorithms, key, value);
  } else if (key == "sim.seed") {
    c.master_seed = ParseInt<uint64_t>(key, value);
  } else if (key == "sim.stride") {
    c.stride = ParseInt<int64_t>(key, value);
  } else if (key == "sim.band") {
    c.band = Lookup(kBands, key, value);
  } else if (key == "sim.threads") {
    c.threads = ParseInt<int>(key, value);
  } else if (key == "reward.kind") {
    c.reward.kind = Lookup(kRewardKinds, key, value);
  } else if (key == "reward.sigma") {
    c.reward.sigma = ParseReal(key, value);
  } else if (key == "reward.means") {
    c.reward.means = ParseMatrix(key, value);
  } else if (key == "reward.seed") {
    c.reward.seed = ParseInt<uint64_t>(key, value);
  } else if (key == "dp.epsilon") {
    c.epsilon = ParseReal(key, value);
  } else if (key == "dp.log_base") {
    c.log_base = ParseReal(key, value);
  } else if (key == "dp.decompose") {
    c.decompose = Lookup(kDecompose, key, value);
  } else if (key == "dataset.csv") {
    c.dataset.csv = std::string(value);
  } else if (key == "dataset.split") {
    c.dataset.split = Lookup(kSplits, key, value);
  } else if (key == "dataset.seed") {
    c.dataset.seed = ParseInt<uint64_t>(key, value);
  } else if (key == "dataset.replay") {
    c.dataset.replay = Lookup(kReplays, key, value);
  } else if (key == "monitor.propagation") {
    c.monitors.information = ParseSwitch(key, value);
  } else if (key == "monitor.local") {
    c.monitors.local = ParseSwitch(key, value);
  } else if (key == "monitor.global") {
    c.monitors.global = ParseSwitch(key, value);
  } else if (key == "monitor.conservation") {
    c.monitors.conservation = ParseSwitch(key, value);
  } else if (key == "monitor.strict") {
    c.monitors.strict = ParseSwitch(key, value);
  } else {
    Invalid(key, "unknown key");
  }
}

ExperimentConfig ParseConfig(std::string_view text) {
  ExperimentConfig config;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    if (key.empty()) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": empty key");
    }
    if (!seen.insert(std::string(key)).second) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) +
                                              ": duplicate key " +
                                              std::string(key));
    }
    SetConfigValue(config, key, line.substr(eq + 1));
  }
  ValidateConfig(config);
  return config;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

std::string SerializeConfig(const ExperimentConfig& c) {
  std::ostringstream out;
  auto sw = [](bool b) { return b ? "on" : "off"; };
  out << "graph = " << FormatGraph(c.graph) << "\n"
      << "sim.N = " << c.num_agents << "\n"
      << "sim.M = " << c.num_arms << "\n"
      << "sim.T = " << c.horizon << "\n"
      << "sim.trials = " << c.trials << "\n"
      << "sim.algorithm = " << NameOf(kAlgorithms, c.algorithm) << "\n"
      << "sim.seed = " << c.master_seed << "\n"
      << "sim.stride = " << c.stride << "\n"
      << "sim.band = " << NameOf(kBands, c.band) << "\n"
      << "sim.threads = " << c.threads << "\n"
      << "reward.kind = " << NameOf(kRewardKinds, c.reward.kind) << "\n"
      << "reward.sigma = " << FormatReal(c.reward.sigma) << "\n";
  if (c.reward.means) out << "reward.means = " << FormatMatrix(*c.reward.means) << "\n";
  out << "reward.seed = " << c.reward.seed << "\n"
      << "dp.epsilon = " << FormatReal(c.epsilon) << "\n"
      << "dp.log_base = " << FormatReal(c.log_base) << "\n"
      << "dp.decompose = " << NameOf(kDecompose, c.decompose) << "\n";
  if (!c.dataset.csv.empty()) out << "dataset.csv = " << c.dataset.csv << "\n";
  out << "dataset.split = " << NameOf(kSplits, c.dataset.split) << "\n"
      << "dataset.seed = " << c.dataset.seed << "\n"
      << "dataset.replay = " << NameOf(kReplays, c.dataset.replay) << "\n"
      << "monitor.propagation = " << sw(c.monitors.information) << "\n"
      << "monitor.local = " << sw(c.monitors.local) << "\n"
      << "monitor.global = " << sw(c.monitors.global) << "\n"
      << "monitor.conservation = " << sw(c.monitors.conservation) << "\n"
      << "monitor.strict = " << sw(c.monitors.strict) << "\n";
  return out.str();
}

}  // namespace fedbandit
