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

#include "bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "error.h"

namespace fedbandit {
namespace {

constexpr int64_t kMaxL = 1'000'000'000;

void CheckLambda(double lambda2) {
  if (!(lambda2 > 0.0 && lambda2 < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "lambda2 must lie in (0,1), got " + std::to_string(lambda2));
  }
}

void CheckParams(const BoundParams& p) {
  CheckLambda(p.lambda2);
  if (p.num_agents < 1 || p.num_arms < 1 || p.horizon < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "bound parameters need N, M, T >= 1");
  }
  if (!(p.epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidEpsilon, "epsilon must be > 0");
  }
  for (double g : p.gaps) {
    if (!(g >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "gaps must be >= 0");
    }
  }
}

// log of N t l^(t/6) / (1 - l^(1/3)); negative iff the defining inequality
// of L holds at t.
double LogMixingRatio(double t, double lambda2, int num_agents) {
  return std::log(static_cast<double>(num_agents)) + std::log(t) +
         t / 6.0 * std::log(lambda2) - std::log1p(-std::cbrt(lambda2));
}

// The arm term shared by both bounds: gap * (max{lead, L, (3M+1)N} + add).
template <typename LeadFn>
RegretBound BuildBound(const BoundParams& p, double additive, LeadFn lead) {
  RegretBound out;
  out.mixing_threshold = ComputeL(p.lambda2, p.num_agents);
  const double a1 = Alpha1(p.num_agents);
  const double floor_term = static_cast<double>(
      std::max<int64_t>(out.mixing_threshold, (3LL * p.num_arms + 1) * p.num_agents));
  for (double gap : p.gaps) {
    ArmBound arm;
    arm.gap = gap;
    if (gap == 0.0) {
      arm.status = ArmBound::Status::kOptimal;
    } else if (gap <= 2.0 * a1) {
      arm.status = ArmBound::Status::kGapTooSmall;
    } else {
      arm.status = ArmBound::Status::kDefined;
      const double margin = 0.5 * gap - a1;
      arm.value = gap * (std::max(lead(margin), floor_term) + additive);
    }
    out.per_arm.push_back(arm);
  }
  return out;
}

}  // namespace

double Alpha2(int num_agents, int num_arms, double lambda2) {
  CheckLambda(lambda2);
  const double r12 = std::pow(lambda2, 1.0 / 12.0);
  const double r3 = std::cbrt(lambda2);
  return (3.0 * num_arms - 1.0) * num_agents +
         2.0 * std::numbers::pi * std::numbers::pi / 3.0 +
         2.0 * r12 / ((1.0 - r3) * (1.0 - r12));
}

double Alpha3(int num_agents, int num_arms, double lambda2) {
  return Alpha2(num_agents, num_arms, lambda2) + 4.0 * num_agents;
}

int64_t ComputeL(double lambda2, int num_agents) {
  CheckLambda(lambda2);
  if (num_agents < 1) {
    throw Error(ErrorCode::kInvalidArgument, "N must be >= 1");
  }
  auto holds = [&](int64_t t) {
    return LogMixingRatio(static_cast<double>(t), lambda2, num_agents) < 0.0;
  };
  // The ratio rises up to t* = -6 / ln(lambda2) and falls afterwards.
  const double peak = -6.0 / std::log(lambda2);
  if (peak > static_cast<double>(kMaxL)) {
    throw Error(ErrorCode::kOverflow, "lambda2 too close to 1: L > 1e9");
  }
  const int64_t lo = std::max<int64_t>(1, static_cast<int64_t>(std::ceil(peak)));
  if (holds(lo)) {
    if (lo == 1 || holds(lo - 1)) return 1;
    return lo;
  }
  // First t past the peak where the inequality holds: double, then bisect.
  int64_t bad = lo;
  int64_t good = lo;
  while (!holds(good)) {
    bad = good;
    if (good > kMaxL) {
      throw Error(ErrorCode::kOverflow, "lambda2 too close to 1: L > 1e9");
    }
    good *= 2;
  }
  while (good - bad > 1) {
    const int64_t mid = bad + (good - bad) / 2;
    (holds(mid) ? good : bad) = mid;
  }
  if (good > kMaxL) {
    throw Error(ErrorCode::kOverflow, "lambda2 too close to 1: L > 1e9");
  }
  return good;
}

std::optional<double> RegretBound::total() const {
  double sum = 0.0;
  for (const ArmBound& a : per_arm) {
    if (a.status == ArmBound::Status::kGapTooSmall) return std::nullopt;
    sum += a.value;
  }
  return sum;
}

double RegretBound::TotalOrThrow() const {
  const auto t = total();
  if (!t) {
    throw Error(ErrorCode::kGapTooSmall,
                "bound undefined: some gap is <= 2 * alpha1");
  }
  return *t;
}

RegretBound RegretBoundGossip(const BoundParams& p) {
  CheckParams(p);
  const double log_t = std::log(static_cast<double>(p.horizon));
  const int n = p.num_agents;
  return BuildBound(p, Alpha2(n, p.num_arms, p.lambda2), [&](double margin) {
    return 2.0 * n / (margin * margin) * log_t;
  });
}

RegretBound RegretBoundFed(const BoundParams& p) {
  CheckParams(p);
  const double log_t = std::log(static_cast<double>(p.horizon));
  const int n = p.num_agents;
  const double additive = 4.0 * n * log_t + Alpha3(n, p.num_arms, p.lambda2);
  return BuildBound(p, additive, [&](double margin) {
    const double z = std::isinf(p.epsilon) ? 0.0 : 16.0 * margin / p.epsilon;
    const double radical = std::sqrt(1.0 + z * z * log_t * log_t * log_t);
    return n * log_t * (1.0 + radical) / (margin * margin);
  });
}

AsymptoticOrder ComputeAsymptoticOrder(const BoundParams& p) {
  CheckParams(p);
  const double n = p.num_agents;
  const double m = p.num_arms;
  const double mix_log = std::log(n) / -std::log(p.lambda2);
  const bool priv = !std::isinf(p.epsilon);
  // Both terms as functions of x = ln T.
  auto horizon_term = [&](double x) {
    return priv ? n * m / p.epsilon * std::pow(x, 2.5) : n * m * x;
  };
  auto mixing_term = [&](double x) {
    return priv ? m * (n * x + mix_log) : m * mix_log;
  };
  AsymptoticOrder out;
  const double x = std::log(static_cast<double>(p.horizon));
  out.horizon_term = horizon_term(x);
  out.mixing_term = mixing_term(x);
  out.regime = out.horizon_term >= out.mixing_term
                   ? AsymptoticOrder::Regime::kLogHorizon
                   : AsymptoticOrder::Regime::kGraphMixing;

  auto diff = [&](double v) { return horizon_term(v) - mixing_term(v); };
  if (diff(0.0) >= 0.0) {
    out.crossover_horizon = 1.0;
    return out;
  }
  double lo = 0.0;
  double hi = 1.0;
  while (diff(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) {
      out.crossover_horizon = std::numeric_limits<double>::infinity();
      return out;
    }
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (diff(mid) < 0.0 ? lo : hi) = mid;
  }
  out.crossover_horizon = std::exp(0.5 * (lo + hi));
  return out;
}

}  // namespace fedbandit
