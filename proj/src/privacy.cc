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

#include "privacy.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "error.h"

namespace fedbandit {
namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct Slot {
  size_t level;
  size_t index;
};

Slot SlotOf(const Interval& block) {
  const auto len = static_cast<uint64_t>(block.length());
  return Slot{static_cast<size_t>(std::countr_zero(len)),
              static_cast<size_t>((block.lo - 1) / block.length())};
}

double& Grow(std::vector<std::vector<double>>& table, const Slot& s) {
  if (table.size() <= s.level) table.resize(s.level + 1);
  auto& row = table[s.level];
  if (row.size() <= s.index) row.resize(s.index + 1, kUnset);
  return row[s.index];
}

void RequireDyadic(const Interval& block) {
  if (!block.is_dyadic()) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a dyadic block: [" + std::to_string(block.lo) + "," +
                    std::to_string(block.hi) + "]");
  }
}

}  // namespace

bool Interval::is_dyadic() const {
  if (lo < 1 || hi < lo) return false;
  const auto len = static_cast<uint64_t>(length());
  return std::has_single_bit(len) && (lo - 1) % length() == 0;
}

std::vector<Interval> Decompose(int64_t t) {
  if (t < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "decompose needs t >= 1, got " + std::to_string(t));
  }
  std::vector<Interval> out;
  while (t != 0) {
    const int64_t q = t & (t - 1);
    out.push_back(Interval{q + 1, t});
    t = q;
  }
  return out;
}

double LaplaceSample(double scale, Rng& rng) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::kInvalidScale,
                "Laplace scale must be finite and >= 0");
  }
  if (scale == 0.0) return 0.0;
  // u in (-1/2, 1/2), never hitting the endpoints.
  const double u =
      (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53 - 0.5;
  const double mag = -scale * std::log1p(-2.0 * std::fabs(u));
  return u < 0.0 ? -mag : mag;
}

int BudgetLevels(int64_t horizon, double log_base) {
  if (horizon < 1) {
    throw Error(ErrorCode::kInvalidArgument, "horizon must be >= 1");
  }
  if (!(log_base > 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "dp.log_base must be > 1");
  }
  if (log_base == 2.0) {
    const int levels = static_cast<int>(
        std::bit_width(static_cast<uint64_t>(horizon - 1)));
    return levels < 1 ? 1 : levels;
  }
  // Smallest L with log_base^L >= horizon.
  int levels = 0;
  double power = 1.0;
  while (power < static_cast<double>(horizon)) {
    power *= log_base;
    ++levels;
  }
  return levels < 1 ? 1 : levels;
}

double NoiseScale(double epsilon, int64_t horizon, double log_base) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidEpsilon, "epsilon must be > 0");
  }
  if (std::isinf(epsilon)) return 0.0;
  return static_cast<double>(BudgetLevels(horizon, log_base)) / epsilon;
}

PartialSumLedger::PartialSumLedger(double scale) : scale_(scale) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::kInvalidScale,
                "ledger scale must be finite and >= 0");
  }
}

std::optional<double> PartialSumLedger::Find(const Interval& block) const {
  if (!block.is_dyadic()) return std::nullopt;
  const Slot s = SlotOf(block);
  if (s.level >= noise_.size() || s.index >= noise_[s.level].size())
    return std::nullopt;
  const double v = noise_[s.level][s.index];
  if (std::isnan(v)) return std::nullopt;
  return v;
}

double PartialSumLedger::NoiseFor(const Interval& block, Rng& rng) {
  RequireDyadic(block);
  if (scale_ == 0.0) return 0.0;
  double& slot = Grow(noise_, SlotOf(block));
  if (std::isnan(slot)) {
    slot = LaplaceSample(scale_, rng);
    ++size_;
  }
  return slot;
}

int PartialSumLedger::CountContaining(int64_t tau) const {
  if (tau < 1) return 0;
  int count = 0;
  for (size_t level = 0; level < noise_.size(); ++level) {
    const size_t index = static_cast<size_t>((tau - 1) >> level);
    if (index < noise_[level].size() && !std::isnan(noise_[level][index]))
      ++count;
  }
  return count;
}

std::vector<std::pair<Interval, double>> PartialSumLedger::Entries() const {
  std::vector<std::pair<Interval, double>> out;
  for (size_t level = 0; level < noise_.size(); ++level) {
    const int64_t len = int64_t{1} << level;
    for (size_t index = 0; index < noise_[level].size(); ++index) {
      const double v = noise_[level][index];
      if (std::isnan(v)) continue;
      const int64_t lo = static_cast<int64_t>(index) * len + 1;
      out.emplace_back(Interval{lo, lo + len - 1}, v);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

double NoisyMean(std::span<const double> observations, int64_t count,
                 PartialSumLedger& ledger, Rng& rng) {
  if (observations.empty() || count < 1) {
    throw Error(ErrorCode::kEmptyHistory,
                "noisy mean over an empty observation history");
  }
  double total = 0.0;
  for (const Interval& block :
       Decompose(static_cast<int64_t>(observations.size()))) {
    double partial = 0.0;
    for (int64_t tau = block.lo; tau <= block.hi; ++tau)
      partial += observations[tau - 1];
    total += partial + ledger.NoiseFor(block, rng);
  }
  return total / static_cast<double>(count);
}

void PrivateStream::Append(double value) { observations_.push_back(value); }

double PrivateStream::BlockSum(const Interval& block) {
  double& slot = Grow(sums_, SlotOf(block));
  if (!std::isnan(slot)) return slot;
  if (block.length() == 1) {
    slot = observations_[block.lo - 1];
  } else {
    const int64_t mid = block.lo + block.length() / 2;
    const double left = BlockSum(Interval{block.lo, mid - 1});
    const double right = BlockSum(Interval{mid, block.hi});
    // Re-fetch: recursion may have resized the table.
    double& again = Grow(sums_, SlotOf(block));
    again = left + right;
    return again;
  }
  return slot;
}

double PrivateStream::NoisyMean(int64_t count, Rng& rng) {
  if (observations_.empty() || count < 1) {
    throw Error(ErrorCode::kEmptyHistory,
                "noisy mean over an empty observation history");
  }
  double total = 0.0;
  for (const Interval& block : Decompose(length())) {
    total += BlockSum(block) + ledger_.NoiseFor(block, rng);
  }
  return total / static_cast<double>(count);
}

}  // namespace fedbandit
