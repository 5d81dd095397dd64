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

// Binary partial-sum mechanism for releasing a running mean under
// epsilon-differential privacy. Every prefix [1, t] is split into dyadic
// blocks; each block receives one Laplace draw the first time it is used,
// and that draw is reused for the life of the stream.

#ifndef FEDBANDIT_SRC_PRIVACY_H_
#define FEDBANDIT_SRC_PRIVACY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rng.h"

namespace fedbandit {

// Closed interval [lo, hi] of 1-based stream positions.
struct Interval {
  int64_t lo = 1;
  int64_t hi = 1;

  int64_t length() const { return hi - lo + 1; }
  bool contains(int64_t tau) const { return lo <= tau && tau <= hi; }
  // Length is a power of two and lo - 1 is a multiple of the length.
  bool is_dyadic() const;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Splits [1, t] by repeatedly clearing the lowest set bit of t. Returns
// popcount(t) disjoint intervals, highest first.
std::vector<Interval> Decompose(int64_t t);

// Laplace(0, scale) by inverse CDF. scale == 0 is the no-noise mode and
// returns exactly 0. Throws kInvalidScale for negative or non-finite scale.
double LaplaceSample(double scale, Rng& rng);

// Number of noised blocks an observation may join over a horizon: the
// ceiling of log_base(horizon), at least 1.
int BudgetLevels(int64_t horizon, double log_base = 2.0);

// Per-block Laplace scale for a total budget epsilon (infinite epsilon gives
// 0, i.e. no noise).
double NoiseScale(double epsilon, int64_t horizon, double log_base = 2.0);

// Memoized map from dyadic blocks to their Laplace draws.
class PartialSumLedger {
 public:
  explicit PartialSumLedger(double scale = 0.0);

  double scale() const { return scale_; }
  size_t size() const { return size_; }

  std::optional<double> Find(const Interval& block) const;
  // Returns the stored draw, drawing and storing a fresh one on first use.
  double NoiseFor(const Interval& block, Rng& rng);

  // Blocks containing stream position tau.
  int CountContaining(int64_t tau) const;
  // All (block, noise) pairs ordered by block.
  std::vector<std::pair<Interval, double>> Entries() const;

 private:
  double scale_;
  size_t size_ = 0;
  // noise_[level][index] for the block of length 2^level starting at
  // index * 2^level + 1; NaN marks "not drawn yet".
  std::vector<std::vector<double>> noise_;
};

// Releases the noisy mean of `observations` (position 1 is observations[0])
// divided by `count`. Partial sums are recomputed from the raw stream.
// Throws kEmptyHistory if the stream is empty or count < 1.
double NoisyMean(std::span<const double> observations, int64_t count,
                 PartialSumLedger& ledger, Rng& rng);

// One private observation stream (one agent, one arm). Same release as
// NoisyMean, but block sums are cached so each release is O(log t).
class PrivateStream {
 public:
  explicit PrivateStream(double scale = 0.0) : ledger_(scale) {}

  void Append(double value);
  double NoisyMean(int64_t count, Rng& rng);

  const PartialSumLedger& ledger() const { return ledger_; }
  std::span<const double> observations() const { return observations_; }
  int64_t length() const { return static_cast<int64_t>(observations_.size()); }

 private:
  double BlockSum(const Interval& block);

  std::vector<double> observations_;
  PartialSumLedger ledger_;
  std::vector<std::vector<double>> sums_;  // same layout as the ledger
};

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_PRIVACY_H_
