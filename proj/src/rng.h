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

#ifndef FEDBANDIT_SRC_RNG_H_
#define FEDBANDIT_SRC_RNG_H_

#include <cstdint>
#include <random>

namespace fedbandit {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to derive independent substream seeds so that
// e.g. the gossip-edge stream does not depend on the number of arms.
inline uint64_t MixSeed(uint64_t a, uint64_t b) {
  uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream tags for per-trial substreams.
inline constexpr uint64_t kEdgeStream = 0x6564676573ULL;
inline constexpr uint64_t kRewardStream = 0x7277ULL;
inline constexpr uint64_t kSelectStream = 0x73656cULL;
inline constexpr uint64_t kNoiseStream = 0x6e6f6973ULL;

inline uint64_t TrialSeed(uint64_t master_seed, uint64_t trial_index) {
  return MixSeed(master_seed, trial_index);
}

inline uint64_t AgentStreamSeed(uint64_t trial_seed, uint64_t agent,
                                uint64_t stream) {
  return MixSeed(MixSeed(trial_seed, agent), stream);
}

// Uniform double in [0, 1) with 53 random bits; independent of the standard
// library's distribution implementation.
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace fedbandit

#endif  // FEDBANDIT_SRC_RNG_H_
