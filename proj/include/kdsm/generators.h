// Copyright 2026 The kdsm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded instance generators. Every generator is a pure function of its
// arguments: the random stream is mt19937_64 reduced by modulo, which is
// identical across standard libraries.

#ifndef KDSM_GENERATORS_H_
#define KDSM_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kdsm/apps.h"
#include "kdsm/matroid.h"
#include "kdsm/set_function.h"

namespace kdsm {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [0, bound); bound > 0.
  std::uint64_t Below(std::uint64_t bound) { return engine_() % bound; }
  // Uniform on [lo, hi].
  long Uniform(long lo, long hi) { return lo + static_cast<long>(Below(hi - lo + 1)); }
  bool Chance(int num, int den) { return Below(den) < static_cast<std::uint64_t>(num); }

 private:
  std::mt19937_64 engine_;
};

enum class Strategy { kRejection, kCut, kMinRank, kClique, kIndicatorShifted };

const char* ToString(Strategy strategy);
Strategy ParseStrategy(std::string_view name);
inline constexpr Strategy kAllStrategies[] = {Strategy::kRejection, Strategy::kCut,
                                              Strategy::kMinRank, Strategy::kClique,
                                              Strategy::kIndicatorShifted};

inline constexpr int kRejectionMaxN = 6;

// Integer-valued function declared k-distant. Strategy preconditions:
// rejection needs n <= 6, clique needs k >= 3, cut needs (k+1)/2 <= n-1.
SetFunction GenerateKDistant(int n, int k, std::uint64_t seed, Strategy strategy);

// Random weights satisfying the cut condition for parameter kc
// (weights in [-3, 6], raised until the condition holds).
WeightedCompleteGraph RandomCutGraph(int nv, int kc, Rng& rng);

// Each edge present with probability num/den.
Graph RandomGraph(int nv, int num, int den, Rng& rng);

// Greedy random family of pairwise compatible circuit-hyperplanes.
Matroid RandomSparsePaving(int n, int r, Rng& rng);

// Random integer submodular function (concave-of-modular terms plus a
// modular part).
SetFunction RandomSubmodular(int n, std::uint64_t seed);

// Strictly submodular base with a few isolated dips; candidates for the
// p/q checks (not necessarily p/q-submodular).
SetFunction RandomDippedFunction(int n, std::uint64_t seed);

}  // namespace kdsm

#endif  // KDSM_GENERATORS_H_
