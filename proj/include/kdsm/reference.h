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

// Brute-force anchors: the full-constraint LP over all 2^n subsets and the
// exhaustive common-independent-set search.

#ifndef KDSM_REFERENCE_H_
#define KDSM_REFERENCE_H_

#include <vector>

#include "kdsm/matroid.h"
#include "kdsm/rational.h"
#include "kdsm/set_function.h"

namespace kdsm {

inline constexpr int kFullLpLimit = 12;
inline constexpr int kCommonIndependentLimit = 8;

struct FullLPOracleResult {
  Rational value;
  RationalVector x;
  std::vector<Mask> tight;  // every T with x(T) = f(T)
};

// max w^T x over P(f) with every constraint; n <= 12, w >= 0, f({}) >= 0.
FullLPOracleResult BruteforceMaximizeFull(const SetFunction& f, const RationalVector& w);

struct CommonIndependentResult {
  Rational weight;
  Mask set = 0;
};

// Exhaustive scan; ties to the smallest mask. n <= 8.
CommonIndependentResult BruteforceCommonIndependent(const Matroid& m1, const Matroid& m2,
                                                    const RationalVector& w);

}  // namespace kdsm

#endif  // KDSM_REFERENCE_H_
