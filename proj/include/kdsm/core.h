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

// Distance checks, normalization, value bounds and modular transforms.

#ifndef KDSM_CORE_H_
#define KDSM_CORE_H_

#include <span>

#include "kdsm/rational.h"
#include "kdsm/set_function.h"

namespace kdsm {

inline constexpr int kExhaustivePairGuard = 14;

struct KDistantVerdict {
  bool holds = true;
  // Lexicographically smallest violating pair (x < y), valid when !holds.
  Mask x = 0;
  Mask y = 0;
};

// Checks f(X) + f(Y) >= f(X | Y) + f(X & Y) for every pair with
// |X ^ Y| >= k by enumerating all pairs. Throws InstanceTooLarge when
// n > guard.
KDistantVerdict IsKDistant(const SetFunction& f, int k, int guard = kExhaustivePairGuard);

struct Normalized {
  SetFunction function;  // f0(X) = f(X) - f({})
  Rational offset;       // f({})
};

Normalized Normalize(const SetFunction& f);
SetFunction Denormalize(const SetFunction& f0, const Rational& offset);

// M = sum of |f(T)| over |T| <= k. For a k-distant f with f({}) = 0 every
// value lies in [f(S) - M, M].
struct ValueBounds {
  Rational M;
  Rational lower;
  Rational upper;
  Rational abs_bound;  // max(M, |f(S) - M|)
};

ValueBounds SmallSetBounds(const SetFunction& f, int k);

// g({}) = 0, g(X) = f(X) + c otherwise. Requires f({}) = 0 and c >= 0.
SetFunction ShiftNonempty(const SetFunction& f, const Rational& c);

// g(T) = f(T) - x(T).
SetFunction SubtractModular(const SetFunction& f, std::span<const Rational> x);

}  // namespace kdsm

#endif  // KDSM_CORE_H_
