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

// Minimization of integer-valued k-distant functions.
//
// membership_zero decides whether a normalized g is nonnegative, i.e. whether
// 0 lies in P(g). It searches the weight box [0,1]^n for a w with
//
//   h(w) = max { w^T x : x in P(g) } < 0
//
// by a central-cut ellipsoid whose oracle is the restricted-LP optimizer.
// Negative answers carry a witness set T with g(T) < 0, checked exactly.
// Nonnegative answers come from one of these exact certificates:
//
//   nonneg-vertex    an optimal vertex x* >= 0 (so 0 <= x*(T) <= g(T))
//   coverage         every subset appeared in some queried family and none
//                    had a negative value
//   hull             a convex combination of collected vertices is >= 0
//
// or, failing those, from exhausting the iteration budget.

#ifndef KDSM_MINIMIZER_H_
#define KDSM_MINIMIZER_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kdsm/rational.h"
#include "kdsm/set_function.h"

namespace kdsm {

struct MembershipOptions {
  std::optional<long> budget;  // ellipsoid iterations; default from n and Bg
  bool verify = false;         // cross-check nonnegative verdicts exhaustively
  int hull_period = 8;         // iterations between hull-certificate LPs
  bool use_coverage = true;
  bool use_hull = true;
  std::ostream* trace = nullptr;
};

struct MembershipVerdict {
  bool nonnegative = true;
  Mask witness = 0;
  Rational value;  // g(witness), < 0
  long oracle_calls = 0;  // restricted-LP solves
  long iterations = 0;    // ellipsoid cuts
  long lp_pivots = 0;
  std::string certificate;  // how the verdict was reached
};

// Default budget ceil(8 n (n+1) (n ln 2 + ln(8 n^2 n! Bg))).
long DefaultBudget(int n, const Rational& bg);

// g normalized and integer-valued, declared k-distant; bg >= max |g|.
MembershipVerdict MembershipZero(const SetFunction& g, int k, const Rational& bg,
                                 const MembershipOptions& options = {});

struct SearchStep {
  Rational shift;
  MembershipVerdict verdict;
};

struct MinimizeResult {
  Rational min_value;
  Mask argmin = 0;
  Rational offset;
  std::vector<SearchStep> trace;
  long oracle_calls = 0;
};

// f integer-valued, declared k-distant, 2 <= k <= n.
MinimizeResult Minimize(const SetFunction& f, int k, const MembershipOptions& options = {});

struct BruteforceMinimum {
  Rational value;
  Mask argmin = 0;
};

inline constexpr int kBruteforceMinimizeLimit = 24;

// Exhaustive scan, ties to the smallest mask. n <= 24.
BruteforceMinimum BruteforceMinimize(const SetFunction& f);

}  // namespace kdsm

#endif  // KDSM_MINIMIZER_H_
