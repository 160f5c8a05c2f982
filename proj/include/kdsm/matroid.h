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

// Rank-oracle matroids and weighted intersection through the minimum rank
// function r_min(X) = min(r1(X), r2(X)).
//
// When both matroids have rank r, r(X) = |X| for |X| <= r - k and r(X) = r
// for |X| >= r + k, r_min is 4k-distant submodular. The intersection polytope
// { x >= 0 : x(T) <= r_min(T) } is then optimized by cutting planes whose
// separation step is k-distant minimization.

#ifndef KDSM_MATROID_H_
#define KDSM_MATROID_H_

#include <optional>
#include <string>
#include <vector>

#include "kdsm/minimizer.h"
#include "kdsm/rational.h"
#include "kdsm/set_function.h"

namespace kdsm {

enum class MatroidKind { kUniform, kSparsePaving, kNearUniform };

const char* ToString(MatroidKind kind);

inline constexpr int kMatroidValidationLimit = 14;

class Matroid {
 public:
  static Matroid Uniform(int n, int r);
  // Rank-r sparse paving matroid whose circuit-hyperplanes are the given
  // r-sets; they must pairwise share at most r - 2 elements.
  static Matroid SparsePaving(int n, int r, std::vector<Mask> forbidden);
  // Explicit rank table (2^n entries) validated exhaustively as a matroid
  // satisfying the near-uniform hypothesis for k. n <= 14.
  static Matroid NearUniform(int n, int r, int k, std::vector<int> ranks);

  int n() const { return n_; }
  int rank() const { return r_; }
  MatroidKind kind() const { return kind_; }
  int declared_k() const { return k_; }
  const std::vector<Mask>& forbidden() const { return forbidden_; }

  int Rank(Mask x) const;
  bool Independent(Mask x) const { return Rank(x) == Popcount(x); }

  // First set breaking r(X) = |X| for |X| <= r - k or r(X) = r for
  // |X| >= r + k (exhaustive for n <= 14, closed form otherwise).
  std::optional<Mask> NearUniformViolation(int k) const;

 private:
  Matroid(int n, int r, MatroidKind kind) : n_(n), r_(r), kind_(kind) {}

  int n_;
  int r_;
  MatroidKind kind_;
  int k_ = 1;
  std::vector<Mask> forbidden_;  // sorted
  std::vector<int> table_;
};

// Human-readable reason the table is not a matroid rank function, if any:
// r({}) = 0, unit increase, and submodularity, checked exhaustively.
std::optional<std::string> MatroidRankViolation(int n, const std::vector<int>& ranks);

struct MinRankInstance {
  Matroid m1;
  Matroid m2;
  int k;
  SetFunction rmin;  // declared 4k-distant
};

// Requires equal ranks, the near-uniform hypothesis for k in both, and
// 4k <= n so the declared distance fits the ground set.
MinRankInstance BuildMinRank(const Matroid& m1, const Matroid& m2, int k);

struct IntersectionResult {
  Rational weight;
  Mask set = 0;
  RationalVector x;
  int rounds = 0;          // working LPs solved
  int cuts = 0;            // rank constraints added
  long oracle_calls = 0;   // restricted-LP solves inside separation
};

// Maximum-weight common independent set for integer weights.
IntersectionResult SolveWeightedMatroidIntersection(const MinRankInstance& instance,
                                                    const RationalVector& w,
                                                    const MembershipOptions& options = {});

}  // namespace kdsm

#endif  // KDSM_MATROID_H_
