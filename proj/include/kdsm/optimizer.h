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

// Linear optimization over the submodular polyhedron
//
//   P(f) = { x : x(T) <= f(T) for every T }
//
// of a k-distant submodular f, using only the constraints in the restricted
// family C of the weight ordering.
//
// The weights are first made strictly decreasing along the ordering by an
// exact perturbation small enough that every optimal vertex for the
// perturbed weights is optimal for the original ones. With strictly
// decreasing weights an optimal vertex of the restricted polyhedron lies in
// P(f), so one restricted LP (|C| columns, n rows) answers the full problem.

#ifndef KDSM_OPTIMIZER_H_
#define KDSM_OPTIMIZER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "kdsm/family.h"
#include "kdsm/ratlp.h"
#include "kdsm/rational.h"
#include "kdsm/set_function.h"

namespace kdsm {

// 1/(4n^2) * (1/n!)^3 * (1/bw)^n * (1/bf). Throws on bf <= 0 or bw < 1.
Rational Epsilon(int n, const Integer& bw, const Rational& bf);

// Largest denominator among the entries (in lowest terms).
Integer MaxDenominator(std::span<const Rational> w);

// w sorted non-increasingly along ordering. Adds eps * (n - i) to the i-th
// heaviest element (1-based) whenever it ties with the next one. The result
// is strictly decreasing along the ordering, otherwise
// InternalConsistencyError is thrown (eps too large).
RationalVector PerturbWeights(std::span<const Rational> w, const Ordering& ordering,
                              const Rational& eps);

struct DualEntry {
  Mask set;
  Rational value;  // > 0
};

struct OptResult {
  RationalVector x;          // optimal vertex of P(f0), f0 = f - f({})
  std::vector<DualEntry> y;  // optimal dual for the original w, support in C
  Rational value;            // w^T x
  ConstraintFamily family;
  RationalVector perturbed_w;
  Rational eps;
  int lp_pivots = 0;
};

// Solves max w^T x over P(f - f({})) for w >= 0. f is trusted to be
// k-distant; the exact strong-duality check throws InternalConsistencyError
// if the certificate fails.
OptResult MaximizeOverPf(const SetFunction& f, int k, std::span<const Rational> w);

// Restricted-LP oracle for repeated queries against one normalized function.
// Families, value columns and the last optimal basis are cached per ordering.
class RestrictedLpOracle {
 public:
  // f must satisfy f({}) = 0; bf >= max |f| (any positive upper bound).
  RestrictedLpOracle(SetFunction f, int k, Rational bf, std::size_t cache_limit = 4096);

  struct Entry {
    ConstraintFamily family;
    RationalVector values;  // f on family members
    StandardFormLP lp;
    std::vector<int> chain;
    std::optional<BasisFactor> last;  // last optimal basis
    RationalVector last_x;
  };

  // Cached family data for an ordering. *fresh reports a cache miss.
  Entry& Prepare(const Ordering& ordering, bool* fresh = nullptr);

  struct Solution {
    Ordering ordering;
    const Entry* entry = nullptr;
    RationalVector perturbed_w;
    Rational eps;
    RationalVector x;          // optimal vertex for the perturbed weights
    std::vector<int> basis;    // member indices
    std::vector<DualEntry> y;  // perturbed dual, positive entries
    int pivots = 0;
  };

  Solution Solve(std::span<const Rational> w);

  const SetFunction& function() const { return f_; }
  int k() const { return k_; }
  const Rational& bf() const { return bf_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  SetFunction f_;
  int k_;
  Rational bf_;
  std::size_t cache_limit_;
  std::map<std::vector<int>, Entry> cache_;
};

}  // namespace kdsm

#endif  // KDSM_OPTIMIZER_H_
