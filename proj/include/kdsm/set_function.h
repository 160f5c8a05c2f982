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

// Ground sets, subset masks and set-function oracles.
//
// Element i (0-based in code, 1-based in user-facing text) is bit i of a
// Mask. A SetFunction is an immutable handle; copies share the backing.

#ifndef KDSM_SET_FUNCTION_H_
#define KDSM_SET_FUNCTION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "kdsm/rational.h"

namespace kdsm {

using Mask = std::uint64_t;

// Largest ground set a Mask can address.
inline constexpr int kMaxGroundSize = 63;
// Largest ground set for which a full 2^n value table is materialized.
inline constexpr int kMaxDenseSize = 20;

inline int Popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask FullMask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

class GroundSet {
 public:
  explicit GroundSet(int n);
  GroundSet(int n, std::vector<std::string> labels);

  int size() const { return n_; }
  Mask full() const { return FullMask(n_); }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Explicit label if present, else "a".."z" for n <= 26, else "s<i+1>".
  std::string Label(int i) const;
  // Labels of the elements of m in ascending element order.
  std::vector<std::string> Render(Mask m) const;

 private:
  int n_;
  std::vector<std::string> labels_;
};

struct EvaluatorOptions {
  // Maximum number of memoized values; 0 disables memoization.
  std::size_t memo_budget = std::size_t{1} << 16;
  // Positive integer D such that D * f is integer-valued.
  Integer value_scale = 1;
};

class SetFunction {
 public:
  using Evaluator = std::function<Rational(Mask)>;

  // Dense table of 2^n values indexed by mask; n <= kMaxDenseSize.
  static SetFunction Dense(GroundSet ground, int k, RationalVector values);
  // Oracle-backed function. The evaluator must be deterministic and safe to
  // call concurrently.
  static SetFunction FromEvaluator(GroundSet ground, int k, Evaluator eval,
                                   EvaluatorOptions options = {});

  const GroundSet& ground() const;
  int n() const { return ground().size(); }
  Mask full() const { return ground().full(); }
  // Declared distance parameter, 2 <= k <= n.
  int k() const;

  Rational operator()(Mask x) const;

  // Same oracle with a different declared distance parameter.
  SetFunction WithK(int k) const;

  bool is_dense() const;
  // All 2^n values; n <= kMaxDenseSize.
  RationalVector Table() const;
  // Dense copy of this function (same declared k).
  SetFunction Materialize() const;

  // D with D * f integer-valued: exact for tables and shifts, declared for
  // evaluator-backed functions.
  Integer ValueScale() const;

  // g(X) = f(X) + constant + [X != {}] * nonempty - x(X). x may be empty
  // (no modular part). Nested shifts collapse into one wrapper.
  SetFunction Shifted(const Rational& constant, const Rational& nonempty,
                      std::span<const Rational> x) const;

  struct Impl;

 private:
  explicit SetFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Enumerates every subset of {0..n-1} of size <= max_size, by size then in
// increasing mask order within a size.
template <typename Fn>
void ForEachSubsetUpTo(int n, int max_size, Fn&& fn) {
  if (max_size > n) max_size = n;
  for (int size = 0; size <= max_size; ++size) {
    if (size == 0) {
      fn(Mask{0});
      continue;
    }
    Mask m = FullMask(size);
    const Mask limit = Mask{1} << n;
    while (m < limit) {
      fn(m);
      const Mask c = m & (~m + 1);
      const Mask r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
}

}  // namespace kdsm

#endif  // KDSM_SET_FUNCTION_H_
