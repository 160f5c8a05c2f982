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

// Weight orderings and the restricted constraint family
//
//   C = { S_i ^ T : 0 <= i <= n, |T| <= k - 2 }
//
// where S_i is the set of the i heaviest elements.

#ifndef KDSM_FAMILY_H_
#define KDSM_FAMILY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kdsm/rational.h"
#include "kdsm/set_function.h"

namespace kdsm {

struct Ordering {
  // perm[i] is the 0-based element in position i (heaviest first).
  std::vector<int> perm;
  // prefixes[i] = {perm[0], ..., perm[i-1]}; prefixes[0] = {}.
  std::vector<Mask> prefixes;

  int size() const { return static_cast<int>(perm.size()); }
};

// Descending by weight, ties by ascending element index. Throws on a
// negative weight.
Ordering SortElements(std::span<const Rational> w);

// Ordering from an explicit permutation of {0..n-1}.
Ordering OrderingFromPermutation(std::vector<int> perm);

struct ConstraintFamily {
  Ordering ordering;
  int k = 2;
  std::vector<Mask> members;  // sorted, deduplicated

  int size() const { return static_cast<int>(members.size()); }
  std::optional<int> IndexOf(Mask m) const;
  // Member indices of S_1, ..., S_n.
  std::vector<int> ChainIndices() const;
};

// Requires 2 <= k <= n.
ConstraintFamily BuildFamily(const Ordering& ordering, int k);

// (n + 1) * sum_{i <= k-2} C(n, i).
std::uint64_t FamilySizeBound(int n, int k);
// 2 n^k.
std::uint64_t LooseFamilySizeBound(int n, int k);

std::uint64_t Binomial(int n, int r);

}  // namespace kdsm

#endif  // KDSM_FAMILY_H_
