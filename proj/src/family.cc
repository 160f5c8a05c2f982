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

#include "kdsm/family.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "kdsm/errors.h"

namespace kdsm {

Ordering OrderingFromPermutation(std::vector<int> perm) {
  const int n = static_cast<int>(perm.size());
  Mask seen = 0;
  for (int e : perm) {
    if (e < 0 || e >= n || (seen >> e & 1)) throw InvalidArgument("not a permutation");
    seen |= Mask{1} << e;
  }
  Ordering o;
  o.prefixes.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) o.prefixes[i + 1] = o.prefixes[i] | (Mask{1} << perm[i]);
  o.perm = std::move(perm);
  return o;
}

Ordering SortElements(std::span<const Rational> w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) {
      throw InvalidArgument("weight of element " + std::to_string(i + 1) + " is negative (" +
                            ToString(w[i]) + ")");
    }
  }
  std::vector<int> perm(w.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return w[a] > w[b]; });
  return OrderingFromPermutation(std::move(perm));
}

std::optional<int> ConstraintFamily::IndexOf(Mask m) const {
  auto it = std::lower_bound(members.begin(), members.end(), m);
  if (it == members.end() || *it != m) return std::nullopt;
  return static_cast<int>(it - members.begin());
}

std::vector<int> ConstraintFamily::ChainIndices() const {
  std::vector<int> out;
  out.reserve(ordering.size());
  for (int i = 1; i <= ordering.size(); ++i) out.push_back(*IndexOf(ordering.prefixes[i]));
  return out;
}

ConstraintFamily BuildFamily(const Ordering& ordering, int k) {
  const int n = ordering.size();
  if (k < 2 || k > n) {
    throw InvalidArgument("family needs 2 <= k <= n, got k=" + std::to_string(k) +
                          ", n=" + std::to_string(n));
  }
  ConstraintFamily family{ordering, k, {}};
  std::vector<Mask> flips;
  ForEachSubsetUpTo(n, k - 2, [&](Mask t) { flips.push_back(t); });
  family.members.reserve(flips.size() * (n + 1));
  for (Mask prefix : ordering.prefixes) {
    for (Mask t : flips) family.members.push_back(prefix ^ t);
  }
  std::sort(family.members.begin(), family.members.end());
  family.members.erase(std::unique(family.members.begin(), family.members.end()),
                       family.members.end());
  return family;
}

std::uint64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (int i = 1; i <= r; ++i) acc = acc * static_cast<std::uint64_t>(n - r + i) / i;
  return acc;
}

std::uint64_t FamilySizeBound(int n, int k) {
  std::uint64_t sum = 0;
  for (int i = 0; i <= k - 2; ++i) sum += Binomial(n, i);
  return static_cast<std::uint64_t>(n + 1) * sum;
}

std::uint64_t LooseFamilySizeBound(int n, int k) {
  std::uint64_t p = 2;
  for (int i = 0; i < k; ++i) p *= static_cast<std::uint64_t>(n);
  return p;
}

}  // namespace kdsm
