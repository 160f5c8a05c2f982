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

#include <gtest/gtest.h>

#include <numeric>

#include "kdsm/errors.h"
#include "test_util.h"

namespace kdsm {
namespace {

using testing::Set;
using testing::Vec;

std::vector<int> Identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

TEST(SortElements, DescendingWeights) {
  const RationalVector w = Vec({1, 3, 2});
  const Ordering o = SortElements(w);
  EXPECT_EQ(o.perm, (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(o.prefixes, (std::vector<Mask>{0, Set({2}), Set({2, 3}), Set({1, 2, 3})}));
}

TEST(SortElements, TiesByIndex) {
  const RationalVector w = Vec({2, 2, 1});
  EXPECT_EQ(SortElements(w).perm, Identity(3));
  const RationalVector z = Vec({0, 0, 0});
  EXPECT_EQ(SortElements(z).perm, Identity(3));
}

TEST(SortElements, NegativeRejected) {
  const RationalVector w = Vec({1, -1});
  EXPECT_THROW(SortElements(w), InvalidArgument);
}

TEST(BuildFamily, ChainOnlyForK2) {
  const ConstraintFamily c = BuildFamily(OrderingFromPermutation(Identity(3)), 2);
  EXPECT_EQ(c.members, (std::vector<Mask>{0, 1, 3, 7}));
  EXPECT_EQ(c.ChainIndices().size(), 3u);
}

TEST(BuildFamily, AllSubsetsForN3K3) {
  const ConstraintFamily c = BuildFamily(OrderingFromPermutation(Identity(3)), 3);
  EXPECT_EQ(c.size(), 8);
}

TEST(BuildFamily, N4K3Identity) {
  const ConstraintFamily c = BuildFamily(OrderingFromPermutation(Identity(4)), 3);
  EXPECT_EQ(c.members, (std::vector<Mask>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 13, 14, 15}));
  EXPECT_LE(static_cast<std::uint64_t>(c.size()), FamilySizeBound(4, 3));
  ASSERT_TRUE(c.IndexOf(11).has_value());
  EXPECT_FALSE(c.IndexOf(10).has_value());
}

TEST(BuildFamily, KAboveN) {
  EXPECT_THROW(BuildFamily(OrderingFromPermutation(Identity(3)), 4), InvalidArgument);
}

TEST(FamilySizeBound, Values) {
  EXPECT_EQ(FamilySizeBound(3, 2), 4u);
  EXPECT_EQ(FamilySizeBound(4, 3), 25u);
  EXPECT_EQ(FamilySizeBound(10, 4), 616u);
  EXPECT_LE(FamilySizeBound(10, 4), LooseFamilySizeBound(10, 4));
  EXPECT_EQ(LooseFamilySizeBound(10, 4), 20000u);
}

TEST(Binomial, Values) {
  EXPECT_EQ(Binomial(5, 2), 10u);
  EXPECT_EQ(Binomial(30, 4), 27405u);
  EXPECT_EQ(Binomial(3, 5), 0u);
}

}  // namespace
}  // namespace kdsm
