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

#include "kdsm/core.h"

#include <gtest/gtest.h>

#include "kdsm/apps.h"
#include "kdsm/errors.h"
#include "test_util.h"

namespace kdsm {
namespace {

using testing::Set;
using testing::Table;
using testing::UniformRank;
using testing::Vec;
using testing::Zero;

TEST(IsKDistant, ZeroFunctionHolds) { EXPECT_TRUE(IsKDistant(Zero(3), 2).holds); }

TEST(IsKDistant, IndicatorOfPairReportsFirstViolationInMaskOrder) {
  const SetFunction f = IndicatorFunction(Set({1, 2}), 3);
  const KDistantVerdict v = IsKDistant(f, 2);
  ASSERT_FALSE(v.holds);
  // Scan order is numeric mask order, so ({a,b},{c}) comes before ({a,b},{a,c}).
  EXPECT_EQ(v.x, Set({1, 2}));
  EXPECT_EQ(v.y, Set({3}));
  const Mask ac = Set({1, 3});
  EXPECT_LT(f(Set({1, 2})) + f(ac), f(Set({1, 2, 3})) + f(Set({1})));
}

TEST(IsKDistant, UniformRankHolds) { EXPECT_TRUE(IsKDistant(UniformRank(3, 2), 2).holds); }

TEST(IsKDistant, GuardExceeded) {
  EXPECT_THROW(IsKDistant(Zero(6), 2, 5), InstanceTooLarge);
}

TEST(Normalize, Constant) {
  const Normalized n = Normalize(Table(2, 2, Vec({5, 5, 5, 5})));
  EXPECT_EQ(n.offset, 5);
  for (Mask x = 0; x < 4; ++x) EXPECT_EQ(n.function(x), 0);
}

TEST(Normalize, AlreadyNormalized) {
  const SetFunction f = UniformRank(3, 2);
  const Normalized n = Normalize(f);
  EXPECT_EQ(n.offset, 0);
  for (Mask x = 0; x < 8; ++x) EXPECT_EQ(n.function(x), f(x));
}

TEST(Normalize, ShiftedFullIndicator) {
  RationalVector t(8, 3);
  t[7] = 2;
  const Normalized n = Normalize(Table(3, 2, t));
  EXPECT_EQ(n.offset, 3);
  EXPECT_EQ(n.function(7), -1);
  for (Mask x = 0; x < 7; ++x) EXPECT_EQ(n.function(x), 0);
  const SetFunction back = Denormalize(n.function, n.offset);
  for (Mask x = 0; x < 8; ++x) EXPECT_EQ(back(x), t[x]);
}

TEST(SmallSetBounds, FullIndicator) {
  const ValueBounds b = SmallSetBounds(IndicatorFunction(7, 3), 2);
  EXPECT_EQ(b.M, 0);
  EXPECT_EQ(b.lower, -1);
  EXPECT_EQ(b.upper, 0);
}

TEST(SmallSetBounds, ZeroFunction) {
  for (int k = 2; k <= 4; ++k) {
    const ValueBounds b = SmallSetBounds(Zero(4), k);
    EXPECT_EQ(b.M, 0);
    EXPECT_EQ(b.lower, 0);
    EXPECT_EQ(b.upper, 0);
  }
}

TEST(SmallSetBounds, UniformRank) {
  const ValueBounds b = SmallSetBounds(UniformRank(3, 2), 2);
  EXPECT_EQ(b.M, 9);
  EXPECT_EQ(b.lower, -7);
  EXPECT_EQ(b.upper, 9);
}

TEST(SmallSetBounds, KAboveN) { EXPECT_THROW(SmallSetBounds(Zero(3), 4), InvalidArgument); }

TEST(ShiftNonempty, ZeroFunction) {
  const SetFunction g = ShiftNonempty(Zero(3), 1);
  EXPECT_EQ(g(0), 0);
  for (Mask x = 1; x < 8; ++x) EXPECT_EQ(g(x), 1);
}

TEST(ShiftNonempty, FullIndicator) {
  const SetFunction g = ShiftNonempty(IndicatorFunction(7, 3), 1);
  EXPECT_EQ(g(0), 0);
  EXPECT_EQ(g(7), 0);
  for (Mask x = 1; x < 7; ++x) EXPECT_EQ(g(x), 1);
  const SetFunction h = ShiftNonempty(IndicatorFunction(7, 3), Rational(1, 2));
  Rational lo = h(0);
  for (Mask x = 1; x < 8; ++x) lo = std::min(lo, h(x));
  EXPECT_EQ(lo, Rational(-1, 2));
  EXPECT_EQ(h(7), Rational(-1, 2));
}

TEST(ShiftNonempty, NegativeShiftRejected) {
  EXPECT_THROW(ShiftNonempty(Zero(3), -1), InvalidArgument);
}

TEST(SubtractModular, Identity) {
  const SetFunction f = UniformRank(3, 2);
  const RationalVector x = Vec({0, 0, 0});
  const SetFunction g = SubtractModular(f, x);
  for (Mask m = 0; m < 8; ++m) EXPECT_EQ(g(m), f(m));
}

TEST(SubtractModular, UniformRankMinusOnes) {
  const RationalVector x = Vec({1, 1, 1});
  const SetFunction g = SubtractModular(UniformRank(3, 2), x);
  EXPECT_EQ(g(Set({1})), 0);
  EXPECT_EQ(g(7), -1);
}

TEST(SubtractModular, ZeroFunction) {
  const RationalVector x = Vec({1, 0, 0});
  const SetFunction g = SubtractModular(Zero(3), x);
  EXPECT_EQ(g(Set({1})), -1);
  EXPECT_EQ(g(Set({2})), 0);
}

TEST(SubtractModular, DimensionMismatch) {
  const RationalVector x = Vec({1, 0});
  EXPECT_THROW(SubtractModular(Zero(3), x), InvalidArgument);
}

}  // namespace
}  // namespace kdsm
