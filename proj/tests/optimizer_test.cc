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

#include "kdsm/optimizer.h"

#include <gtest/gtest.h>

#include "kdsm/core.h"
#include "kdsm/errors.h"
#include "kdsm/reference.h"
#include "test_util.h"

namespace kdsm {
namespace {

using testing::Set;
using testing::UniformRank;
using testing::Vec;
using testing::VecQ;
using testing::Zero;

TEST(Epsilon, Values) {
  EXPECT_EQ(Epsilon(2, 1, 1), Rational(1, 128));
  EXPECT_EQ(Epsilon(3, 2, 5), Rational(1, 311040));
  EXPECT_EQ(Epsilon(1, 1, 1), Rational(1, 4));
}

TEST(Epsilon, ZeroBoundRejected) { EXPECT_THROW(Epsilon(2, 1, 0), InvalidArgument); }

TEST(PerturbWeights, Examples) {
  const Rational eps(1, 1000);
  const RationalVector tied = Vec({2, 2, 1});
  EXPECT_EQ(PerturbWeights(tied, SortElements(tied), eps),
            (RationalVector{2 + 2 * eps, 2, 1}));
  const RationalVector ones = Vec({1, 1, 1});
  EXPECT_EQ(PerturbWeights(ones, SortElements(ones), eps),
            (RationalVector{1 + 2 * eps, 1 + eps, 1}));
  const RationalVector distinct = Vec({3, 2, 1});
  EXPECT_EQ(PerturbWeights(distinct, SortElements(distinct), eps), distinct);
}

TEST(PerturbWeights, OversizedEpsilonDetected) {
  const RationalVector w = Vec({2, 1, 1});
  EXPECT_THROW(PerturbWeights(w, SortElements(w), 1), InternalConsistencyError);
}

TEST(MaximizeOverPf, ZeroFunction) {
  const RationalVector w = Vec({1, 1});
  const OptResult r = MaximizeOverPf(Zero(2), 2, w);
  EXPECT_EQ(r.x, Vec({0, 0}));
  EXPECT_EQ(r.value, 0);
}

TEST(MaximizeOverPf, UniformRank) {
  const RationalVector w = Vec({3, 2, 1});
  const OptResult r = MaximizeOverPf(UniformRank(3, 2), 2, w);
  EXPECT_EQ(r.x, Vec({1, 1, 0}));
  EXPECT_EQ(r.value, 5);
}

TEST(MaximizeOverPf, UniformRankMinusFirstElement) {
  const RationalVector a = Vec({1, 0, 0});
  const SetFunction f = SubtractModular(UniformRank(3, 2), a);
  const RationalVector w = Vec({3, 2, 1});
  const OptResult r = MaximizeOverPf(f, 2, w);
  EXPECT_EQ(r.x, Vec({0, 1, 0}));
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(BruteforceMaximizeFull(f, w).value, 2);
}

TEST(MaximizeOverPf, DualCertificate) {
  const RationalVector w = VecQ({"1/2", "1/2", "0", "3"});
  const SetFunction f = UniformRank(4, 2, 3).WithK(3);
  const OptResult r = MaximizeOverPf(f, 3, w);
  RationalVector chi(4, 0);
  Rational dual_value = 0;
  for (const DualEntry& e : r.y) {
    EXPECT_GT(e.value, 0);
    EXPECT_TRUE(r.family.IndexOf(e.set).has_value());
    for (int i = 0; i < 4; ++i) {
      if ((e.set >> i) & 1) chi[i] += e.value;
    }
    dual_value += e.value * f(e.set);
  }
  EXPECT_EQ(chi, w);
  EXPECT_EQ(dual_value, r.value);
  EXPECT_EQ(r.value, BruteforceMaximizeFull(f, w).value);
}

TEST(MaximizeOverPf, RejectsBadInput) {
  const RationalVector neg = Vec({1, -1, 0});
  EXPECT_THROW(MaximizeOverPf(UniformRank(3, 2), 2, neg), InvalidArgument);
  const RationalVector w = Vec({1, 1, 1});
  EXPECT_THROW(MaximizeOverPf(UniformRank(3, 2), 4, w), InvalidArgument);
}

TEST(RestrictedLpOracle, CachesPerOrdering) {
  RestrictedLpOracle oracle(UniformRank(4, 2), 3, 4);
  const RationalVector w1 = Vec({4, 3, 2, 1});
  const RationalVector w2 = Vec({8, 3, 2, 1});
  bool fresh = false;
  oracle.Prepare(SortElements(w1), &fresh);
  EXPECT_TRUE(fresh);
  oracle.Prepare(SortElements(w2), &fresh);
  EXPECT_FALSE(fresh);
  const auto s1 = oracle.Solve(w1);
  const auto s2 = oracle.Solve(w2);
  EXPECT_EQ(oracle.cache_size(), 1u);
  EXPECT_EQ(s1.x, s2.x);
}

}  // namespace
}  // namespace kdsm
