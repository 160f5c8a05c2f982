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

#include "kdsm/ratlp.h"

#include <gtest/gtest.h>

#include <numeric>

#include "kdsm/errors.h"
#include "test_util.h"

namespace kdsm {
namespace {

using testing::UniformRank;
using testing::Vec;
using testing::VecQ;

TEST(Simplex, SingleEquality) {
  const StandardFormLP lp = StandardFormLP::FromDense({Vec({1})}, Vec({1}), Vec({1}));
  const LPSolution s = SolveStandardForm(lp);
  ASSERT_EQ(s.status, LPStatus::kOptimal);
  EXPECT_EQ(s.y, Vec({1}));
  EXPECT_EQ(s.objective, 1);
}

TEST(Simplex, Unbounded) {
  const StandardFormLP lp = StandardFormLP::FromDense({Vec({0})}, Vec({0}), Vec({-1}));
  EXPECT_EQ(SolveStandardForm(lp).status, LPStatus::kUnbounded);
}

TEST(Simplex, Infeasible) {
  const StandardFormLP lp = StandardFormLP::FromDense({Vec({1, 1})}, Vec({-1}), Vec({0, 0}));
  EXPECT_EQ(SolveStandardForm(lp).status, LPStatus::kInfeasible);
}

// Beale's example cycles under the largest-coefficient rule; the smallest
// subscript rule must terminate at the optimum -5/4.
TEST(Simplex, BealeDoesNotCycle) {
  std::vector<RationalVector> a = {
      VecQ({"1/4", "-8", "-1", "9", "1", "0", "0"}),
      VecQ({"1/2", "-12", "-1/2", "3", "0", "1", "0"}),
      VecQ({"0", "0", "1", "0", "0", "0", "1"}),
  };
  const StandardFormLP lp = StandardFormLP::FromDense(
      a, Vec({0, 0, 1}), VecQ({"-3/4", "20", "-1/2", "6", "0", "0", "0"}));
  SolveOptions options;
  options.initial_basis = std::vector<int>{4, 5, 6};
  const LPSolution s = SolveStandardForm(lp, options);
  ASSERT_EQ(s.status, LPStatus::kOptimal);
  EXPECT_EQ(s.objective, Rational(-5, 4));
  EXPECT_FALSE(s.used_phase_one);
}

TEST(Simplex, DualsCertifyOptimality) {
  std::vector<RationalVector> a = {Vec({1, 1, 1, 0}), Vec({1, -1, 0, 1})};
  const StandardFormLP lp = StandardFormLP::FromDense(a, Vec({4, 1}), Vec({-2, -3, 0, 0}));
  const LPSolution s = SolveStandardForm(lp);
  ASSERT_EQ(s.status, LPStatus::kOptimal);
  EXPECT_EQ(s.objective, -12);
  Rational dual_obj = 0;
  for (int r = 0; r < 2; ++r) dual_obj += s.duals[r] * lp.b[r];
  EXPECT_EQ(dual_obj, s.objective);
  for (int j = 0; j < lp.cols(); ++j) {
    Rational reduced = lp.c[j];
    for (const SparseEntry& e : lp.columns[j]) reduced -= s.duals[e.row] * e.value;
    EXPECT_GE(reduced, 0);
  }
}

TEST(Simplex, RedundantRows) {
  std::vector<RationalVector> a = {Vec({1, 1}), Vec({2, 2})};
  const StandardFormLP lp = StandardFormLP::FromDense(a, Vec({1, 2}), Vec({1, 2}));
  const LPSolution s = SolveStandardForm(lp);
  ASSERT_EQ(s.status, LPStatus::kOptimal);
  EXPECT_EQ(s.objective, 1);
}

TEST(LinearSystem, SolvesAndDetectsSingular) {
  EXPECT_EQ(SolveLinearSystem({Vec({2, 1}), Vec({1, 1})}, Vec({3, 2})), Vec({1, 1}));
  EXPECT_THROW(SolveLinearSystem({Vec({1, 1}), Vec({2, 2})}, Vec({1, 2})), SingularSystem);
}

ConstraintFamily IdentityFamily(int n, int k) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return BuildFamily(OrderingFromPermutation(p), k);
}

TEST(PrimalFromDualBasis, ChainGivesGreedyVertex) {
  const ConstraintFamily c = IdentityFamily(3, 2);
  const SetFunction f = UniformRank(3, 2);
  const std::vector<int> chain = c.ChainIndices();
  EXPECT_EQ(PrimalFromDualBasis(c, f, chain), Vec({1, 1, 0}));

  const RationalVector t = Vec({0, 5, -2, 7, 1, 4, 0, 3});
  const SetFunction g = testing::Table(3, 2, t);
  EXPECT_EQ(PrimalFromDualBasis(c, g, chain), Vec({5, 2, -4}));
}

TEST(PrimalFromDualBasis, EmptySetRowIsSingular) {
  const ConstraintFamily c = IdentityFamily(3, 2);
  const std::vector<int> basis = {0, 1, 2};  // {}, {a}, {a,b}
  EXPECT_THROW(PrimalFromDualBasis(c, UniformRank(3, 2), basis), SingularSystem);
}

TEST(BasisFactor, SolveAndDualsMatchInverse) {
  const ConstraintFamily c = IdentityFamily(3, 3);
  RationalVector values;
  for (Mask m : c.members) values.push_back(Popcount(m) % 2);
  const RationalVector w = Vec({3, 2, 1});
  const StandardFormLP lp = BuildRestrictedDual(c, values, w);
  const std::vector<int> chain = c.ChainIndices();
  const auto factor = BasisFactor::Factor(lp, chain);
  ASSERT_TRUE(factor.has_value());
  EXPECT_EQ(factor->Solve(w), Vec({1, 1, 1}));
  std::vector<int> bad = {chain[0], chain[0], chain[1]};
  EXPECT_FALSE(BasisFactor::Factor(lp, bad).has_value());
}

}  // namespace
}  // namespace kdsm
