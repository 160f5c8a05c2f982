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

// Exact rational simplex for standard-form linear programs
//
//   minimize c^T y  subject to  A y = b,  y >= 0.
//
// Revised simplex with an explicit dense basis inverse and Bland's rule for
// both the entering and the leaving variable, so it terminates on degenerate
// problems. Phase one uses one artificial column per row; redundant rows keep
// their artificial in the basis at level zero.

#ifndef KDSM_RATLP_H_
#define KDSM_RATLP_H_

#include <optional>
#include <span>
#include <vector>

#include "kdsm/family.h"
#include "kdsm/rational.h"
#include "kdsm/set_function.h"

namespace kdsm {

struct SparseEntry {
  int row;
  Rational value;
};
using SparseColumn = std::vector<SparseEntry>;

struct StandardFormLP {
  int rows = 0;
  std::vector<SparseColumn> columns;  // A, by column
  RationalVector b;
  RationalVector c;

  int cols() const { return static_cast<int>(columns.size()); }
  void AddColumn(SparseColumn column, Rational cost);

  // Dense row-major A (m x d).
  static StandardFormLP FromDense(const std::vector<RationalVector>& a, RationalVector b,
                                  RationalVector c);
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(LPStatus status);

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  RationalVector y;        // one entry per column; zero off the basis
  std::vector<int> basis;  // basic structural columns
  Rational objective;
  // Simplex multipliers c_B^T B^{-1}, one per row. For an optimal solution
  // they solve the dual: A^T duals <= c with equality on the basis.
  RationalVector duals;
  int pivots = 0;
  bool used_phase_one = false;
};

struct SolveOptions {
  // Structural columns (one per row) forming a primal feasible basis. When
  // present and valid, phase one is skipped; otherwise it is ignored.
  std::optional<std::vector<int>> initial_basis;
};

LPSolution SolveStandardForm(const StandardFormLP& lp, const SolveOptions& options = {});

// Inverse of a square basis matrix, for re-checking a cached basis against a
// new right-hand side.
class BasisFactor {
 public:
  // nullopt when the columns are singular or not one per row.
  static std::optional<BasisFactor> Factor(const StandardFormLP& lp, std::span<const int> basis);

  const std::vector<int>& basis() const { return basis_; }
  RationalVector Solve(std::span<const Rational> rhs) const;  // B^{-1} rhs
  RationalVector Duals(std::span<const Rational> c) const;    // c_B^T B^{-1}
  const std::vector<RationalVector>& inverse() const { return inverse_; }

 private:
  std::vector<int> basis_;
  std::vector<RationalVector> inverse_;
};

// Solves the square system a x = rhs exactly; throws SingularSystem.
RationalVector SolveLinearSystem(std::vector<RationalVector> a, RationalVector rhs);

// The restricted dual LP: columns are incidence vectors of family members,
// costs f(T), right-hand side w.
StandardFormLP BuildRestrictedDual(const ConstraintFamily& family, std::span<const Rational> f_values,
                                   std::span<const Rational> w);

// Unique x with x(T) = f(T) for the n basis members (indices into family).
// Throws SingularSystem when the incidence vectors are dependent.
RationalVector PrimalFromDualBasis(const ConstraintFamily& family, const SetFunction& f,
                                   std::span<const int> basis);

}  // namespace kdsm

#endif  // KDSM_RATLP_H_
