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

#include "kdsm/reference.h"

#include <string>

#include "kdsm/errors.h"
#include "kdsm/ratlp.h"

namespace kdsm {

FullLPOracleResult BruteforceMaximizeFull(const SetFunction& f, const RationalVector& w) {
  const int n = f.n();
  if (n > kFullLpLimit) {
    throw InstanceTooLarge("full-constraint LP needs n <= " + std::to_string(kFullLpLimit));
  }
  if (static_cast<int>(w.size()) != n) throw InvalidArgument("weight vector length mismatch");
  for (const Rational& v : w) {
    if (v < 0) throw InvalidArgument("weights must be nonnegative");
  }
  if (f(0) < 0) throw InvalidArgument("P(f) is empty: f({}) < 0");

  // Dual: min sum y_T f(T), sum y_T chi_T = w, y >= 0 over all nonempty T.
  // The optimal multipliers are the primal optimum.
  const Mask limit = Mask{1} << n;
  StandardFormLP lp;
  lp.rows = n;
  lp.b = w;
  RationalVector values(limit);
  for (Mask t = 1; t < limit; ++t) {
    values[t] = f(t);
    SparseColumn col;
    for (int i = 0; i < n; ++i) {
      if ((t >> i) & 1) col.push_back({i, 1});
    }
    lp.AddColumn(std::move(col), values[t]);
  }
  const LPSolution sol = SolveStandardForm(lp);
  if (sol.status != LPStatus::kOptimal) {
    throw InternalConsistencyError(std::string("full dual LP ended ") + ToString(sol.status));
  }
  FullLPOracleResult out;
  out.x = sol.duals;
  out.value = 0;
  for (int i = 0; i < n; ++i) out.value += w[i] * out.x[i];
  if (out.value != sol.objective) throw InternalConsistencyError("full LP duality gap");
  for (Mask t = 1; t < limit; ++t) {
    const Rational lhs = SumOver(out.x, t);
    if (lhs > values[t]) throw InternalConsistencyError("full LP multipliers infeasible");
    if (lhs == values[t]) out.tight.push_back(t);
  }
  return out;
}

CommonIndependentResult BruteforceCommonIndependent(const Matroid& m1, const Matroid& m2,
                                                    const RationalVector& w) {
  const int n = m1.n();
  if (n != m2.n()) throw InvalidArgument("matroids live on different ground sets");
  if (n > kCommonIndependentLimit) {
    throw InstanceTooLarge("exhaustive intersection needs n <= " +
                           std::to_string(kCommonIndependentLimit));
  }
  if (static_cast<int>(w.size()) != n) throw InvalidArgument("weight vector length mismatch");
  CommonIndependentResult best;
  best.weight = 0;
  const Mask limit = Mask{1} << n;
  for (Mask s = 1; s < limit; ++s) {
    if (!m1.Independent(s) || !m2.Independent(s)) continue;
    const Rational v = SumOver(w, s);
    if (v > best.weight) {
      best.weight = v;
      best.set = s;
    }
  }
  return best;
}

}  // namespace kdsm
