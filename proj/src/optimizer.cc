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

#include <string>
#include <utility>

#include "kdsm/core.h"
#include "kdsm/errors.h"

namespace kdsm {

Rational Epsilon(int n, const Integer& bw, const Rational& bf) {
  if (n < 1) throw InvalidArgument("epsilon needs n >= 1");
  if (bw < 1) throw InvalidArgument("denominator bound must be >= 1");
  if (bf <= 0) throw InvalidArgument("value bound must be positive (f identically zero?)");
  Integer factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  Integer bw_pow;
  mpz_pow_ui(bw_pow.get_mpz_t(), bw.get_mpz_t(), static_cast<unsigned long>(n));
  Integer den = 4 * n * n;
  den *= factorial * factorial * factorial;
  den *= bw_pow;
  Rational eps(Integer(1), den);
  eps /= bf;
  return eps;
}

Integer MaxDenominator(std::span<const Rational> w) {
  Integer best = 1;
  for (const Rational& v : w) {
    if (v.get_den() > best) best = v.get_den();
  }
  return best;
}

RationalVector PerturbWeights(std::span<const Rational> w, const Ordering& ordering,
                              const Rational& eps) {
  const int n = ordering.size();
  if (static_cast<int>(w.size()) != n) throw InvalidArgument("weight vector length mismatch");
  for (int i = 0; i + 1 < n; ++i) {
    if (w[ordering.perm[i]] < w[ordering.perm[i + 1]]) {
      throw InvalidArgument("weights are not sorted along the ordering");
    }
  }
  RationalVector out(w.begin(), w.end());
  for (int i = 0; i + 1 < n; ++i) {
    const int e = ordering.perm[i];
    if (w[e] == w[ordering.perm[i + 1]]) out[e] += eps * (n - (i + 1));
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (!(out[ordering.perm[i]] > out[ordering.perm[i + 1]])) {
      throw InternalConsistencyError("perturbed weights are not strictly decreasing; eps " +
                                     ToString(eps) + " is too large");
    }
  }
  return out;
}

RestrictedLpOracle::RestrictedLpOracle(SetFunction f, int k, Rational bf, std::size_t cache_limit)
    : f_(std::move(f)), k_(k), bf_(std::move(bf)), cache_limit_(cache_limit) {
  if (f_(0) != 0) throw InvalidArgument("restricted oracle needs f({}) = 0");
  if (bf_ <= 0) throw InvalidArgument("value bound must be positive");
}

RestrictedLpOracle::Entry& RestrictedLpOracle::Prepare(const Ordering& ordering, bool* fresh) {
  auto it = cache_.find(ordering.perm);
  if (it != cache_.end()) {
    if (fresh) *fresh = false;
    return it->second;
  }
  if (cache_.size() >= cache_limit_) cache_.clear();
  Entry e;
  e.family = BuildFamily(ordering, k_);
  e.values.reserve(e.family.size());
  for (Mask t : e.family.members) e.values.push_back(f_(t));
  const RationalVector zero(ordering.size(), 0);
  e.lp = BuildRestrictedDual(e.family, e.values, zero);
  e.chain = e.family.ChainIndices();
  if (fresh) *fresh = true;
  return cache_.emplace(ordering.perm, std::move(e)).first->second;
}

RestrictedLpOracle::Solution RestrictedLpOracle::Solve(std::span<const Rational> w) {
  const int n = f_.n();
  if (static_cast<int>(w.size()) != n) throw InvalidArgument("weight vector length mismatch");
  Solution s;
  s.ordering = SortElements(w);
  Entry& e = Prepare(s.ordering);
  s.entry = &e;
  s.eps = Epsilon(n, MaxDenominator(w), bf_);
  s.perturbed_w = PerturbWeights(w, s.ordering, s.eps);

  bool reused = false;
  if (e.last) {
    const RationalVector level = e.last->Solve(s.perturbed_w);
    reused = true;
    for (const Rational& v : level) {
      if (v < 0) {
        reused = false;
        break;
      }
    }
    if (reused) {
      // The cached basis is dual feasible for any right-hand side, so primal
      // feasibility makes it optimal.
      s.x = e.last_x;
      s.basis = e.last->basis();
      for (int r = 0; r < n; ++r) {
        if (level[r] > 0) s.y.push_back({e.family.members[s.basis[r]], level[r]});
      }
    }
  }
  if (!reused) {
    e.lp.b = s.perturbed_w;
    SolveOptions options;
    options.initial_basis = e.chain;
    LPSolution sol = SolveStandardForm(e.lp, options);
    if (sol.status != LPStatus::kOptimal || static_cast<int>(sol.basis.size()) != n) {
      throw InternalConsistencyError(std::string("restricted dual LP ended ") +
                                     ToString(sol.status));
    }
    s.pivots = sol.pivots;
    s.basis = sol.basis;
    s.x = sol.duals;
    for (int j : sol.basis) {
      if (sol.y[j] > 0) s.y.push_back({e.family.members[j], sol.y[j]});
    }
    e.last = BasisFactor::Factor(e.lp, sol.basis);
    e.last_x = s.x;
  }
  return s;
}

OptResult MaximizeOverPf(const SetFunction& f, int k, std::span<const Rational> w) {
  const int n = f.n();
  if (k < 2 || k > n) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside [2, n=" + std::to_string(n) + "]");
  }
  if (static_cast<int>(w.size()) != n) throw InvalidArgument("weight vector length mismatch");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) throw InvalidArgument("weight " + std::to_string(i + 1) + " is negative");
  }
  const SetFunction f0 = Normalize(f).function;
  const ValueBounds bounds = SmallSetBounds(f0, k);
  // The perturbation argument is stated for integer values; scale the bound
  // so it covers D * f0.
  Rational bf = bounds.abs_bound * Rational(f0.ValueScale());
  if (bf == 0) bf = 1;

  RestrictedLpOracle oracle(f0, k, bf, 1);
  RestrictedLpOracle::Solution s = oracle.Solve(w);

  OptResult out;
  out.family = s.entry->family;
  out.perturbed_w = s.perturbed_w;
  out.eps = s.eps;
  out.lp_pivots = s.pivots;
  out.x = PrimalFromDualBasis(out.family, f0, s.basis);
  if (out.x != s.x) {
    throw InternalConsistencyError("primal recovery disagrees with the simplex multipliers");
  }

  // Dual certificate for the unperturbed weights, same family.
  StandardFormLP lp = s.entry->lp;
  lp.b.assign(w.begin(), w.end());
  SolveOptions options;
  options.initial_basis = s.basis;
  LPSolution dual = SolveStandardForm(lp, options);
  if (dual.status != LPStatus::kOptimal) {
    throw InternalConsistencyError("unperturbed restricted dual LP is not optimal");
  }
  out.lp_pivots += dual.pivots;
  for (int j : dual.basis) {
    if (dual.y[j] > 0) out.y.push_back({out.family.members[j], dual.y[j]});
  }
  out.value = 0;
  for (int i = 0; i < n; ++i) out.value += w[i] * out.x[i];
  if (dual.objective != out.value) {
    throw InternalConsistencyError("strong duality fails: dual " + ToString(dual.objective) +
                                   " vs primal " + ToString(out.value) +
                                   "; is the function really k-distant?");
  }
  return out;
}

}  // namespace kdsm
