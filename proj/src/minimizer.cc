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

#include "kdsm/minimizer.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "kdsm/core.h"
#include "kdsm/ellipsoid.h"
#include "kdsm/errors.h"
#include "kdsm/optimizer.h"
#include "kdsm/ratlp.h"

namespace kdsm {
namespace {

int CeilLog2(const Integer& v) {
  if (v <= 1) return 0;
  Integer t = v - 1;
  return static_cast<int>(mpz_sizeinbase(t.get_mpz_t(), 2));
}

Integer Factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Is some convex combination of the points componentwise >= 0?
bool HullHasNonnegativePoint(const std::vector<RationalVector>& points, int n) {
  StandardFormLP lp;
  lp.rows = n + 1;
  lp.b.assign(n + 1, 0);
  lp.b[n] = 1;
  for (const RationalVector& x : points) {
    SparseColumn col;
    for (int i = 0; i < n; ++i) {
      if (x[i] != 0) col.push_back({i, x[i]});
    }
    col.push_back({n, 1});
    lp.AddColumn(std::move(col), 0);
  }
  for (int i = 0; i < n; ++i) lp.AddColumn({{i, -1}}, 0);
  return SolveStandardForm(lp).status == LPStatus::kOptimal;
}

// Integer multiple of x with the denominators cleared.
std::vector<Integer> ClearDenominators(const RationalVector& x) {
  const Integer d = DenominatorLcm(x);
  std::vector<Integer> a(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = x[i].get_num() * (d / x[i].get_den());
  return a;
}

}  // namespace

long DefaultBudget(int n, const Rational& bg) {
  const double b = std::max(1.0, bg.get_d());
  double log_fact = 0;
  for (int i = 2; i <= n; ++i) log_fact += std::log(static_cast<double>(i));
  const double inner = n * std::log(2.0) + std::log(8.0 * n * n) + log_fact + std::log(b);
  return static_cast<long>(std::ceil(8.0 * n * (n + 1) * inner));
}

MembershipVerdict MembershipZero(const SetFunction& g, int k, const Rational& bg,
                                 const MembershipOptions& options) {
  const int n = g.n();
  if (g(0) != 0) throw InvalidArgument("membership test needs g({}) = 0");
  if (g.ValueScale() != 1) throw InvalidArgument("membership test needs an integer-valued g");
  if (k < 2 || k > n) throw InvalidArgument("k outside [2, n]");
  const Rational bound = bg < 1 ? Rational(1) : bg;
  const long budget = options.budget.value_or(DefaultBudget(n, bound));

  MembershipVerdict verdict;
  RestrictedLpOracle oracle(g, k, bound);

  // Precision: the target ball has radius 1/(4 n Xmax), Xmax = n! * Bg.
  const Integer bg_int = bound.get_num() / bound.get_den() + 1;
  const int target_bits = CeilLog2(4 * n * Factorial(n) * bg_int);
  Ellipsoid ellipsoid(n, 2 * target_bits + CeilLog2(Integer(n)) + 32);
  int grid_bits = 12;

  const bool track_coverage = options.use_coverage && n <= kMaxDenseSize;
  std::vector<bool> covered(track_coverage ? std::size_t{1} << n : 0, false);
  std::size_t covered_count = 0;

  std::set<RationalVector> seen;
  std::vector<RationalVector> points;
  std::size_t points_at_last_hull = 0;

  auto finish_nonnegative = [&](std::string how) {
    verdict.nonnegative = true;
    verdict.certificate = std::move(how);
    verdict.iterations = ellipsoid.iteration();
    if (options.verify) {
      if (n > kBruteforceMinimizeLimit) {
        throw InstanceTooLarge("verification needs n <= " + std::to_string(kBruteforceMinimizeLimit));
      }
      const BruteforceMinimum bf = BruteforceMinimize(g);
      if (bf.value < 0) {
        throw InternalConsistencyError(
            "membership reported nonnegative (" + verdict.certificate + ") but g(" +
            std::to_string(bf.argmin) + ") = " + ToString(bf.value) +
            "; the declared distance parameter may be wrong");
      }
    }
    return verdict;
  };

  while (ellipsoid.iteration() < budget) {
    bool cut_box = false;
    for (int i = 0; i < n; ++i) {
      const int side = ellipsoid.BoxSide(i);
      if (side != 0) {
        std::vector<Integer> a(n, 0);
        a[i] = side;
        ellipsoid.Cut(a);
        cut_box = true;
        break;
      }
    }
    if (cut_box) continue;

    const RationalVector w = ellipsoid.RoundedCenter(grid_bits);
    bool fresh = false;
    const RestrictedLpOracle::Entry& entry = oracle.Prepare(SortElements(w), &fresh);
    if (fresh) {
      // Witness short-circuit over the new family.
      const std::size_t size = entry.family.size();
      int best = -1;
      for (std::size_t j = 0; j < size; ++j) {
        if (entry.values[j] < 0 &&
            (best < 0 || entry.values[j] < entry.values[best])) {
          best = static_cast<int>(j);
        }
      }
      if (best >= 0) {
        verdict.nonnegative = false;
        verdict.witness = entry.family.members[best];
        verdict.value = g(verdict.witness);
        verdict.certificate = "family-scan";
        verdict.iterations = ellipsoid.iteration();
        return verdict;
      }
      if (track_coverage) {
        for (Mask t : entry.family.members) {
          if (!covered[t]) {
            covered[t] = true;
            ++covered_count;
          }
        }
        if (covered_count == covered.size()) return finish_nonnegative("coverage");
      }
    }

    RestrictedLpOracle::Solution sol = oracle.Solve(w);
    ++verdict.oracle_calls;
    verdict.lp_pivots += sol.pivots;
    for (const DualEntry& d : sol.y) {
      // Unreachable after the family scan; kept for witness soundness.
      if (g(d.set) < 0) {
        verdict.nonnegative = false;
        verdict.witness = d.set;
        verdict.value = g(d.set);
        verdict.certificate = "dual-support";
        verdict.iterations = ellipsoid.iteration();
        return verdict;
      }
    }
    if (std::all_of(sol.x.begin(), sol.x.end(), [](const Rational& v) { return v >= 0; })) {
      return finish_nonnegative("nonneg-vertex");
    }
    if (seen.insert(sol.x).second) points.push_back(sol.x);

    const long calls = verdict.oracle_calls;
    const bool hull_due = (calls & (calls - 1)) == 0 || calls % options.hull_period == 0;
    if (options.use_hull && hull_due && points.size() > points_at_last_hull) {
      points_at_last_hull = points.size();
      if (HullHasNonnegativePoint(points, n)) return finish_nonnegative("hull");
    }

    // The cut through the center is valid when x*^T c >= -1/2; the grid
    // rounding of the query point can break that, so refine and retry.
    Rational at_center = 0;
    for (int i = 0; i < n; ++i) at_center += sol.x[i] * ellipsoid.CenterCoordinate(i);
    if (at_center < Rational(-1, 2)) {
      grid_bits += 8;
      if (grid_bits > ellipsoid.precision_bits()) {
        throw InternalConsistencyError("query grid exceeded ellipsoid precision");
      }
      continue;
    }
    ellipsoid.Cut(ClearDenominators(sol.x));
    if (options.trace && ellipsoid.iteration() % 1000 == 0) {
      *options.trace << "  ellipsoid iteration " << ellipsoid.iteration() << ", "
                     << verdict.oracle_calls << " oracle calls, " << points.size()
                     << " vertices\n";
    }
  }
  return finish_nonnegative("budget");
}

MinimizeResult Minimize(const SetFunction& f, int k, const MembershipOptions& options) {
  const int n = f.n();
  if (k < 2 || k > n) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside [2, n=" + std::to_string(n) + "]");
  }
  if (f.ValueScale() != 1) throw InvalidArgument("minimize needs an integer-valued function");
  const Normalized norm = Normalize(f);
  const SetFunction& f0 = norm.function;
  const ValueBounds bounds = SmallSetBounds(f0, k);

  MinimizeResult result;
  result.offset = norm.offset;
  Rational hi = bounds.M - f0(f0.full());
  if (hi < 0) hi = 0;
  Rational lo = 0;
  Mask best = 0;

  auto probe = [&](const Rational& c) {
    const SetFunction g = ShiftNonempty(f0, c);
    MembershipVerdict v = MembershipZero(g, k, bounds.abs_bound + c, options);
    result.oracle_calls += v.oracle_calls;
    if (options.trace) {
      *options.trace << "shift " << ToString(c) << ": "
                     << (v.nonnegative ? "nonnegative" : "witness") << " (" << v.certificate
                     << ", " << v.oracle_calls << " oracle calls, " << v.iterations
                     << " iterations)\n";
    }
    result.trace.push_back({c, v});
    return v;
  };

  // Invariant: min f0 <= -lo (attained by best) and min f0 >= -hi.
  bool probe_mid = false;
  while (lo < hi) {
    Rational c = lo;
    if (probe_mid) {
      c = Rational(Integer((lo.get_num() + hi.get_num()) / 2));
    }
    const MembershipVerdict v = probe(c);
    if (v.nonnegative) {
      hi = c;
      probe_mid = false;
      continue;
    }
    const Rational found = -f0(v.witness);
    const Rational old_gap = hi - lo;
    if (found > lo) {
      lo = found;
      best = v.witness;
    }
    // Fall back to bisection when the witness did not halve the gap.
    probe_mid = 2 * (hi - lo) > old_gap;
  }
  if (lo > hi) throw InternalConsistencyError("witness below the value lower bound");
  result.min_value = -lo + norm.offset;
  result.argmin = best;
  if (f(best) != result.min_value) {
    throw InternalConsistencyError("minimizer value does not match its witness");
  }
  return result;
}

BruteforceMinimum BruteforceMinimize(const SetFunction& f) {
  const int n = f.n();
  if (n > kBruteforceMinimizeLimit) {
    throw InstanceTooLarge("exhaustive minimization needs n <= " +
                           std::to_string(kBruteforceMinimizeLimit));
  }
  BruteforceMinimum out;
  out.value = f(0);
  const Mask limit = Mask{1} << n;
  if (f.is_dense()) {
    const RationalVector table = f.Table();
    for (Mask m = 1; m < limit; ++m) {
      if (table[m] < out.value) {
        out.value = table[m];
        out.argmin = m;
      }
    }
    return out;
  }
  for (Mask m = 1; m < limit; ++m) {
    Rational v = f(m);
    if (v < out.value) {
      out.value = std::move(v);
      out.argmin = m;
    }
  }
  return out;
}

}  // namespace kdsm
