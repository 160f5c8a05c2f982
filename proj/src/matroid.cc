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

#include "kdsm/matroid.h"

#include <algorithm>
#include <utility>

#include "kdsm/errors.h"
#include "kdsm/ratlp.h"

namespace kdsm {
namespace {

std::string MaskString(int n, Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if ((m >> i) & 1) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

void CheckShape(int n, int r) {
  if (n < 1 || n > kMaxGroundSize) throw InvalidArgument("matroid ground size out of range");
  if (r < 0 || r > n) throw InvalidArgument("matroid rank must lie in [0, n]");
}

}  // namespace

const char* ToString(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kSparsePaving:
      return "sparse_paving";
    case MatroidKind::kNearUniform:
      return "near_uniform";
  }
  return "?";
}

Matroid Matroid::Uniform(int n, int r) {
  CheckShape(n, r);
  return Matroid(n, r, MatroidKind::kUniform);
}

Matroid Matroid::SparsePaving(int n, int r, std::vector<Mask> forbidden) {
  CheckShape(n, r);
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  for (Mask f : forbidden) {
    if ((f & ~FullMask(n)) != 0 || Popcount(f) != r) {
      throw InvalidArgument("forbidden set " + MaskString(n, f) + " is not an r-subset of S");
    }
  }
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    for (std::size_t j = i + 1; j < forbidden.size(); ++j) {
      if (Popcount(forbidden[i] & forbidden[j]) > r - 2) {
        throw InvalidArgument("forbidden sets " + MaskString(n, forbidden[i]) + " and " +
                              MaskString(n, forbidden[j]) + " share more than r-2 elements");
      }
    }
  }
  Matroid m(n, r, MatroidKind::kSparsePaving);
  m.forbidden_ = std::move(forbidden);
  return m;
}

std::optional<std::string> MatroidRankViolation(int n, const std::vector<int>& ranks) {
  if (n > kMatroidValidationLimit) {
    throw InstanceTooLarge("matroid validation needs n <= " +
                           std::to_string(kMatroidValidationLimit));
  }
  const Mask limit = Mask{1} << n;
  if (ranks.size() != limit) return "rank table has the wrong length";
  if (ranks[0] != 0) return "rank of the empty set is not 0";
  for (Mask x = 0; x < limit; ++x) {
    for (int e = 0; e < n; ++e) {
      const Mask ex = x | (Mask{1} << e);
      if (ex == x) continue;
      const int d = ranks[ex] - ranks[x];
      if (d < 0 || d > 1) return "rank increase at " + MaskString(n, x) + "+" + std::to_string(e + 1);
      for (int f = e + 1; f < n; ++f) {
        const Mask fx = x | (Mask{1} << f);
        if (fx == x) continue;
        if (ranks[ex] + ranks[fx] < ranks[ex | fx] + ranks[x]) {
          return "submodularity fails at " + MaskString(n, x) + " with " + std::to_string(e + 1) +
                 "," + std::to_string(f + 1);
        }
      }
    }
  }
  return std::nullopt;
}

Matroid Matroid::NearUniform(int n, int r, int k, std::vector<int> ranks) {
  CheckShape(n, r);
  if (k < 1) throw InvalidArgument("near-uniform parameter k must be >= 1");
  if (auto why = MatroidRankViolation(n, ranks)) throw InvalidArgument("not a matroid: " + *why);
  if (ranks[FullMask(n)] != r) throw InvalidArgument("rank table disagrees with r");
  Matroid m(n, r, MatroidKind::kNearUniform);
  m.k_ = k;
  m.table_ = std::move(ranks);
  if (auto bad = m.NearUniformViolation(k)) {
    throw InvalidArgument("near-uniform hypothesis fails at " + MaskString(n, *bad));
  }
  return m;
}

int Matroid::Rank(Mask x) const {
  switch (kind_) {
    case MatroidKind::kUniform:
      return std::min(Popcount(x), r_);
    case MatroidKind::kSparsePaving: {
      const int size = Popcount(x);
      if (size == r_ && std::binary_search(forbidden_.begin(), forbidden_.end(), x)) return r_ - 1;
      return std::min(size, r_);
    }
    case MatroidKind::kNearUniform:
      return table_[x];
  }
  return 0;
}

std::optional<Mask> Matroid::NearUniformViolation(int k) const {
  if (kind_ == MatroidKind::kUniform) return std::nullopt;
  if (kind_ == MatroidKind::kSparsePaving && k >= 1) return std::nullopt;
  if (n_ > kMatroidValidationLimit) {
    throw InstanceTooLarge("near-uniform check needs n <= " +
                           std::to_string(kMatroidValidationLimit));
  }
  const Mask limit = Mask{1} << n_;
  for (Mask x = 0; x < limit; ++x) {
    const int size = Popcount(x);
    const int rank = Rank(x);
    if (size <= r_ - k && rank != size) return x;
    if (size >= r_ + k && rank != r_) return x;
  }
  return std::nullopt;
}

MinRankInstance BuildMinRank(const Matroid& m1, const Matroid& m2, int k) {
  if (m1.n() != m2.n()) throw InvalidArgument("matroids live on different ground sets");
  if (m1.rank() != m2.rank()) {
    throw InvalidArgument("matroid ranks differ: " + std::to_string(m1.rank()) + " vs " +
                          std::to_string(m2.rank()));
  }
  if (k < 1) throw InvalidArgument("k must be >= 1");
  const int n = m1.n();
  if (4 * k > n) {
    throw InvalidArgument("declared distance 4k=" + std::to_string(4 * k) + " exceeds n=" +
                          std::to_string(n));
  }
  for (const Matroid* m : {&m1, &m2}) {
    if (auto bad = m->NearUniformViolation(k)) {
      throw InvalidArgument(std::string("matroid ") + (m == &m1 ? "1" : "2") +
                            " breaks the near-uniform hypothesis at " + MaskString(n, *bad));
    }
  }
  auto eval = [m1, m2](Mask x) { return Rational(std::min(m1.Rank(x), m2.Rank(x))); };
  SetFunction rmin = SetFunction::FromEvaluator(GroundSet(n), 4 * k, eval);
  return MinRankInstance{m1, m2, k, std::move(rmin)};
}

IntersectionResult SolveWeightedMatroidIntersection(const MinRankInstance& instance,
                                                    const RationalVector& w,
                                                    const MembershipOptions& options) {
  const int n = instance.rmin.n();
  if (static_cast<int>(w.size()) != n) throw InvalidArgument("weight vector length mismatch");
  for (const Rational& v : w) {
    if (!IsInteger(v)) throw InvalidArgument("intersection weights must be integers");
  }
  const int distance = 4 * instance.k;
  IntersectionResult result;

  std::vector<Mask> rows;
  for (int i = 0; i < n; ++i) rows.push_back(Mask{1} << i);

  while (true) {
    // max w^T x, x(T) + s_T = r_min(T), x, s >= 0; the slack basis is feasible.
    StandardFormLP lp;
    lp.rows = static_cast<int>(rows.size());
    for (int i = 0; i < n; ++i) {
      SparseColumn col;
      for (int r = 0; r < lp.rows; ++r) {
        if ((rows[r] >> i) & 1) col.push_back({r, 1});
      }
      lp.AddColumn(std::move(col), -w[i]);
    }
    std::vector<int> slack_basis;
    for (int r = 0; r < lp.rows; ++r) {
      slack_basis.push_back(lp.cols());
      lp.AddColumn({{r, 1}}, 0);
      lp.b.push_back(instance.rmin(rows[r]));
    }
    SolveOptions solve_options;
    solve_options.initial_basis = slack_basis;
    const LPSolution sol = SolveStandardForm(lp, solve_options);
    ++result.rounds;
    if (sol.status != LPStatus::kOptimal) {
      throw InternalConsistencyError(std::string("working LP ended ") + ToString(sol.status));
    }
    RationalVector x(sol.y.begin(), sol.y.begin() + n);

    // Separation: minimize D (r_min - x) with D clearing denominators.
    const Integer d = DenominatorLcm(x);
    auto eval = [rmin = instance.rmin, x, d](Mask t) -> Rational {
      return Rational(d) * (rmin(t) - SumOver(x, t));
    };
    const SetFunction h = SetFunction::FromEvaluator(GroundSet(n), distance, eval);
    const MinimizeResult min = Minimize(h, distance, options);
    result.oracle_calls += min.oracle_calls;
    if (min.min_value < 0) {
      if (std::find(rows.begin(), rows.end(), min.argmin) != rows.end()) {
        throw InternalConsistencyError("separation returned a constraint already in the LP");
      }
      rows.push_back(min.argmin);
      ++result.cuts;
      continue;
    }

    result.x = x;
    result.weight = 0;
    for (int i = 0; i < n; ++i) {
      if (x[i] != 0 && x[i] != 1) {
        throw InternalConsistencyError("terminal vertex is not integral at element " +
                                       std::to_string(i + 1) + ": " + ToString(x[i]));
      }
      if (x[i] == 1) {
        result.set |= Mask{1} << i;
        result.weight += w[i];
      }
    }
    return result;
  }
}

}  // namespace kdsm
