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

#include "kdsm/generators.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "kdsm/core.h"
#include "kdsm/errors.h"

namespace kdsm {
namespace {

constexpr int kRejectionAttempts = 1000;

void CheckDense(int n, int k) {
  if (n < 2 || n > kMaxDenseSize) throw InvalidArgument("generator n must lie in [2, 20]");
  if (k < 2 || k > n) throw InvalidArgument("generator k must lie in [2, n]");
}

RationalVector RandomModular(int n, long lo, long hi, Rng& rng) {
  RationalVector x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.Uniform(lo, hi);
  return x;
}

Mask RandomSubset(int n, Rng& rng) { return rng.Below(Mask{1} << n); }

// -c|X|^2 has slack 2c |X\Y| |Y\X| in every submodular inequality.
SetFunction Rejection(int n, int k, Rng& rng) {
  if (n > kRejectionMaxN) {
    throw InvalidArgument("rejection strategy needs n <= " + std::to_string(kRejectionMaxN));
  }
  constexpr long c = 4;
  const long safe_noise = 2 * k - 3;  // four of these stay below 2c(k-1)
  const Mask limit = Mask{1} << n;
  for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
    const RationalVector m = RandomModular(n, 0, 2 * c * n, rng);
    const long offset = rng.Uniform(-3, 3);
    RationalVector table(limit);
    for (Mask x = 0; x < limit; ++x) {
      const long size = Popcount(x);
      table[x] = SumOver(m, x) - c * size * size + offset + rng.Uniform(-safe_noise, safe_noise);
    }
    // Deeper dips are only kept when the exhaustive check still passes.
    const int dips = static_cast<int>(rng.Below(3));
    for (int d = 0; d < dips; ++d) table[RandomSubset(n, rng)] -= rng.Uniform(1, 2 * c * (k - 1));
    SetFunction f = SetFunction::Dense(GroundSet(n), k, std::move(table));
    if (IsKDistant(f, k).holds) return f;
  }
  throw GeneratorExhausted("rejection sampling found no " + std::to_string(k) +
                           "-distant table");
}

SetFunction Tabulate(int n, int k, const std::function<Rational(Mask)>& eval) {
  RationalVector table(std::size_t{1} << n);
  for (Mask x = 0; x < table.size(); ++x) table[x] = eval(x);
  return SetFunction::Dense(GroundSet(n), k, std::move(table));
}

SetFunction CutStrategy(int n, int k, Rng& rng) {
  const int kc = (k + 1) / 2;  // 2kc - 1 <= k
  const SetFunction cut = CutFunction(RandomCutGraph(n, kc, rng), kc);
  const RationalVector x = RandomModular(n, -4, 4, rng);
  return cut.Shifted(0, 0, x).WithK(k).Materialize();
}

SetFunction MinRankStrategy(int n, int k, Rng& rng) {
  const int r = static_cast<int>(rng.Uniform(2, std::max(2, n - 2)));
  const RationalVector x = RandomModular(n, 0, 2, rng);
  if (k >= 4 && n >= 4) {
    const Matroid m1 = RandomSparsePaving(n, r, rng);
    const Matroid m2 = RandomSparsePaving(n, r, rng);
    const MinRankInstance inst = BuildMinRank(m1, m2, k / 4);
    return inst.rmin.Shifted(0, 0, x).WithK(k).Materialize();
  }
  // Below distance 4 the pair collapses to one matroid, whose rank is
  // submodular.
  const Matroid m = RandomSparsePaving(n, r, rng);
  return Tabulate(n, k, [&](Mask t) -> Rational { return Rational(m.Rank(t)) - SumOver(x, t); });
}

SetFunction CliqueStrategy(int n, int k, Rng& rng) {
  if (k < 3) throw InvalidArgument("clique strategy needs k >= 3");
  const int kc = (k - 1) / 2;
  return CliqueFunction(RandomGraph(n, 1, 2, rng), kc).WithK(k).Materialize();
}

SetFunction IndicatorShifted(int n, int k, Rng& rng) {
  // f_{} and f_S are k-distant for every k; so are condition-satisfying cut
  // functions and modular functions, and sums preserve the property.
  const Mask t = rng.Chance(1, 2) ? Mask{0} : FullMask(n);
  const long mult = rng.Uniform(1, 3);
  const int kc = (k + 1) / 2;
  const SetFunction cut = CutFunction(RandomCutGraph(n, kc, rng), kc);
  const RationalVector x = RandomModular(n, -3, 3, rng);
  return Tabulate(n, k, [&](Mask s) {
    Rational v = cut(s) - SumOver(x, s);
    if (s == t) v -= mult;
    return v;
  });
}

}  // namespace

const char* ToString(Strategy strategy) {
  switch (strategy) {
    case Strategy::kRejection:
      return "rejection";
    case Strategy::kCut:
      return "cut";
    case Strategy::kMinRank:
      return "minrank";
    case Strategy::kClique:
      return "clique";
    case Strategy::kIndicatorShifted:
      return "indicator_shifted";
  }
  return "?";
}

Strategy ParseStrategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (name == ToString(s)) return s;
  }
  throw InvalidArgument("unknown strategy '" + std::string(name) + "'");
}

SetFunction GenerateKDistant(int n, int k, std::uint64_t seed, Strategy strategy) {
  CheckDense(n, k);
  Rng rng(seed);
  switch (strategy) {
    case Strategy::kRejection:
      return Rejection(n, k, rng);
    case Strategy::kCut:
      return CutStrategy(n, k, rng);
    case Strategy::kMinRank:
      return MinRankStrategy(n, k, rng);
    case Strategy::kClique:
      return CliqueStrategy(n, k, rng);
    case Strategy::kIndicatorShifted:
      return IndicatorShifted(n, k, rng);
  }
  throw InvalidArgument("unknown strategy");
}

WeightedCompleteGraph RandomCutGraph(int nv, int kc, Rng& rng) {
  WeightedCompleteGraph g(nv);
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) g.set_weight(u, v, rng.Uniform(-3, 6));
  }
  while (true) {
    const CutConditionVerdict verdict = CheckCutCondition(g, kc);
    if (verdict.holds) return g;
    int worst = -1;
    for (int u = 0; u < nv; ++u) {
      if (!((verdict.edges >> u) & 1)) continue;
      if (worst < 0 || g.weight(verdict.vertex, u) < g.weight(verdict.vertex, worst)) worst = u;
    }
    g.set_weight(verdict.vertex, worst, g.weight(verdict.vertex, worst) + 1);
  }
}

Graph RandomGraph(int nv, int num, int den, Rng& rng) {
  Graph g(nv);
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      if (rng.Chance(num, den)) g.AddEdge(u, v);
    }
  }
  return g;
}

Matroid RandomSparsePaving(int n, int r, Rng& rng) {
  std::vector<Mask> chosen;
  std::vector<int> perm(n);
  const int attempts = 4 * n;
  for (int a = 0; a < attempts && r >= 2; ++a) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.Below(i + 1)]);
    Mask s = 0;
    for (int i = 0; i < r; ++i) s |= Mask{1} << perm[i];
    const bool fits = std::all_of(chosen.begin(), chosen.end(),
                                  [&](Mask c) { return Popcount(c & s) <= r - 2; });
    if (fits) chosen.push_back(s);
  }
  return Matroid::SparsePaving(n, r, std::move(chosen));
}

SetFunction RandomSubmodular(int n, std::uint64_t seed) {
  if (n < 2 || n > kMaxDenseSize) throw InvalidArgument("generator n must lie in [2, 20]");
  Rng rng(seed);
  const int terms = static_cast<int>(rng.Uniform(1, 3));
  std::vector<RationalVector> a;
  std::vector<long> cap;
  for (int t = 0; t < terms; ++t) {
    a.push_back(RandomModular(n, 0, 5, rng));
    cap.push_back(rng.Uniform(1, 4 * n));
  }
  const RationalVector x = RandomModular(n, -6, 6, rng);
  return Tabulate(n, 2, [&](Mask s) {
    Rational v = SumOver(x, s);
    for (int t = 0; t < terms; ++t) v += std::min(SumOver(a[t], s), Rational(cap[t]));
    return v;
  });
}

SetFunction RandomDippedFunction(int n, std::uint64_t seed) {
  if (n < 2 || n > kMaxDenseSize) throw InvalidArgument("generator n must lie in [2, 20]");
  Rng rng(seed);
  constexpr long c = 2;
  const RationalVector m = RandomModular(n, 0, 2 * c * n, rng);
  RationalVector table(std::size_t{1} << n);
  for (Mask x = 0; x < table.size(); ++x) {
    const long size = Popcount(x);
    table[x] = SumOver(m, x) - c * size * size;
  }
  const int dips = static_cast<int>(rng.Uniform(1, 2));
  for (int d = 0; d < dips; ++d) table[RandomSubset(n, rng)] -= rng.Uniform(2 * c + 1, 4 * c);
  return SetFunction::Dense(GroundSet(n), n >= 3 ? 3 : 2, std::move(table));
}

}  // namespace kdsm
