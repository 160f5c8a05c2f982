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

#include "kdsm/apps.h"

#include <algorithm>
#include <string>
#include <utility>

#include "kdsm/errors.h"
#include "kdsm/family.h"

namespace kdsm {

WeightedCompleteGraph::WeightedCompleteGraph(int nv) : nv_(nv) {
  if (nv < 1 || nv > kMaxGroundSize) throw InvalidArgument("vertex count out of range");
  w_.assign(static_cast<std::size_t>(nv) * (nv - 1) / 2, 0);
}

int WeightedCompleteGraph::Index(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= nv_ || v >= nv_) {
    throw InvalidArgument("bad edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
  }
  if (u > v) std::swap(u, v);
  // Row-major upper triangle.
  return u * (2 * nv_ - u - 1) / 2 + (v - u - 1);
}

CutConditionVerdict CheckCutCondition(const WeightedCompleteGraph& g, int k) {
  if (k < 1) throw InvalidArgument("cut condition needs k >= 1");
  CutConditionVerdict verdict;
  const int nv = g.nv();
  for (int v = 0; v < nv; ++v) {
    if (nv - 1 < k) continue;  // no edge set of size >= k
    std::vector<int> others;
    for (int u = 0; u < nv; ++u) {
      if (u != v) others.push_back(u);
    }
    std::stable_sort(others.begin(), others.end(),
                     [&](int a, int b) { return g.weight(v, a) < g.weight(v, b); });
    Rational sum = 0;
    Mask edges = 0;
    for (std::size_t i = 0; i < others.size(); ++i) {
      const Rational& we = g.weight(v, others[i]);
      if (static_cast<int>(i) < k || we < 0) {
        sum += we;
        edges |= Mask{1} << others[i];
      }
    }
    if (sum < 0) {
      verdict.holds = false;
      verdict.vertex = v;
      verdict.edges = edges;
      verdict.sum = sum;
      return verdict;
    }
  }
  return verdict;
}

int CutDistance(int k) { return std::max(2, 2 * k - 1); }

SetFunction CutFunction(const WeightedCompleteGraph& g, int k) {
  const CutConditionVerdict verdict = CheckCutCondition(g, k);
  const int nv = g.nv();
  if (!verdict.holds) {
    std::string names;
    for (int u = 0; u < nv; ++u) {
      if ((verdict.edges >> u) & 1) {
        if (!names.empty()) names += ",";
        names += std::to_string(verdict.vertex + 1) + "-" + std::to_string(u + 1);
      }
    }
    throw InvalidArgument("cut condition fails at vertex " + std::to_string(verdict.vertex + 1) +
                          ": edges {" + names + "} sum to " + ToString(verdict.sum));
  }
  const int distance = CutDistance(k);
  if (distance > nv) {
    throw InvalidArgument("declared distance " + std::to_string(distance) + " exceeds n=" +
                          std::to_string(nv));
  }
  RationalVector table;
  const bool dense = nv <= kMaxDenseSize;
  auto eval = [g](Mask t) {
    Rational s = 0;
    const int n = g.nv();
    for (int u = 0; u < n; ++u) {
      if (!((t >> u) & 1)) continue;
      for (int v = 0; v < n; ++v) {
        if (!((t >> v) & 1)) s += g.weight(u, v);
      }
    }
    return s;
  };
  if (!dense) {
    EvaluatorOptions options;
    RationalVector weights;
    for (int u = 0; u < nv; ++u) {
      for (int v = u + 1; v < nv; ++v) weights.push_back(g.weight(u, v));
    }
    options.value_scale = DenominatorLcm(weights);
    return SetFunction::FromEvaluator(GroundSet(nv), distance, eval, options);
  }
  const Mask limit = Mask{1} << nv;
  table.resize(limit);
  for (Mask t = 0; t < limit; ++t) table[t] = eval(t);
  return SetFunction::Dense(GroundSet(nv), distance, std::move(table));
}

SetFunction IndicatorFunction(Mask t, int n, int k) {
  if (n < 1 || n > kMaxGroundSize) throw InvalidArgument("ground size out of range");
  if ((t & ~FullMask(n)) != 0) throw InvalidArgument("indicator set is not a subset of S");
  if (n <= kMaxDenseSize) {
    RationalVector table(std::size_t{1} << n, 0);
    table[t] = -1;
    return SetFunction::Dense(GroundSet(n), k, std::move(table));
  }
  return SetFunction::FromEvaluator(GroundSet(n), k,
                                    [t](Mask x) { return Rational(x == t ? -1 : 0); });
}

int PqToDistant(int p, int q) {
  if (q < 3) throw InvalidArgument("q must be >= 3");
  if (p < 1 || static_cast<std::uint64_t>(p) > Binomial(q, 2)) {
    throw InvalidArgument("p must lie in [1, C(q, 2)]");
  }
  const std::uint64_t threshold = Binomial(q - 1, 2) + 1;
  if (static_cast<std::uint64_t>(p) < threshold) {
    throw IntractableRegime("p=" + std::to_string(p) + " < C(q-1,2)+1 = " + std::to_string(threshold) +
                            ": minimization needs exponentially many oracle calls");
  }
  return 2 * q - 3;
}

PqVerdict IsPqSubmodular(const SetFunction& f, int p, int q) {
  const int n = f.n();
  if (n > kPqMaxN || q > kPqMaxQ) {
    throw InstanceTooLarge("p/q check needs n <= " + std::to_string(kPqMaxN) + " and q <= " +
                           std::to_string(kPqMaxQ));
  }
  if (q < 2) throw InvalidArgument("q must be >= 2");
  const int total = static_cast<int>(std::size_t{1} << n);
  if (q > total) return {};
  const RationalVector v = f.Table();
  std::vector<std::vector<char>> good(total, std::vector<char>(total, 0));
  for (int x = 0; x < total; ++x) {
    for (int y = x; y < total; ++y) {
      const bool ok = v[x] + v[y] >= v[x | y] + v[x & y];
      good[x][y] = good[y][x] = ok;
    }
  }
  const int max_bad = q * (q - 1) / 2 - p;
  PqVerdict verdict;
  std::vector<int> idx(q);
  for (int i = 0; i < q; ++i) idx[i] = i;
  while (true) {
    int bad = 0;
    for (int i = 0; i < q; ++i) {
      for (int j = i + 1; j < q; ++j) bad += !good[idx[i]][idx[j]];
    }
    if (bad > max_bad) {
      verdict.holds = false;
      for (int i : idx) verdict.witness.push_back(static_cast<Mask>(i));
      return verdict;
    }
    int i = q - 1;
    while (i >= 0 && idx[i] == total - q + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
  }
  return verdict;
}

Graph::Graph(int nv) : nv_(nv) {
  if (nv < 1 || nv > kMaxGroundSize) throw InvalidArgument("vertex count out of range");
  adj_.assign(nv, 0);
}

void Graph::AddEdge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= nv_ || v >= nv_) {
    throw InvalidArgument("bad edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
  }
  adj_[u] |= Mask{1} << v;
  adj_[v] |= Mask{1} << u;
}

bool Graph::IsClique(Mask x) const {
  for (int v = 0; v < nv_; ++v) {
    if (((x >> v) & 1) && ((x & ~(Mask{1} << v)) & ~adj_[v]) != 0) return false;
  }
  return true;
}

SetFunction CliqueFunction(const Graph& g, int kc) {
  const int nv = g.nv();
  if (kc < 1) throw InvalidArgument("clique size must be >= 1");
  if (nv < 2 * kc + 1) {
    throw InvalidArgument("clique function needs |V| >= 2*kc+1 = " + std::to_string(2 * kc + 1));
  }
  auto eval = [g, kc](Mask x) {
    const int size = Popcount(x);
    if (size == kc && g.IsClique(x)) return Rational(-1);
    if (size <= kc) return Rational(0);
    return Rational(g.nv() - size);
  };
  const int distance = 2 * kc + 1;
  if (nv > kMaxDenseSize) return SetFunction::FromEvaluator(GroundSet(nv), distance, eval);
  RationalVector table(std::size_t{1} << nv);
  for (Mask x = 0; x < table.size(); ++x) table[x] = eval(x);
  return SetFunction::Dense(GroundSet(nv), distance, std::move(table));
}

std::optional<Mask> FindClique(const Graph& g, int kc) {
  std::optional<Mask> found;
  if (kc > g.nv()) return found;
  // Gosper enumeration yields masks of one size in increasing order.
  ForEachSubsetUpTo(g.nv(), kc, [&](Mask x) {
    if (!found && Popcount(x) == kc && g.IsClique(x)) found = x;
  });
  return found;
}

}  // namespace kdsm
