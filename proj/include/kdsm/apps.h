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

// Structured k-distant families: cut functions of weighted complete graphs,
// set indicators, p/q-submodularity, and clique functions.

#ifndef KDSM_APPS_H_
#define KDSM_APPS_H_

#include <array>
#include <optional>
#include <vector>

#include "kdsm/rational.h"
#include "kdsm/set_function.h"

namespace kdsm {

class WeightedCompleteGraph {
 public:
  explicit WeightedCompleteGraph(int nv);

  int nv() const { return nv_; }
  const Rational& weight(int u, int v) const { return w_[Index(u, v)]; }
  void set_weight(int u, int v, Rational value) { w_[Index(u, v)] = std::move(value); }

 private:
  int Index(int u, int v) const;
  int nv_;
  RationalVector w_;
};

struct CutConditionVerdict {
  bool holds = true;
  // First failing vertex and the minimizing edge set, given as the mask of
  // the other endpoints.
  int vertex = -1;
  Mask edges = 0;
  Rational sum;
};

// For every vertex v, the cheapest edge set X in delta(v) with |X| >= k
// takes the k lightest edges plus every other negative one. Holds iff that
// sum is >= 0 everywhere. k >= 1.
CutConditionVerdict CheckCutCondition(const WeightedCompleteGraph& g, int k);

// Declared distance of the cut function for a condition parameter k.
int CutDistance(int k);

// c(T) = sum of w(uv) over u in T, v not in T, declared (2k-1)-distant
// (at least 2). Throws InvalidArgument if the condition fails or the
// declared distance exceeds nv.
SetFunction CutFunction(const WeightedCompleteGraph& g, int k);

// f_T(X) = -1 if X = T, else 0. Declared distance k (the function is only
// guaranteed k-distant for T in {{}, S}).
SetFunction IndicatorFunction(Mask t, int n, int k = 2);

// k = 2q - 3 when p >= C(q-1, 2) + 1; IntractableRegime below the threshold.
int PqToDistant(int p, int q);

struct PqVerdict {
  bool holds = true;
  std::vector<Mask> witness;  // q distinct sets with fewer than p good pairs
};

inline constexpr int kPqMaxN = 6;
inline constexpr int kPqMaxQ = 4;

// Every q distinct subsets contain at least p pairs satisfying the
// submodular inequality. n <= 6, 2 <= q <= 4.
PqVerdict IsPqSubmodular(const SetFunction& f, int p, int q);

class Graph {
 public:
  explicit Graph(int nv);
  int nv() const { return nv_; }
  void AddEdge(int u, int v);
  bool HasEdge(int u, int v) const { return (adj_[u] >> v) & 1; }
  bool IsClique(Mask x) const;
  Mask neighbors(int v) const { return adj_[v]; }

 private:
  int nv_;
  std::vector<Mask> adj_;
};

// -1 on kc-cliques, 0 on other sets of size <= kc, |V \ X| on larger sets.
// Declared (2 kc + 1)-distant; requires nv >= 2 kc + 1 and kc >= 1.
SetFunction CliqueFunction(const Graph& g, int kc);

// Smallest-mask kc-clique by exhaustive search, if any.
std::optional<Mask> FindClique(const Graph& g, int kc);

}  // namespace kdsm

#endif  // KDSM_APPS_H_
