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

// File formats.
//
// Instance (JSON): {"n": 3, "k": 2, "values": ["0", "1", ...], "labels": [...]}
//   values has 2^n exact rationals ("p" or "p/q") indexed by mask; labels is
//   optional.
// Weights (JSON): an array of n rationals, as strings or integers.
// Matroid (JSON): {"n": 4, "r": 2, "kind": "uniform"}
//   kind "sparse_paving" adds "forbidden": [[1, 2], ...] (1-based);
//   kind "near_uniform" adds "k" and "ranks" (2^n integers by mask).
// Forbidden pair (JSON): {"r": 2, "m1": [[1, 2]], "m2": [[3, 4]]}.
// Graph (text): first data line is the vertex count, then one edge per line
//   as "u v [w]" with 1-based vertices and w defaulting to 1. '#' starts a
//   comment.

#ifndef KDSM_IO_H_
#define KDSM_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "kdsm/apps.h"
#include "kdsm/matroid.h"
#include "kdsm/rational.h"
#include "kdsm/set_function.h"

namespace kdsm {

std::string ReadTextFile(const std::string& path);

SetFunction ParseInstance(std::string_view text);
// Canonical form: lowest-terms values, fixed key order, one line.
std::string SerializeInstance(const SetFunction& f);

RationalVector ParseWeights(std::string_view text);

Matroid ParseMatroid(std::string_view text);
std::string SerializeMatroid(const Matroid& m);

struct ForbiddenPair {
  int r = 0;
  std::vector<Mask> m1;
  std::vector<Mask> m2;
};
ForbiddenPair ParseForbiddenPair(std::string_view text, int n);

struct EdgeList {
  int nv = 0;
  struct Edge {
    int u;
    int v;
    Rational w;
  };
  std::vector<Edge> edges;
};
EdgeList ParseEdgeList(std::string_view text);
WeightedCompleteGraph ToWeightedGraph(const EdgeList& list);
Graph ToGraph(const EdgeList& list);

}  // namespace kdsm

#endif  // KDSM_IO_H_
