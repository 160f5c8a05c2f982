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

#include "kdsm/io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "kdsm/errors.h"

namespace kdsm {
namespace {

using Json = nlohmann::json;

Json ParseJson(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Rational RationalFromJson(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return ParseRational(j.get<std::string>());
    } catch (const MalformedRational& e) {
      throw MalformedRational(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw MalformedRational(where + ": expected a rational string or integer");
}

int IntField(const Json& obj, const char* key, const char* what) {
  if (!obj.contains(key)) throw InvalidArgument(std::string(what) + " lacks field '" + key + "'");
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw InvalidArgument(std::string(what) + " field '" + key + "' must be an integer");
  }
  return v.get<int>();
}

Mask MaskFromList(const Json& list, int n, const char* what) {
  if (!list.is_array()) throw InvalidArgument(std::string(what) + ": expected an element list");
  Mask m = 0;
  for (const Json& e : list) {
    if (!e.is_number_integer()) throw InvalidArgument(std::string(what) + ": bad element");
    const int i = e.get<int>();
    if (i < 1 || i > n) {
      throw InvalidArgument(std::string(what) + ": element " + std::to_string(i) +
                            " outside 1.." + std::to_string(n));
    }
    m |= Mask{1} << (i - 1);
  }
  return m;
}

Json MaskToList(Mask m, int n) {
  Json out = Json::array();
  for (int i = 0; i < n; ++i) {
    if ((m >> i) & 1) out.push_back(i + 1);
  }
  return out;
}

}  // namespace

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SetFunction ParseInstance(std::string_view text) {
  const Json j = ParseJson(text, "instance");
  if (!j.is_object()) throw InvalidArgument("instance must be a JSON object");
  const int n = IntField(j, "n", "instance");
  const int k = IntField(j, "k", "instance");
  if (n < 1 || n > kMaxDenseSize) {
    throw InvalidArgument("instance n=" + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxDenseSize) + "]");
  }
  if (k < 2) throw InvalidArgument("instance k=" + std::to_string(k) + " must be >= 2");
  if (k > n) {
    throw InvalidArgument("instance k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  }
  if (!j.contains("values") || !j.at("values").is_array()) {
    throw InvalidArgument("instance lacks a 'values' array");
  }
  const Json& values = j.at("values");
  const std::size_t expected = std::size_t{1} << n;
  if (values.size() != expected) {
    throw InvalidArgument("instance has " + std::to_string(values.size()) + " values, expected 2^" +
                          std::to_string(n) + " = " + std::to_string(expected));
  }
  RationalVector table(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    table[i] = RationalFromJson(values[i], "value at mask " + std::to_string(i));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array() || static_cast<int>(l.size()) != n) {
      throw InvalidArgument("labels must be an array of n strings");
    }
    for (const Json& s : l) {
      if (!s.is_string()) throw InvalidArgument("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  GroundSet ground = labels.empty() ? GroundSet(n) : GroundSet(n, std::move(labels));
  return SetFunction::Dense(std::move(ground), k, std::move(table));
}

std::string SerializeInstance(const SetFunction& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["n"] = f.n();
  j["k"] = f.k();
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  for (const Rational& v : f.Table()) values.push_back(ToString(v));
  j["values"] = std::move(values);
  if (f.ground().has_labels()) j["labels"] = f.ground().labels();
  return j.dump();
}

RationalVector ParseWeights(std::string_view text) {
  const Json j = ParseJson(text, "weights");
  if (!j.is_array()) throw InvalidArgument("weights must be a JSON array");
  RationalVector w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    w.push_back(RationalFromJson(j[i], "weight " + std::to_string(i + 1)));
  }
  return w;
}

Matroid ParseMatroid(std::string_view text) {
  const Json j = ParseJson(text, "matroid");
  if (!j.is_object()) throw InvalidArgument("matroid must be a JSON object");
  const int n = IntField(j, "n", "matroid");
  const int r = IntField(j, "r", "matroid");
  const std::string kind = j.value("kind", std::string("uniform"));
  if (kind == "uniform") return Matroid::Uniform(n, r);
  if (kind == "sparse_paving") {
    std::vector<Mask> forbidden;
    if (j.contains("forbidden")) {
      for (const Json& s : j.at("forbidden")) forbidden.push_back(MaskFromList(s, n, "forbidden"));
    }
    return Matroid::SparsePaving(n, r, std::move(forbidden));
  }
  if (kind == "near_uniform") {
    const int k = IntField(j, "k", "matroid");
    if (!j.contains("ranks") || !j.at("ranks").is_array()) {
      throw InvalidArgument("near_uniform matroid lacks 'ranks'");
    }
    std::vector<int> ranks;
    for (const Json& v : j.at("ranks")) {
      if (!v.is_number_integer()) throw InvalidArgument("ranks must be integers");
      ranks.push_back(v.get<int>());
    }
    return Matroid::NearUniform(n, r, k, std::move(ranks));
  }
  throw InvalidArgument("unknown matroid kind '" + kind + "'");
}

std::string SerializeMatroid(const Matroid& m) {
  Json j = Json::object();
  j["n"] = m.n();
  j["r"] = m.rank();
  j["kind"] = ToString(m.kind());
  if (m.kind() == MatroidKind::kSparsePaving) {
    Json f = Json::array();
    for (Mask s : m.forbidden()) f.push_back(MaskToList(s, m.n()));
    j["forbidden"] = std::move(f);
  } else if (m.kind() == MatroidKind::kNearUniform) {
    j["k"] = m.declared_k();
    Json ranks = Json::array();
    for (Mask x = 0; x < (Mask{1} << m.n()); ++x) ranks.push_back(m.Rank(x));
    j["ranks"] = std::move(ranks);
  }
  return j.dump();
}

ForbiddenPair ParseForbiddenPair(std::string_view text, int n) {
  const Json j = ParseJson(text, "forbidden-sets");
  if (!j.is_object()) throw InvalidArgument("forbidden-sets file must be a JSON object");
  ForbiddenPair out;
  out.r = IntField(j, "r", "forbidden-sets");
  for (const char* key : {"m1", "m2"}) {
    std::vector<Mask>& dst = std::string(key) == "m1" ? out.m1 : out.m2;
    if (!j.contains(key)) continue;
    for (const Json& s : j.at(key)) dst.push_back(MaskFromList(s, n, key));
  }
  return out;
}

EdgeList ParseEdgeList(std::string_view text) {
  EdgeList out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_count = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b, c, extra;
    if (!(ls >> a)) continue;
    const std::string where = "graph line " + std::to_string(line_no);
    try {
      if (!have_count) {
        out.nv = std::stoi(a);
        if (out.nv < 1 || out.nv > kMaxGroundSize) throw InvalidArgument(where + ": bad vertex count");
        have_count = true;
        continue;
      }
      if (!(ls >> b)) throw InvalidArgument(where + ": expected 'u v [w]'");
      EdgeList::Edge e{std::stoi(a) - 1, std::stoi(b) - 1, 1};
      if (ls >> c) e.w = ParseRational(c);
      if (ls >> extra) throw InvalidArgument(where + ": trailing text");
      if (e.u < 0 || e.v < 0 || e.u >= out.nv || e.v >= out.nv || e.u == e.v) {
        throw InvalidArgument(where + ": bad endpoints");
      }
      out.edges.push_back(std::move(e));
    } catch (const std::logic_error&) {
      throw InvalidArgument(where + ": not an integer");
    }
  }
  if (!have_count) throw InvalidArgument("graph file has no vertex count");
  return out;
}

WeightedCompleteGraph ToWeightedGraph(const EdgeList& list) {
  WeightedCompleteGraph g(list.nv);
  for (const auto& e : list.edges) g.set_weight(e.u, e.v, e.w);
  return g;
}

Graph ToGraph(const EdgeList& list) {
  Graph g(list.nv);
  for (const auto& e : list.edges) g.AddEdge(e.u, e.v);
  return g;
}

}  // namespace kdsm
