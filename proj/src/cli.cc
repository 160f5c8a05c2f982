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

#include "kdsm/cli.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <thread>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "kdsm/apps.h"
#include "kdsm/core.h"
#include "kdsm/errors.h"
#include "kdsm/family.h"
#include "kdsm/generators.h"
#include "kdsm/io.h"
#include "kdsm/matroid.h"
#include "kdsm/minimizer.h"
#include "kdsm/optimizer.h"
#include "kdsm/reference.h"

namespace kdsm {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// A negative answer that is not an error (exit status 1).
struct NegativeAnswer {};

Json MaskJson(const GroundSet& ground, Mask m) { return Json(ground.Render(m)); }

Json VectorJson(const RationalVector& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(ToString(x));
  return out;
}

struct Common {
  bool timing = true;
  Clock::time_point start = Clock::now();

  void Finish(Json& j) const {
    if (timing) {
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      j["wall_ms"] = std::round(ms * 1000) / 1000;
    }
  }
};

SetFunction LoadInstance(const std::string& path, std::optional<int> k) {
  SetFunction f = ParseInstance(ReadTextFile(path));
  if (k) f = f.WithK(*k);
  return f;
}

std::optional<long> BudgetFromEnv() {
  const char* raw = std::getenv(kBudgetEnvVar);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) {
    throw InvalidArgument(std::string(kBudgetEnvVar) + " must be a positive integer");
  }
  return v;
}

long SumPivots(const MinimizeResult& r) {
  long total = 0;
  for (const SearchStep& s : r.trace) total += s.verdict.lp_pivots;
  return total;
}

struct CheckArgs {
  std::string instance;
  std::optional<int> k;
  int guard = kExhaustivePairGuard;
};

Json RunCheck(const CheckArgs& a) {
  const SetFunction f = LoadInstance(a.instance, a.k);
  const KDistantVerdict v = IsKDistant(f, f.k(), a.guard);
  Json j;
  j["verb"] = "check";
  j["k"] = f.k();
  j["holds"] = v.holds;
  if (!v.holds) {
    j["violation"] = Json::array({MaskJson(f.ground(), v.x), MaskJson(f.ground(), v.y)});
    const Rational lhs = f(v.x) + f(v.y);
    const Rational rhs = f(v.x | v.y) + f(v.x & v.y);
    j["lhs"] = ToString(lhs);
    j["rhs"] = ToString(rhs);
  }
  return j;
}

Json RunBounds(const std::string& path, std::optional<int> k) {
  const SetFunction f = LoadInstance(path, k);
  const Normalized norm = Normalize(f);
  const ValueBounds b = SmallSetBounds(norm.function, f.k());
  Json j;
  j["verb"] = "bounds";
  j["k"] = f.k();
  j["M"] = ToString(b.M);
  j["lower"] = ToString(b.lower);
  j["upper"] = ToString(b.upper);
  j["abs_bound"] = ToString(b.abs_bound);
  j["offset"] = ToString(norm.offset);
  return j;
}

Json RunFamily(int n, int k, const std::string& weights_path) {
  RationalVector w;
  if (weights_path.empty()) {
    w.assign(n, 0);
  } else {
    w = ParseWeights(ReadTextFile(weights_path));
  }
  if (static_cast<int>(w.size()) != n) throw InvalidArgument("weight vector length must equal n");
  const Ordering ordering = SortElements(w);
  const ConstraintFamily family = BuildFamily(ordering, k);
  const GroundSet ground(n);
  Json j;
  j["verb"] = "family";
  j["n"] = n;
  j["k"] = k;
  Json perm = Json::array();
  for (int e : ordering.perm) perm.push_back(e + 1);
  j["perm"] = std::move(perm);
  j["size"] = family.size();
  j["bound"] = FamilySizeBound(n, k);
  j["loose_bound"] = LooseFamilySizeBound(n, k);
  Json members = Json::array();
  for (Mask m : family.members) members.push_back(MaskJson(ground, m));
  j["members"] = std::move(members);
  return j;
}

struct MaximizeArgs {
  std::string instance;
  std::string weights;
  std::optional<int> k;
  bool verify = false;
};

Json RunMaximize(const MaximizeArgs& a, std::ostream& err) {
  const SetFunction f = LoadInstance(a.instance, a.k);
  const RationalVector w = ParseWeights(ReadTextFile(a.weights));
  const OptResult r = MaximizeOverPf(f, f.k(), w);
  Json j;
  j["verb"] = "maximize";
  j["k"] = f.k();
  j["value"] = ToString(r.value);
  j["x"] = VectorJson(r.x);
  Json y = Json::array();
  for (const DualEntry& d : r.y) {
    y.push_back(Json{{"set", MaskJson(f.ground(), d.set)}, {"value", ToString(d.value)}});
  }
  j["y"] = std::move(y);
  j["family_size"] = r.family.size();
  j["eps"] = ToString(r.eps);
  j["perturbed_w"] = VectorJson(r.perturbed_w);
  j["lp_pivots"] = r.lp_pivots;
  if (a.verify) {
    const SetFunction f0 = Normalize(f).function;
    const int n = f.n();
    if (n > kMaxDenseSize) throw InstanceTooLarge("--verify needs n <= 20");
    const RationalVector table = f0.Table();
    for (Mask t = 0; t < table.size(); ++t) {
      if (SumOver(r.x, t) > table[t]) {
        throw InternalConsistencyError("x* violates the constraint for mask " + std::to_string(t));
      }
    }
    if (n <= kFullLpLimit) {
      const FullLPOracleResult ref = BruteforceMaximizeFull(f0, w);
      if (ref.value != r.value) {
        throw InternalConsistencyError("optimum " + ToString(r.value) + " differs from the full LP " +
                                       ToString(ref.value));
      }
      j["verified"] = "feasible+optimal";
    } else {
      err << "n > " << kFullLpLimit << ": optimality not cross-checked\n";
      j["verified"] = "feasible";
    }
  }
  return j;
}

struct MinimizeArgs {
  std::string instance;
  std::optional<int> k;
  bool verify = false;
  bool trace = false;
  std::optional<long> budget;
};

Json RunMinimize(const MinimizeArgs& a, std::ostream& err) {
  const SetFunction f = LoadInstance(a.instance, a.k);
  MembershipOptions options;
  options.budget = a.budget ? a.budget : BudgetFromEnv();
  options.verify = a.verify;
  if (a.trace) options.trace = &err;
  const MinimizeResult r = Minimize(f, f.k(), options);
  Json j;
  j["verb"] = "minimize";
  j["k"] = f.k();
  j["min"] = ToString(r.min_value);
  j["argmin"] = MaskJson(f.ground(), r.argmin);
  j["offset"] = ToString(r.offset);
  j["oracle_calls"] = r.oracle_calls;
  j["lp_pivots"] = SumPivots(r);
  Json steps = Json::array();
  for (const SearchStep& s : r.trace) {
    Json step;
    step["shift"] = ToString(s.shift);
    step["verdict"] = s.verdict.nonnegative ? "nonnegative" : "witness";
    if (!s.verdict.nonnegative) {
      step["witness"] = MaskJson(f.ground(), s.verdict.witness);
      step["value"] = ToString(s.verdict.value);
    }
    step["certificate"] = s.verdict.certificate;
    step["oracle_calls"] = s.verdict.oracle_calls;
    step["iterations"] = s.verdict.iterations;
    steps.push_back(std::move(step));
  }
  j["search"] = std::move(steps);
  if (a.verify) {
    const BruteforceMinimum bf = BruteforceMinimize(f);
    if (bf.value != r.min_value) {
      throw InternalConsistencyError("minimum " + ToString(r.min_value) +
                                     " differs from exhaustive " + ToString(bf.value));
    }
    j["verified"] = true;
  }
  return j;
}

struct GenArgs {
  std::string strategy;
  int n = 0;
  int k = 2;
  std::uint64_t seed = 1;
  std::string graph;
  std::string forbidden;
};

std::string RunGen(const GenArgs& a) {
  const Strategy strategy = ParseStrategy(a.strategy);
  if (!a.graph.empty()) {
    const EdgeList list = ParseEdgeList(ReadTextFile(a.graph));
    if (strategy == Strategy::kClique) {
      if (a.k < 3) throw InvalidArgument("clique instances need k >= 3");
      return SerializeInstance(CliqueFunction(ToGraph(list), (a.k - 1) / 2).WithK(a.k));
    }
    if (strategy == Strategy::kCut) {
      const int kc = (a.k + 1) / 2;
      return SerializeInstance(CutFunction(ToWeightedGraph(list), kc).WithK(a.k));
    }
    throw InvalidArgument("--graph applies to the clique and cut strategies");
  }
  if (!a.forbidden.empty()) {
    if (strategy != Strategy::kMinRank) {
      throw InvalidArgument("--forbidden applies to the minrank strategy");
    }
    if (a.k < 4) throw InvalidArgument("minrank instances need k >= 4 (declared distance 4k')");
    const ForbiddenPair p = ParseForbiddenPair(ReadTextFile(a.forbidden), a.n);
    const MinRankInstance inst = BuildMinRank(Matroid::SparsePaving(a.n, p.r, p.m1),
                                              Matroid::SparsePaving(a.n, p.r, p.m2), a.k / 4);
    return SerializeInstance(inst.rmin.WithK(a.k));
  }
  return SerializeInstance(GenerateKDistant(a.n, a.k, a.seed, strategy));
}

struct MiArgs {
  std::string m1;
  std::string m2;
  std::string weights;
  int k = 1;
  bool verify = false;
};

Json RunMi(const MiArgs& a, std::ostream& err) {
  const Matroid m1 = ParseMatroid(ReadTextFile(a.m1));
  const Matroid m2 = ParseMatroid(ReadTextFile(a.m2));
  const RationalVector w = ParseWeights(ReadTextFile(a.weights));
  const MinRankInstance inst = BuildMinRank(m1, m2, a.k);
  MembershipOptions options;
  options.budget = BudgetFromEnv();
  const IntersectionResult r = SolveWeightedMatroidIntersection(inst, w, options);
  const GroundSet ground(m1.n());
  Json j;
  j["verb"] = "mi";
  j["k"] = a.k;
  j["weight"] = ToString(r.weight);
  j["set"] = MaskJson(ground, r.set);
  j["x"] = VectorJson(r.x);
  j["rounds"] = r.rounds;
  j["cuts"] = r.cuts;
  j["oracle_calls"] = r.oracle_calls;
  if (a.verify) {
    if (m1.n() > kCommonIndependentLimit) {
      err << "n > " << kCommonIndependentLimit << ": exhaustive cross-check skipped\n";
    } else {
      const CommonIndependentResult ref = BruteforceCommonIndependent(m1, m2, w);
      if (ref.weight != r.weight) {
        throw InternalConsistencyError("intersection weight " + ToString(r.weight) +
                                       " differs from exhaustive " + ToString(ref.weight));
      }
      j["verified"] = true;
    }
  }
  return j;
}

struct BenchArgs {
  int max_n = 8;
  int max_k = 4;
  std::uint64_t seed = 1;
  int threads = 1;
  int min_n = 4;
};

struct BenchRow {
  int n;
  int k;
  Strategy strategy;
  std::uint64_t seed;
  Rational min_value;
  long oracle_calls = 0;
  long lp_pivots = 0;
  double wall_ms = 0;
  std::string error;
};

Json RunBench(const BenchArgs& a, bool timing, std::ostream& err) {
  if (a.max_n < a.min_n || a.max_n > kMaxDenseSize) throw InvalidArgument("bad --max-n");
  if (a.max_k < 2) throw InvalidArgument("--max-k must be >= 2");
  std::vector<BenchRow> rows;
  for (int n = a.min_n; n <= a.max_n; ++n) {
    for (int k = 2; k <= std::min(a.max_k, n); ++k) {
      for (Strategy s : kAllStrategies) {
        if (s == Strategy::kRejection && n > kRejectionMaxN) continue;
        if (s == Strategy::kClique && k < 3) continue;
        const std::uint64_t seed = a.seed * 1000003ULL + static_cast<std::uint64_t>(n * 100 + k * 10) +
                                   static_cast<std::uint64_t>(s);
        BenchRow row;
        row.n = n;
        row.k = k;
        row.strategy = s;
        row.seed = seed;
        rows.push_back(std::move(row));
      }
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      BenchRow& row = rows[i];
      const auto t0 = Clock::now();
      try {
        const SetFunction f = GenerateKDistant(row.n, row.k, row.seed, row.strategy);
        MembershipOptions options;
        options.budget = BudgetFromEnv();
        const MinimizeResult r = Minimize(f, row.k, options);
        row.min_value = r.min_value;
        row.oracle_calls = r.oracle_calls;
        row.lp_pivots = SumPivots(r);
      } catch (const Error& e) {
        row.error = e.what();
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    }
  };
  const int threads = std::max(1, a.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  Json j;
  j["verb"] = "bench";
  Json out_rows = Json::array();
  struct Agg {
    int count = 0;
    long calls = 0;
    long pivots = 0;
    double ms = 0;
  };
  std::map<std::pair<int, int>, Agg> table;
  bool any_error = false;
  for (const BenchRow& row : rows) {
    Json r;
    r["n"] = row.n;
    r["k"] = row.k;
    r["strategy"] = ToString(row.strategy);
    r["seed"] = row.seed;
    if (row.error.empty()) {
      r["min"] = ToString(row.min_value);
    } else {
      r["error"] = row.error;
      any_error = true;
    }
    r["oracle_calls"] = row.oracle_calls;
    r["lp_pivots"] = row.lp_pivots;
    if (timing) r["wall_ms"] = std::round(row.wall_ms * 1000) / 1000;
    out_rows.push_back(std::move(r));
    Agg& agg = table[{row.n, row.k}];
    ++agg.count;
    agg.calls += row.oracle_calls;
    agg.pivots += row.lp_pivots;
    agg.ms += row.wall_ms;
  }
  j["rows"] = std::move(out_rows);
  Json scaling = Json::array();
  err << "   n   k  instances  mean_oracle_calls  mean_lp_pivots  mean_wall_ms\n";
  for (const auto& [key, agg] : table) {
    const double c = agg.count;
    err << std::setw(4) << key.first << std::setw(4) << key.second << std::setw(11) << agg.count
        << std::setw(19) << std::fixed << std::setprecision(1) << agg.calls / c << std::setw(16)
        << agg.pivots / c << std::setw(14) << std::setprecision(2) << agg.ms / c << "\n";
    Json s;
    s["n"] = key.first;
    s["k"] = key.second;
    s["instances"] = agg.count;
    s["mean_oracle_calls"] = agg.calls / c;
    s["mean_lp_pivots"] = agg.pivots / c;
    if (timing) s["mean_wall_ms"] = std::round(agg.ms / c * 1000) / 1000;
    scaling.push_back(std::move(s));
  }
  j["scaling"] = std::move(scaling);
  if (any_error) j["errors"] = true;
  return j;
}

const char* ErrorKind(const Error& e) {
  if (dynamic_cast<const MalformedRational*>(&e)) return "malformed_rational";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "invalid_argument";
  if (dynamic_cast<const InstanceTooLarge*>(&e)) return "instance_too_large";
  if (dynamic_cast<const IntractableRegime*>(&e)) return "intractable_regime";
  if (dynamic_cast<const SingularSystem*>(&e)) return "singular_system";
  if (dynamic_cast<const GeneratorExhausted*>(&e)) return "generator_exhausted";
  return "error";
}

void EmitError(std::ostream& out, std::ostream& err, const char* kind, const std::string& what) {
  err << "error: " << what << "\n";
  Json j;
  j["error"] = what;
  j["kind"] = kind;
  out << j.dump() << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for k-distant submodular set functions", "kdsm"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit wall times for byte-stable output");

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Exhaustive k-distance check");
  c_check->add_option("--instance", check.instance, "Instance file")->required();
  c_check->add_option("--k", check.k, "Distance parameter (default: declared)");
  c_check->add_option("--guard", check.guard, "Largest n for the exhaustive check");

  std::string bounds_instance;
  std::optional<int> bounds_k;
  auto* c_bounds = app.add_subcommand("bounds", "Value bounds from sets of size <= k");
  c_bounds->add_option("--instance", bounds_instance, "Instance file")->required();
  c_bounds->add_option("--k", bounds_k, "Distance parameter (default: declared)");

  int family_n = 0, family_k = 0;
  std::string family_weights;
  auto* c_family = app.add_subcommand("family", "Print the restricted constraint family");
  c_family->add_option("--n", family_n, "Ground set size")->required();
  c_family->add_option("--k", family_k, "Distance parameter")->required();
  c_family->add_option("--weights", family_weights, "Weights file (default: all zero)");

  MaximizeArgs maximize;
  auto* c_max = app.add_subcommand("maximize", "max w^T x over P(f)");
  c_max->add_option("--instance", maximize.instance, "Instance file")->required();
  c_max->add_option("--weights", maximize.weights, "Weights file")->required();
  c_max->add_option("--k", maximize.k, "Distance parameter (default: declared)");
  c_max->add_flag("--verify", maximize.verify, "Check all 2^n constraints and the full LP");
  c_max->add_flag("--json", "JSON output (always on)");

  MinimizeArgs minimize;
  auto* c_min = app.add_subcommand("minimize", "Minimize an integer-valued function");
  c_min->add_option("--instance", minimize.instance, "Instance file")->required();
  c_min->add_option("--k", minimize.k, "Distance parameter (default: declared)");
  c_min->add_flag("--verify", minimize.verify, "Exhaustive cross-check (n <= 24)");
  c_min->add_flag("--trace", minimize.trace, "Search progress on stderr");
  c_min->add_option("--budget", minimize.budget, "Ellipsoid iteration budget")
      ->check(CLI::PositiveNumber);
  c_min->add_flag("--json", "JSON output (always on)");

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Generate a k-distant instance");
  c_gen->add_option("strategy", gen.strategy,
                    "rejection | cut | minrank | clique | indicator_shifted")
      ->required();
  c_gen->add_option("--n", gen.n, "Ground set size");
  c_gen->add_option("--k", gen.k, "Declared distance parameter");
  c_gen->add_option("--seed", gen.seed, "Random seed");
  c_gen->add_option("--graph", gen.graph, "Edge-list file (clique, cut)");
  c_gen->add_option("--forbidden", gen.forbidden, "Forbidden-sets file (minrank)");

  MiArgs mi;
  auto* c_mi = app.add_subcommand("mi", "Weighted matroid intersection via the minimum rank");
  c_mi->add_option("--m1", mi.m1, "First matroid file")->required();
  c_mi->add_option("--m2", mi.m2, "Second matroid file")->required();
  c_mi->add_option("--weights", mi.weights, "Integer weights file")->required();
  c_mi->add_option("--k", mi.k, "Near-uniform parameter (distance 4k)");
  c_mi->add_flag("--verify", mi.verify, "Exhaustive cross-check (n <= 8)");

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Seeded scaling benchmark of the minimizer");
  c_bench->add_option("--max-n", bench.max_n, "Largest ground set");
  c_bench->add_option("--min-n", bench.min_n, "Smallest ground set");
  c_bench->add_option("--max-k", bench.max_k, "Largest distance parameter");
  c_bench->add_option("--seed", bench.seed, "Base seed");
  c_bench->add_option("--threads", bench.threads, "Worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }
  common.timing = !no_timing;

  try {
    Json j;
    int status = kExitOk;
    if (*c_check) {
      j = RunCheck(check);
      if (!j["holds"].get<bool>()) status = kExitFailure;
    } else if (*c_bounds) {
      j = RunBounds(bounds_instance, bounds_k);
    } else if (*c_family) {
      j = RunFamily(family_n, family_k, family_weights);
    } else if (*c_max) {
      j = RunMaximize(maximize, err);
    } else if (*c_min) {
      j = RunMinimize(minimize, err);
    } else if (*c_gen) {
      if (gen.n < 1 && gen.graph.empty()) throw InvalidArgument("gen needs --n");
      out << RunGen(gen) << "\n";
      return kExitOk;
    } else if (*c_mi) {
      j = RunMi(mi, err);
    } else if (*c_bench) {
      j = RunBench(bench, common.timing, err);
    }
    common.Finish(j);
    out << j.dump() << "\n";
    return status;
  } catch (const InternalConsistencyError& e) {
    EmitError(out, err, "internal_consistency", e.what());
    return kExitInternal;
  } catch (const Error& e) {
    EmitError(out, err, ErrorKind(e), e.what());
    return kExitFailure;
  }
}

}  // namespace kdsm
