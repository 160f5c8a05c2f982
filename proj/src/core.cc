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

#include "kdsm/core.h"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdsm/errors.h"

namespace kdsm {
namespace {

// Values small enough that sums of four never overflow.
constexpr std::int64_t kSmallLimit = std::int64_t{1} << 60;

std::optional<std::vector<std::int64_t>> AsSmallIntegers(const RationalVector& values) {
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (const Rational& v : values) {
    if (!IsInteger(v) || !v.get_num().fits_slong_p()) return std::nullopt;
    const long x = v.get_num().get_si();
    if (x >= kSmallLimit / 4 || x <= -kSmallLimit / 4) return std::nullopt;
    out.push_back(x);
  }
  return out;
}

template <typename Values>
KDistantVerdict ScanPairs(const Values& v, int n, int k) {
  const Mask count = Mask{1} << n;
  for (Mask x = 0; x < count; ++x) {
    for (Mask y = x + 1; y < count; ++y) {
      const Mask meet = x & y;
      if (meet == x || meet == y) continue;  // comparable pairs hold with equality
      if (Popcount(x ^ y) < k) continue;
      if (v[x] + v[y] < v[x | y] + v[meet]) return {false, x, y};
    }
  }
  return {};
}

}  // namespace

KDistantVerdict IsKDistant(const SetFunction& f, int k, int guard) {
  if (k < 1) throw InvalidArgument("distance parameter must be positive");
  if (f.n() > guard) {
    throw InstanceTooLarge("instance too large for exhaustive check: n=" + std::to_string(f.n()) +
                           " exceeds guard " + std::to_string(guard));
  }
  const RationalVector table = f.Table();
  if (auto small = AsSmallIntegers(table)) return ScanPairs(*small, f.n(), k);
  return ScanPairs(table, f.n(), k);
}

Normalized Normalize(const SetFunction& f) {
  Rational offset = f(0);
  if (offset == 0) return {f, offset};
  return {f.Shifted(-offset, 0, {}), offset};
}

SetFunction Denormalize(const SetFunction& f0, const Rational& offset) {
  if (offset == 0) return f0;
  return f0.Shifted(offset, 0, {});
}

ValueBounds SmallSetBounds(const SetFunction& f, int k) {
  if (k < 1 || k > f.n()) {
    throw InvalidArgument("value bound needs 1 <= k <= n, got k=" + std::to_string(k) +
                          ", n=" + std::to_string(f.n()));
  }
  if (f(0) != 0) throw InvalidArgument("value bound needs a normalized function (f({}) = 0)");
  ValueBounds b;
  b.M = 0;
  ForEachSubsetUpTo(f.n(), k, [&](Mask t) { b.M += Abs(f(t)); });
  const Rational top = f(f.full());
  b.lower = top - b.M;
  b.upper = b.M;
  b.abs_bound = std::max(b.M, Abs(b.lower));
  return b;
}

SetFunction ShiftNonempty(const SetFunction& f, const Rational& c) {
  if (c < 0) throw InvalidArgument("shift must be nonnegative, got " + ToString(c));
  if (f(0) != 0) throw InvalidArgument("shift needs a normalized function (f({}) = 0)");
  return f.Shifted(0, c, {});
}

SetFunction SubtractModular(const SetFunction& f, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != f.n()) {
    throw InvalidArgument("modular vector has " + std::to_string(x.size()) +
                          " entries, expected " + std::to_string(f.n()));
  }
  return f.Shifted(0, 0, x);
}

}  // namespace kdsm
