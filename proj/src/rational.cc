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

#include "kdsm/rational.h"

#include <bit>
#include <cctype>

#include "kdsm/errors.h"

namespace kdsm {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    throw MalformedRational("malformed rational \"" + std::string(text) + "\"");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) {
    throw MalformedRational("zero denominator in \"" + std::string(text) + "\"");
  }
  if (negative) p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& value) { return value.get_str(10); }

bool IsInteger(const Rational& value) { return value.get_den() == 1; }

Integer DenominatorLcm(std::span<const Rational> values) {
  Integer acc = 1;
  for (const Rational& v : values) {
    if (v.get_den() != 1) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_den_mpz_t());
  }
  return acc;
}

Rational Abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational SumOver(std::span<const Rational> x, std::uint64_t mask) {
  Rational acc = 0;
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    acc += x[i];
    mask &= mask - 1;
  }
  return acc;
}

}  // namespace kdsm
