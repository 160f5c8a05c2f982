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

// Exact arithmetic carriers shared by every module.
//
// Rational is GMP's mpq_class. Every value produced by this library is kept
// in canonical form (lowest terms, positive denominator); ParseRational
// canonicalizes its input.

#ifndef KDSM_RATIONAL_H_
#define KDSM_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kdsm {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// Parses "p" or "p/q" in base 10 (optional leading '-'). Throws
// MalformedRational on anything else, including a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical "p" or "p/q" rendering.
std::string ToString(const Rational& value);

bool IsInteger(const Rational& value);

// Least common multiple of the denominators (1 for an empty span).
Integer DenominatorLcm(std::span<const Rational> values);

Rational Abs(const Rational& value);

// Dot product of x with the indicator of mask.
Rational SumOver(std::span<const Rational> x, std::uint64_t mask);

}  // namespace kdsm

#endif  // KDSM_RATIONAL_H_
