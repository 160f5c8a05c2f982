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

// Central-cut ellipsoid E = { w : (w - c)^T A^{-1} (w - c) <= 1 } in fixed
// point: A and c are stored as integers scaled by 2^p.
//
// Each cut computes the exact update and then rounds outward. The rounded
// shape is blown up by (1 + 2^-m) and gets tau * I added (in scaled units,
// tau = n + 1). The added multiple of I bounds the smallest eigenvalue away
// from zero, which keeps the sub-unit center rounding inside the blow-up
// margin whenever 2^{-p/2} <= 2^{-m-2}. So the rounded ellipsoid always
// contains the exact half-ellipsoid it replaces.

#ifndef KDSM_ELLIPSOID_H_
#define KDSM_ELLIPSOID_H_

#include <span>
#include <vector>

#include "kdsm/rational.h"

namespace kdsm {

struct EllipsoidState {
  RationalVector center;
  std::vector<RationalVector> shape;  // symmetric positive definite
  long iteration = 0;
};

class Ellipsoid {
 public:
  // Ball around (1/2, ..., 1/2) containing [0,1]^n. precision_bits is
  // rounded up to an even number that also satisfies the margin condition.
  Ellipsoid(int n, int precision_bits);

  int n() const { return n_; }
  int precision_bits() const { return p_; }
  long iteration() const { return iteration_; }

  // Keeps { w : a^T w <= a^T c }. a must be nonzero.
  void Cut(std::span<const Integer> a);

  // Center coordinate i as a rational.
  Rational CenterCoordinate(int i) const;
  // Center rounded to the nearest multiple of 2^-q, clipped to [0, 1].
  RationalVector RoundedCenter(int q) const;
  // Sign of the scaled center coordinate relative to the box [0, 1]: -1 below,
  // +1 above, 0 inside.
  int BoxSide(int i) const;

  EllipsoidState State() const;

  // Leading principal minors of the shape, computed exactly.
  bool ShapeIsPositiveDefinite() const;

 private:
  int n_;
  int p_;
  int m_;  // blow-up exponent
  Integer one_;  // 2^p
  long iteration_ = 0;
  std::vector<Integer> c_;
  std::vector<std::vector<Integer>> a_;
};

}  // namespace kdsm

#endif  // KDSM_ELLIPSOID_H_
