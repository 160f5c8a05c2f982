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

#include "kdsm/ellipsoid.h"

#include <algorithm>
#include <cstddef>

#include "kdsm/errors.h"

namespace kdsm {
namespace {

// Nearest integer to num / den for den > 0 (halves round up).
Integer RoundDiv(const Integer& num, const Integer& den) {
  Integer twice = 2 * num + den;
  Integer d2 = 2 * den;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), d2.get_mpz_t());
  return q;
}

int CeilLog2(long v) {
  int bits = 0;
  while ((1L << bits) < v) ++bits;
  return bits;
}

}  // namespace

Ellipsoid::Ellipsoid(int n, int precision_bits) : n_(n) {
  if (n < 1) throw InvalidArgument("ellipsoid dimension must be positive");
  m_ = CeilLog2(16L * n * n);
  p_ = std::max(precision_bits, 2 * m_ + 4);
  if (p_ % 2 != 0) ++p_;
  mpz_ui_pow_ui(one_.get_mpz_t(), 2, static_cast<unsigned long>(p_));
  c_.assign(n, one_ / 2);
  a_.assign(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) a_[i][i] = n * (one_ / 4);
}

void Ellipsoid::Cut(std::span<const Integer> a) {
  const int n = n_;
  if (static_cast<int>(a.size()) != n) throw InvalidArgument("cut vector length mismatch");
  std::vector<Integer> u(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a[j] != 0) u[i] += a_[i][j] * a[j];
    }
  }
  Integer q = 0;
  for (int i = 0; i < n; ++i) q += a[i] * u[i];
  if (q <= 0) throw InternalConsistencyError("ellipsoid shape lost positive definiteness");

  // Center: c - A a / ((n + 1) sqrt(a^T A a)), scaled units. The square root
  // is taken with e extra bits so its error stays below 1/16 of a unit.
  Integer max_diag = 0;
  for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, a_[i][i]);
  const long e = p_ / 2 + static_cast<long>(mpz_sizeinbase(max_diag.get_mpz_t(), 2)) / 2 + 8;
  Integer shifted = q << static_cast<mp_bitcnt_t>(2 * e);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), shifted.get_mpz_t());
  const Integer step_den = (n + 1) * root;
  for (int i = 0; i < n; ++i) {
    Integer num = u[i] << static_cast<mp_bitcnt_t>(p_ / 2 + e);
    c_[i] -= RoundDiv(num, step_den);
  }

  // Shape: n^2/(n^2-1) (A - 2 u u^T / ((n+1) q)), blown up by (1 + 2^-m),
  // rounded to nearest, plus tau on the diagonal.
  const long nn = static_cast<long>(n) * n;
  const Integer scale_num = (Integer(1) << static_cast<mp_bitcnt_t>(m_)) + 1;
  const Integer den = Integer(nn - 1) * (n + 1) * q << static_cast<mp_bitcnt_t>(m_);
  const Integer nq = (n + 1) * q;
  const Integer tau = n + 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Integer num = a_[i][j] * nq - 2 * u[i] * u[j];
      num *= nn;
      num *= scale_num;
      Integer v = RoundDiv(num, den);
      if (i == j) v += tau;
      a_[i][j] = v;
      a_[j][i] = v;
    }
  }
  ++iteration_;
}

Rational Ellipsoid::CenterCoordinate(int i) const {
  Rational v(c_[i], one_);
  v.canonicalize();
  return v;
}

RationalVector Ellipsoid::RoundedCenter(int q) const {
  RationalVector out(n_);
  const int shift = p_ - q;
  Integer grid = Integer(1) << static_cast<mp_bitcnt_t>(q);
  for (int i = 0; i < n_; ++i) {
    Integer v;
    if (shift > 0) {
      Integer half = Integer(1) << static_cast<mp_bitcnt_t>(shift - 1);
      Integer t = c_[i] + half;
      mpz_fdiv_q_2exp(v.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
      v = c_[i] << static_cast<mp_bitcnt_t>(-shift);
    }
    if (v < 0) v = 0;
    if (v > grid) v = grid;
    out[i] = Rational(v, grid);
    out[i].canonicalize();
  }
  return out;
}

int Ellipsoid::BoxSide(int i) const {
  if (c_[i] < 0) return -1;
  if (c_[i] > one_) return 1;
  return 0;
}

EllipsoidState Ellipsoid::State() const {
  EllipsoidState s;
  s.iteration = iteration_;
  s.center.resize(n_);
  s.shape.assign(n_, RationalVector(n_));
  for (int i = 0; i < n_; ++i) {
    s.center[i] = CenterCoordinate(i);
    for (int j = 0; j < n_; ++j) {
      s.shape[i][j] = Rational(a_[i][j], one_);
      s.shape[i][j].canonicalize();
    }
  }
  return s;
}

bool Ellipsoid::ShapeIsPositiveDefinite() const {
  // Fraction-free elimination: the k-th pivot equals the k-th leading minor.
  std::vector<std::vector<Integer>> m = a_;
  Integer prev = 1;
  for (int k = 0; k < n_; ++k) {
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return true;
}

}  // namespace kdsm
