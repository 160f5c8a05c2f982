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

#include "kdsm/ratlp.h"

#include <string>
#include <utility>

#include "kdsm/errors.h"

namespace kdsm {

void StandardFormLP::AddColumn(SparseColumn column, Rational cost) {
  for (const SparseEntry& e : column) {
    if (e.row < 0 || e.row >= rows) throw InvalidArgument("column entry outside the row range");
  }
  columns.push_back(std::move(column));
  c.push_back(std::move(cost));
}

StandardFormLP StandardFormLP::FromDense(const std::vector<RationalVector>& a, RationalVector b,
                                         RationalVector c) {
  StandardFormLP lp;
  lp.rows = static_cast<int>(a.size());
  if (b.size() != a.size()) throw InvalidArgument("right-hand side length differs from row count");
  const std::size_t d = c.size();
  for (const RationalVector& row : a) {
    if (row.size() != d) throw InvalidArgument("matrix row length differs from cost length");
  }
  lp.b = std::move(b);
  for (std::size_t j = 0; j < d; ++j) {
    SparseColumn col;
    for (int i = 0; i < lp.rows; ++i) {
      if (a[i][j] != 0) col.push_back({i, a[i][j]});
    }
    lp.columns.push_back(std::move(col));
  }
  lp.c = std::move(c);
  return lp;
}

const char* ToString(LPStatus status) {
  switch (status) {
    case LPStatus::kOptimal:
      return "optimal";
    case LPStatus::kInfeasible:
      return "infeasible";
    case LPStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

// Gauss-Jordan inverse; nullopt when singular.
std::optional<std::vector<RationalVector>> Invert(std::vector<RationalVector> a) {
  const int m = static_cast<int>(a.size());
  std::vector<RationalVector> inv(m, RationalVector(m, 0));
  for (int i = 0; i < m; ++i) inv[i][i] = 1;
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (int j = 0; j < m; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int j = 0; j < m; ++j) {
        if (a[col][j] != 0) a[r][j] -= f * a[col][j];
        if (inv[col][j] != 0) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

class Simplex {
 public:
  explicit Simplex(const StandardFormLP& lp)
      : lp_(lp), m_(lp.rows), d_(lp.cols()), is_basic_(lp.cols() + lp.rows, 0) {}

  bool TryWarmStart(const std::vector<int>& basis) {
    auto factor = BasisFactor::Factor(lp_, basis);
    if (!factor) return false;
    RationalVector xb = factor->Solve(lp_.b);
    for (const Rational& v : xb) {
      if (v < 0) return false;
    }
    basis_ = basis;
    binv_ = factor->inverse();
    xb_ = std::move(xb);
    for (int j : basis_) is_basic_[j] = 1;
    return true;
  }

  // Returns false when the problem is infeasible.
  bool PhaseOne() {
    sign_.assign(m_, 1);
    basis_.resize(m_);
    binv_.assign(m_, RationalVector(m_, 0));
    xb_.assign(m_, 0);
    for (int r = 0; r < m_; ++r) {
      if (lp_.b[r] < 0) sign_[r] = -1;
      basis_[r] = d_ + r;
      is_basic_[d_ + r] = 1;
      binv_[r][r] = sign_[r];
      xb_[r] = sign_[r] * lp_.b[r];
    }
    phase_ = 1;
    Run();  // phase one is bounded below by zero
    Rational infeasibility = 0;
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] >= d_) infeasibility += xb_[r];
    }
    if (infeasibility > 0) return false;
    // Drive zero-level artificials out where some structural column allows.
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < d_) continue;
      for (int j = 0; j < d_; ++j) {
        if (is_basic_[j]) continue;
        if (RowDot(binv_[r], j) == 0) continue;
        RationalVector alpha = Alpha(j);
        Pivot(r, j, alpha);
        break;
      }
    }
    return true;
  }

  // Returns false when unbounded.
  bool PhaseTwo() {
    phase_ = 2;
    return Run();
  }

  void Extract(LPSolution& out) const {
    out.y.assign(d_, 0);
    out.basis.clear();
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < d_) {
        out.y[basis_[r]] = xb_[r];
        out.basis.push_back(basis_[r]);
      }
    }
    out.objective = 0;
    for (int j : out.basis) out.objective += lp_.c[j] * out.y[j];
    out.duals = Multipliers();
  }

  int pivots() const { return pivots_; }

 private:
  const Rational& Cost(int j) const {
    static const Rational kZero = 0;
    static const Rational kOne = 1;
    if (j >= d_) return phase_ == 1 ? kOne : kZero;
    return phase_ == 1 ? kZero : lp_.c[j];
  }

  Rational RowDot(const RationalVector& row, int j) const {
    if (j >= d_) return row[j - d_] * sign_[j - d_];
    Rational acc = 0;
    for (const SparseEntry& e : lp_.columns[j]) {
      if (row[e.row] != 0) acc += row[e.row] * e.value;
    }
    return acc;
  }

  RationalVector Alpha(int j) const {
    RationalVector alpha(m_);
    for (int r = 0; r < m_; ++r) alpha[r] = RowDot(binv_[r], j);
    return alpha;
  }

  RationalVector Multipliers() const {
    RationalVector pi(m_, 0);
    for (int r = 0; r < m_; ++r) {
      const Rational& cb = Cost(basis_[r]);
      if (cb == 0) continue;
      for (int i = 0; i < m_; ++i) {
        if (binv_[r][i] != 0) pi[i] += cb * binv_[r][i];
      }
    }
    return pi;
  }

  bool Run() {
    Rational reduced;
    while (true) {
      const RationalVector pi = Multipliers();
      int entering = -1;
      for (int j = 0; j < d_; ++j) {
        if (is_basic_[j]) continue;
        reduced = Cost(j) - RowDot(pi, j);
        if (reduced < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;
      RationalVector alpha = Alpha(entering);
      int leave = -1;
      Rational best;
      for (int r = 0; r < m_; ++r) {
        if (alpha[r] <= 0) continue;
        Rational ratio = xb_[r] / alpha[r];
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      Pivot(leave, entering, alpha);
    }
  }

  void Pivot(int r, int j, const RationalVector& alpha) {
    const Rational p = alpha[r];
    for (int i = 0; i < m_; ++i) {
      if (binv_[r][i] != 0) binv_[r][i] /= p;
    }
    xb_[r] /= p;
    for (int s = 0; s < m_; ++s) {
      if (s == r || alpha[s] == 0) continue;
      const Rational& f = alpha[s];
      for (int i = 0; i < m_; ++i) {
        if (binv_[r][i] != 0) binv_[s][i] -= f * binv_[r][i];
      }
      if (xb_[r] != 0) xb_[s] -= f * xb_[r];
    }
    is_basic_[basis_[r]] = 0;
    basis_[r] = j;
    is_basic_[j] = 1;
    ++pivots_;
  }

  const StandardFormLP& lp_;
  const int m_;
  const int d_;
  int phase_ = 2;
  int pivots_ = 0;
  std::vector<char> is_basic_;
  std::vector<int> basis_;
  std::vector<int> sign_ = std::vector<int>(m_, 1);
  std::vector<RationalVector> binv_;
  RationalVector xb_;
};

}  // namespace

LPSolution SolveStandardForm(const StandardFormLP& lp, const SolveOptions& options) {
  if (static_cast<int>(lp.b.size()) != lp.rows || lp.c.size() != lp.columns.size()) {
    throw InvalidArgument("inconsistent LP dimensions");
  }
  LPSolution out;
  Simplex simplex(lp);
  bool warm = options.initial_basis && simplex.TryWarmStart(*options.initial_basis);
  if (!warm) {
    out.used_phase_one = true;
    if (!simplex.PhaseOne()) {
      out.status = LPStatus::kInfeasible;
      out.pivots = simplex.pivots();
      return out;
    }
  }
  const bool bounded = simplex.PhaseTwo();
  out.pivots = simplex.pivots();
  out.status = bounded ? LPStatus::kOptimal : LPStatus::kUnbounded;
  simplex.Extract(out);
  return out;
}

std::optional<BasisFactor> BasisFactor::Factor(const StandardFormLP& lp,
                                               std::span<const int> basis) {
  const int m = lp.rows;
  if (static_cast<int>(basis.size()) != m) return std::nullopt;
  std::vector<RationalVector> b(m, RationalVector(m, 0));
  for (int r = 0; r < m; ++r) {
    if (basis[r] < 0 || basis[r] >= lp.cols()) return std::nullopt;
    for (const SparseEntry& e : lp.columns[basis[r]]) b[e.row][r] = e.value;
  }
  auto inv = Invert(std::move(b));
  if (!inv) return std::nullopt;
  BasisFactor f;
  f.basis_.assign(basis.begin(), basis.end());
  f.inverse_ = std::move(*inv);
  return f;
}

RationalVector BasisFactor::Solve(std::span<const Rational> rhs) const {
  const int m = static_cast<int>(inverse_.size());
  RationalVector out(m, 0);
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i < m; ++i) {
      if (inverse_[r][i] != 0 && rhs[i] != 0) out[r] += inverse_[r][i] * rhs[i];
    }
  }
  return out;
}

RationalVector BasisFactor::Duals(std::span<const Rational> c) const {
  const int m = static_cast<int>(inverse_.size());
  RationalVector pi(m, 0);
  for (int r = 0; r < m; ++r) {
    const Rational& cb = c[basis_[r]];
    if (cb == 0) continue;
    for (int i = 0; i < m; ++i) {
      if (inverse_[r][i] != 0) pi[i] += cb * inverse_[r][i];
    }
  }
  return pi;
}

RationalVector SolveLinearSystem(std::vector<RationalVector> a, RationalVector rhs) {
  const int m = static_cast<int>(a.size());
  if (static_cast<int>(rhs.size()) != m) throw InvalidArgument("right-hand side length mismatch");
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularSystem("singular linear system (column " + std::to_string(col) + ")");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = col + 1; r < m; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int j = col; j < m; ++j) a[r][j] -= f * a[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  RationalVector x(m);
  for (int r = m - 1; r >= 0; --r) {
    Rational acc = rhs[r];
    for (int j = r + 1; j < m; ++j) acc -= a[r][j] * x[j];
    x[r] = acc / a[r][r];
  }
  return x;
}

StandardFormLP BuildRestrictedDual(const ConstraintFamily& family,
                                   std::span<const Rational> f_values,
                                   std::span<const Rational> w) {
  const int n = family.ordering.size();
  if (static_cast<int>(w.size()) != n) throw InvalidArgument("weight vector length mismatch");
  if (static_cast<int>(f_values.size()) != family.size()) {
    throw InvalidArgument("one function value per family member expected");
  }
  StandardFormLP lp;
  lp.rows = n;
  lp.b.assign(w.begin(), w.end());
  lp.columns.reserve(family.size());
  lp.c.reserve(family.size());
  for (int j = 0; j < family.size(); ++j) {
    SparseColumn col;
    const Mask t = family.members[j];
    for (int i = 0; i < n; ++i) {
      if (t >> i & 1) col.push_back({i, 1});
    }
    lp.columns.push_back(std::move(col));
    lp.c.push_back(f_values[j]);
  }
  return lp;
}

RationalVector PrimalFromDualBasis(const ConstraintFamily& family, const SetFunction& f,
                                   std::span<const int> basis) {
  const int n = family.ordering.size();
  if (static_cast<int>(basis.size()) != n) {
    throw SingularSystem("basis has " + std::to_string(basis.size()) + " members, expected " +
                         std::to_string(n));
  }
  std::vector<RationalVector> a(n, RationalVector(n, 0));
  RationalVector rhs(n);
  for (int r = 0; r < n; ++r) {
    if (basis[r] < 0 || basis[r] >= family.size()) throw InvalidArgument("basis index out of range");
    const Mask t = family.members[basis[r]];
    for (int i = 0; i < n; ++i) {
      if (t >> i & 1) a[r][i] = 1;
    }
    rhs[r] = f(t);
  }
  return SolveLinearSystem(std::move(a), std::move(rhs));
}

}  // namespace kdsm
