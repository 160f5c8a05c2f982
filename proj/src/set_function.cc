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

#include "kdsm/set_function.h"

#include <mutex>
#include <set>
#include <unordered_map>
#include <utility>
#include <variant>

#include "kdsm/errors.h"

namespace kdsm {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw InvalidArgument("ground set size must be in [1, " +
                          std::to_string(kMaxGroundSize) + "], got " + std::to_string(n));
  }
}

GroundSet::GroundSet(int n, std::vector<std::string> labels) : GroundSet(n) {
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n) {
      throw InvalidArgument("expected " + std::to_string(n) + " labels, got " +
                            std::to_string(labels.size()));
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n) throw InvalidArgument("labels must be distinct");
  }
  labels_ = std::move(labels);
}

std::string GroundSet::Label(int i) const {
  if (!labels_.empty()) return labels_[i];
  if (n_ <= 26) return std::string(1, static_cast<char>('a' + i));
  return "s" + std::to_string(i + 1);
}

std::vector<std::string> GroundSet::Render(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < n_; ++i) {
    if (m >> i & 1) out.push_back(Label(i));
  }
  return out;
}

namespace {

struct DenseBacking {
  RationalVector values;
};

struct EvaluatorBacking {
  SetFunction::Evaluator eval;
  std::size_t memo_budget;
  Integer scale;
  mutable std::mutex mu;
  mutable std::unordered_map<Mask, Rational> memo;
};

}  // namespace

struct SetFunction::Impl {
  GroundSet ground;
  int k;
  // Exactly one of the three backings is used.
  std::shared_ptr<const DenseBacking> dense;
  std::shared_ptr<const EvaluatorBacking> evaluator;
  struct Shift {
    std::shared_ptr<const Impl> base;
    Rational constant;
    Rational nonempty;
    RationalVector x;  // empty means no modular part
  };
  std::shared_ptr<const Shift> shift;

  Rational Eval(Mask m) const {
    if (dense) return dense->values[m];
    if (evaluator) {
      const EvaluatorBacking& e = *evaluator;
      if (e.memo_budget == 0) return e.eval(m);
      {
        std::lock_guard<std::mutex> lock(e.mu);
        auto it = e.memo.find(m);
        if (it != e.memo.end()) return it->second;
      }
      Rational v = e.eval(m);
      std::lock_guard<std::mutex> lock(e.mu);
      if (e.memo.size() < e.memo_budget) e.memo.emplace(m, v);
      return v;
    }
    Rational v = shift->base->Eval(m);
    v += shift->constant;
    if (m != 0) v += shift->nonempty;
    if (!shift->x.empty()) v -= SumOver(shift->x, m);
    return v;
  }

  Integer Scale() const {
    if (dense) return DenominatorLcm(dense->values);
    if (evaluator) return evaluator->scale;
    Integer s = shift->base->Scale();
    RationalVector parts = shift->x;
    parts.push_back(shift->constant);
    parts.push_back(shift->nonempty);
    Integer d = DenominatorLcm(parts);
    mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
    return s;
  }
};

namespace {

void CheckK(const GroundSet& ground, int k) {
  if (k < 2 || k > ground.size()) {
    throw InvalidArgument("distance parameter k=" + std::to_string(k) +
                          " must satisfy 2 <= k <= n=" + std::to_string(ground.size()));
  }
}

}  // namespace

SetFunction SetFunction::Dense(GroundSet ground, int k, RationalVector values) {
  if (ground.size() > kMaxDenseSize) {
    throw InstanceTooLarge("dense tables are limited to n <= " + std::to_string(kMaxDenseSize));
  }
  CheckK(ground, k);
  if (values.size() != (std::size_t{1} << ground.size())) {
    throw InvalidArgument("value table has " + std::to_string(values.size()) +
                          " entries, expected 2^" + std::to_string(ground.size()));
  }
  for (Rational& v : values) v.canonicalize();
  auto impl = std::make_shared<Impl>(Impl{std::move(ground), k, nullptr, nullptr, nullptr});
  impl->dense = std::make_shared<DenseBacking>(DenseBacking{std::move(values)});
  return SetFunction(std::move(impl));
}

SetFunction SetFunction::FromEvaluator(GroundSet ground, int k, Evaluator eval,
                                       EvaluatorOptions options) {
  CheckK(ground, k);
  if (options.value_scale <= 0) throw InvalidArgument("value scale must be positive");
  auto backing = std::make_shared<EvaluatorBacking>();
  backing->eval = std::move(eval);
  backing->memo_budget = options.memo_budget;
  backing->scale = options.value_scale;
  auto impl = std::make_shared<Impl>(Impl{std::move(ground), k, nullptr, nullptr, nullptr});
  impl->evaluator = std::move(backing);
  return SetFunction(std::move(impl));
}

const GroundSet& SetFunction::ground() const { return impl_->ground; }
int SetFunction::k() const { return impl_->k; }
Rational SetFunction::operator()(Mask x) const { return impl_->Eval(x); }
bool SetFunction::is_dense() const { return impl_->dense != nullptr; }
Integer SetFunction::ValueScale() const { return impl_->Scale(); }

SetFunction SetFunction::WithK(int k) const {
  CheckK(impl_->ground, k);
  auto impl = std::make_shared<Impl>(*impl_);
  impl->k = k;
  return SetFunction(std::move(impl));
}

RationalVector SetFunction::Table() const {
  if (n() > kMaxDenseSize) {
    throw InstanceTooLarge("cannot materialize 2^" + std::to_string(n()) + " values");
  }
  if (impl_->dense) return impl_->dense->values;
  const Mask count = Mask{1} << n();
  RationalVector out(count);
  if (impl_->shift && impl_->shift->base->dense) {
    const Impl::Shift& s = *impl_->shift;
    const RationalVector& base = s.base->dense->values;
    for (Mask m = 0; m < count; ++m) {
      out[m] = base[m] + s.constant;
      if (m != 0) out[m] += s.nonempty;
      if (!s.x.empty()) out[m] -= SumOver(s.x, m);
    }
    return out;
  }
  for (Mask m = 0; m < count; ++m) out[m] = impl_->Eval(m);
  return out;
}

SetFunction SetFunction::Materialize() const {
  if (is_dense()) return *this;
  return Dense(ground(), k(), Table());
}

SetFunction SetFunction::Shifted(const Rational& constant, const Rational& nonempty,
                                 std::span<const Rational> x) const {
  if (!x.empty() && static_cast<int>(x.size()) != n()) {
    throw InvalidArgument("modular vector has " + std::to_string(x.size()) +
                          " entries, expected " + std::to_string(n()));
  }
  auto shift = std::make_shared<Impl::Shift>();
  std::shared_ptr<const Impl> base = impl_;
  shift->constant = constant;
  shift->nonempty = nonempty;
  shift->x.assign(x.begin(), x.end());
  if (impl_->shift) {
    const Impl::Shift& inner = *impl_->shift;
    base = inner.base;
    shift->constant += inner.constant;
    shift->nonempty += inner.nonempty;
    if (!inner.x.empty()) {
      if (shift->x.empty()) {
        shift->x = inner.x;
      } else {
        for (int i = 0; i < n(); ++i) shift->x[i] += inner.x[i];
      }
    }
  }
  shift->base = std::move(base);
  auto impl = std::make_shared<Impl>(Impl{impl_->ground, impl_->k, nullptr, nullptr, nullptr});
  impl->shift = std::move(shift);
  return SetFunction(std::move(impl));
}

}  // namespace kdsm
