// Copyright 2026 The charp Authors.
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


#include "charp/ff/embed.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "charp/error.hpp"
#include "charp/ff/upoly.hpp"
#include "charp/zerodim/factor.hpp"

namespace charp::ff {

Embedding::Embedding(FieldPtr source, FieldPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_->characteristic() != target_->characteristic() ||
      target_->degree() % source_->degree() != 0) {
    throw UsageError("cannot embed " + source_->name() + " into " + target_->name());
  }
  const unsigned k = source_->degree();
  if (k == 1) return;
  if (source_ == target_) {
    theta_ = source_->gen();
  } else {
    std::vector<Elem> c;
    for (auto v : source_->descriptor().modulus) {
      c.push_back(target_->from_int(static_cast<std::int64_t>(v)));
    }
    const auto r = zerodim::roots(UPoly(target_, std::move(c)));
    if (r.empty()) throw InternalError("no root of the source modulus in the target field");
    theta_ = r.front();
  }
  init_powers();
}

Embedding::Embedding(FieldPtr source, FieldPtr target, Elem theta)
    : source_(std::move(source)), target_(std::move(target)), theta_(theta) {
  if (source_->characteristic() != target_->characteristic() ||
      target_->degree() % source_->degree() != 0) {
    throw UsageError("cannot embed " + source_->name() + " into " + target_->name());
  }
  if (source_->degree() == 1) return;
  Elem v = 0;
  const auto& mod = source_->descriptor().modulus;
  for (std::size_t i = mod.size(); i-- > 0;) {
    v = target_->add(target_->mul(v, theta_), target_->from_int(static_cast<std::int64_t>(mod[i])));
  }
  if (v != 0) throw UsageError("embedding image is not a root of the source modulus");
  init_powers();
}

void Embedding::init_powers() {
  const unsigned k = source_->degree();
  powers_.resize(k);
  powers_[0] = 1;
  for (unsigned i = 1; i < k; ++i) powers_[i] = target_->mul(powers_[i - 1], theta_);
}

Elem Embedding::apply(Elem a) const {
  if (source_ == target_ && theta_ == source_->gen()) return a;
  if (source_->degree() == 1) return target_->from_int(static_cast<std::int64_t>(a));
  const auto digits = source_->to_coeffs(a);
  Elem r = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!digits[i]) continue;
    r = target_->add(r, target_->mul(target_->from_int(static_cast<std::int64_t>(digits[i])),
                                     powers_[i]));
  }
  return r;
}

const Embedding& embedding(const FieldPtr& source, const FieldPtr& target) {
  static std::mutex mu;
  static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{source.get(), target.get()}];
  if (!slot) slot = std::make_unique<Embedding>(source, target);
  return *slot;
}

Elem embed(Elem a, const FieldPtr& source, const FieldPtr& target) {
  return embedding(source, target).apply(a);
}

FieldElement embed(const FieldElement& a, const FieldPtr& target) {
  return {target, embed(a.value(), a.field(), target)};
}

}  // namespace charp::ff
