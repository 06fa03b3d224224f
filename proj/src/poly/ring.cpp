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


#include "charp/poly/ring.hpp"

#include <algorithm>
#include <set>

#include "charp/error.hpp"

namespace charp::poly {

Ring::Ring(FieldPtr field, std::vector<std::string> names, MonomialOrder order)
    : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {
  if (names_.size() > kMaxVars) {
    throw UsageError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  n_ = static_cast<unsigned>(names_.size());
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size()) {
    throw UsageError("duplicate variable names");
  }
  if (order_.perm.empty()) {
    for (unsigned i = 0; i < n_; ++i) rank_[i] = i;
  } else {
    if (order_.perm.size() != n_) throw UsageError("order permutation has the wrong length");
    std::vector<unsigned> sorted = order_.perm;
    std::sort(sorted.begin(), sorted.end());
    for (unsigned i = 0; i < n_; ++i) {
      if (sorted[i] != i) throw UsageError("order permutation is not a permutation");
      rank_[i] = order_.perm[i];
      if (rank_[i] != i) identity_ = false;
    }
  }
  if (order_.kind == MonomialOrder::Kind::kBlock && order_.block > n_) {
    throw UsageError("elimination block larger than the variable count");
  }
}

RingPtr Ring::make(FieldPtr field, std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(field), std::move(names), std::move(order));
}

RingPtr Ring::standard(FieldPtr field, unsigned n, const std::string& prefix,
                       MonomialOrder order) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(field), std::move(names), std::move(order));
}

int Ring::index_of(const std::string& name) const {
  for (unsigned i = 0; i < n_; ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

RingPtr Ring::with_order(MonomialOrder order) const {
  return make(field_, names_, std::move(order));
}

RingPtr Ring::with_field(FieldPtr field) const { return make(std::move(field), names_, order_); }

bool Ring::same_as(const Ring& o) const {
  return this == &o ||
         (field_ == o.field_ && names_ == o.names_ && order_ == o.order_);
}

std::string Ring::format(const Monomial& m) const {
  std::string s;
  for (unsigned i = 0; i < n_; ++i) {
    const unsigned e = m[i];
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += names_[i];
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

}  // namespace charp::poly
