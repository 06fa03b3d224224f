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


#pragma once

#include <memory>
#include <string>
#include <vector>

#include "charp/ff/field.hpp"
#include "charp/poly/monomial.hpp"

namespace charp::poly {

using ff::Elem;
using ff::FieldPtr;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring over a finite field: ordered variable names plus a
/// monomial order. Immutable.
class Ring {
 public:
  Ring(FieldPtr field, std::vector<std::string> names, MonomialOrder order);
  static RingPtr make(FieldPtr field, std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex());
  /// Variables prefix0, prefix1, ...
  static RingPtr standard(FieldPtr field, unsigned n, const std::string& prefix = "x",
                          MonomialOrder order = MonomialOrder::grevlex());

  const FieldPtr& field() const { return field_; }
  const ff::Field& f() const { return *field_; }
  unsigned nvars() const { return static_cast<unsigned>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  /// -1 when absent.
  int index_of(const std::string& name) const;

  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_field(FieldPtr field) const;

  /// Same field, variables and order.
  bool same_as(const Ring& o) const;

  /// Three-way comparison: >0 when a is larger.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (order_.kind) {
      case MonomialOrder::Kind::kGrevlex:
        return grevlex(a, b, 0, n_);
      case MonomialOrder::Kind::kLex:
        for (unsigned r = 0; r < n_; ++r) {
          const unsigned i = rank_[r];
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      case MonomialOrder::Kind::kBlock: {
        const int c = grevlex(a, b, 0, order_.block);
        return c ? c : grevlex(a, b, order_.block, n_);
      }
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string format(const Monomial& m) const;

 private:
  int grevlex(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) const {
    if (lo == 0 && hi == n_ && identity_) {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      // Packed words compare the highest variable first.
      if (a.word(1) != b.word(1)) return a.word(1) < b.word(1) ? 1 : -1;
      if (a.word(0) != b.word(0)) return a.word(0) < b.word(0) ? 1 : -1;
      return 0;
    } else {
      unsigned da = 0, db = 0;
      for (unsigned r = lo; r < hi; ++r) {
        da += a[rank_[r]];
        db += b[rank_[r]];
      }
      if (da != db) return da > db ? 1 : -1;
    }
    for (unsigned r = hi; r-- > lo;) {
      const unsigned i = rank_[r];
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  FieldPtr field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  unsigned n_;
  std::array<unsigned, kMaxVars> rank_{};
  bool identity_ = true;
};

}  // namespace charp::poly
