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

#include <span>
#include <string>
#include <vector>

#include "charp/poly/ring.hpp"

namespace charp::poly {

struct Term {
  Monomial m;
  Elem c;
};

/// Sparse polynomial; terms strictly decreasing in the ring order, no zero
/// coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Sorts, merges equal monomials and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, Elem c);
  static Polynomial variable(RingPtr ring, unsigned i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Elem c = 1);
  /// Trusts that terms are already canonical.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const ff::Field& field() const { return ring_->f(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  const Monomial& lead_monomial() const { return terms_.front().m; }
  Elem lead_coeff() const { return terms_.front().c; }
  unsigned total_degree() const;
  bool is_homogeneous() const;
  /// Coefficient of m (0 when absent).
  Elem coeff(const Monomial& m) const;
  /// True when no term involves variable i.
  bool free_of(unsigned i) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(Elem c) const;
  Polynomial mul_term(const Monomial& m, Elem c) const;
  /// Exact division by a monomial; UsageError if some term is not divisible.
  Polynomial divide_by_monomial(const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;
  bool operator==(const Polynomial& o) const;

  /// *this - c * m * g without building the intermediate product.
  Polynomial sub_mul(Elem c, const Monomial& m, const Polynomial& g) const;

  Elem evaluate(std::span<const Elem> point) const;
  /// Replaces x_i by images[i]; all images share one ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// Same polynomial read in another ring over the same field: variable i
  /// goes to var_map[i] (or must be absent when var_map[i] < 0).
  Polynomial in_ring(const RingPtr& target, std::span<const int> var_map) const;
  /// Same variables, re-sorted for the target ring's order.
  Polynomial reordered(const RingPtr& target) const;
  /// Coefficients pushed through the field embedding into target's field.
  Polynomial extend_scalars(const RingPtr& target) const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses the text grammar: + - * ^, parentheses, integers, bracketed field
/// elements and the ring's variable names.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace charp::poly
