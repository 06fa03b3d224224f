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

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "charp/random.hpp"

namespace charp::ff {

/// Packed element of GF(p^k): the integer sum c_i p^i of the coefficients of
/// its representative polynomial in t. Zero packs to 0 and one to 1, and two
/// elements of the same field are equal iff their packed values are equal.
using Elem = std::uint64_t;

/// GF(p^k) presented as F_p[t]/(modulus).
struct FieldDescriptor {
  std::uint64_t p = 2;
  unsigned k = 1;
  /// Monic, low-to-high coefficients, size k + 1. Empty when k == 1.
  std::vector<std::uint64_t> modulus;

  bool operator==(const FieldDescriptor&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest p^k representable by the packed element encoding.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 62;

/// Immutable finite field. Instances are interned: two fields with the same
/// descriptor are the same object, so pointer equality is field equality.
class Field {
 public:
  enum class Kind { kPrime, kTable, kGeneric };

  /// Validates and interns. Throws UsageError when p is not prime, the
  /// modulus is not monic irreducible of degree k, or p^k is too large.
  static FieldPtr make(const FieldDescriptor& d);
  static FieldPtr prime(std::uint64_t p);
  /// GF(p^k) with a canonical modulus (seeded irreducible search, so every
  /// caller asking for the same (p, k) shares one field).
  static FieldPtr extension(std::uint64_t p, unsigned k);
  /// True when p^k fits the packed encoding.
  static bool representable(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const { return desc_.p; }
  unsigned degree() const { return desc_.k; }
  std::uint64_t order() const { return q_; }
  const FieldDescriptor& descriptor() const { return desc_; }
  Kind kind() const { return kind_; }
  bool is_prime() const { return desc_.k == 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const {
    if (kind_ == Kind::kPrime) {
      Elem s = a + b;
      return s >= desc_.p ? s - desc_.p : s;
    }
    if (desc_.p == 2) return a ^ b;
    return kind_ == Kind::kTable ? add_table(a, b) : add_digits(a, b);
  }
  Elem neg(Elem a) const {
    if (a == 0 || desc_.p == 2) return a;
    if (kind_ == Kind::kPrime) return desc_.p - a;
    return neg_digits(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (kind_ == Kind::kPrime) {
      return static_cast<Elem>(
          (static_cast<unsigned __int128>(a) * b) % desc_.p);
    }
    if (a == 0 || b == 0) return 0;
    if (kind_ == Kind::kTable) return exp_[log_[a] + log_[b]];
    return mul_generic(a, b);
  }
  /// Throws DivisionByZero on a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;
  /// Packs k residues (low-to-high). Throws UsageError on bad input.
  Elem from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> to_coeffs(Elem a) const;
  /// The class of t (a field generator over F_p); 1 has no meaning here.
  Elem gen() const { return desc_.k == 1 ? 0 : desc_.p; }

  Elem frobenius(Elem a) const { return pow(a, desc_.p); }
  /// Unique b with b^p == a.
  Elem pth_root(Elem a) const;
  Elem random(Rng& rng) const { return uniform_below(rng, q_); }
  bool valid(Elem a) const { return a < q_; }

  /// Element literal: residue for prime fields, "[c0,c1,...]" otherwise.
  std::string format(Elem a) const;
  /// "GF(p)" or "GF(p^k; modulus)".
  std::string name() const;
  /// Modulus as text in t, highest degree first.
  std::string modulus_string() const;

  explicit Field(const FieldDescriptor& d);  // use make()

 private:
  Elem add_table(Elem a, Elem b) const;
  Elem add_digits(Elem a, Elem b) const;
  Elem neg_digits(Elem a) const;
  Elem mul_generic(Elem a, Elem b) const;
  Elem mul_binary(Elem a, Elem b) const;
  void build_tables();

  FieldDescriptor desc_;
  std::uint64_t q_ = 0;
  Kind kind_ = Kind::kPrime;
  // Table fields: packed element -> discrete log, log -> element (doubled
  // so that log a + log b needs no reduction), Zech logarithms.
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  std::vector<std::int64_t> zech_;
  std::uint32_t half_order_ = 0;
  std::uint64_t binary_modulus_ = 0;  // p == 2: modulus bits without t^k
};

/// Field-tagged element value for API boundaries and tests. Hot loops use
/// Field methods on raw Elem values instead.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);
  static FieldElement from_coeffs(FieldPtr field,
                                  std::span<const std::uint64_t> coeffs);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<std::uint64_t> coeffs() const { return field_->to_coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inverse() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
  FieldElement frobenius() const { return {field_, field_->frobenius(value_)}; }
  FieldElement pth_root() const { return {field_, field_->pth_root(value_)}; }
  bool operator==(const FieldElement& o) const;
  std::string to_string() const { return field_->format(value_); }

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr field_;
  Elem value_;
};

bool is_prime(std::uint64_t n);

/// Parses "GF(3)", "GF(2^4)", "GF(2^4; t^4+t+1)".
FieldPtr parse_field(const std::string& text);
/// Parses "[1,0,2]" (low-to-high residues) or a plain integer.
Elem parse_element(const Field& field, const std::string& text);
/// Parses a univariate polynomial in t over F_p, low-to-high coefficients.
std::vector<std::uint64_t> parse_univariate_mod_p(const std::string& text,
                                                  std::uint64_t p);

}  // namespace charp::ff
