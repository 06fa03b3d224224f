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
#include <string>
#include <vector>

#include "charp/ff/field.hpp"

namespace charp::ff {

/// Dense univariate polynomial over a finite field, coefficients low-to-high
/// with no trailing zeros (the zero polynomial has no coefficients).
class UPoly {
 public:
  explicit UPoly(FieldPtr field);
  UPoly(FieldPtr field, std::vector<Elem> coeffs);

  static UPoly constant(FieldPtr field, Elem c);
  static UPoly monomial(FieldPtr field, Elem c, std::size_t degree);
  static UPoly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }

  UPoly monic() const;
  UPoly derivative() const;
  UPoly scaled(Elem c) const;
  Elem eval(Elem x) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  UPoly operator/(const UPoly& o) const;
  UPoly operator%(const UPoly& o) const;
  bool operator==(const UPoly& o) const { return field_ == o.field_ && c_ == o.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Monic gcd (zero if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m);
UPoly powmod(const UPoly& a, std::uint64_t e, const UPoly& m);
/// a^(q^i) mod m by repeated q-th powering.
UPoly frobenius_power_mod(const UPoly& a, unsigned i, const UPoly& m);

/// Rabin's test over the coefficient field.
bool is_irreducible(const UPoly& f);

/// Monic irreducible polynomial of degree k over F_p (low-to-high residues),
/// drawn by seeded rejection sampling. Throws InternalError after 64*k
/// unsuccessful draws.
std::vector<std::uint64_t> random_irreducible(std::uint64_t p, unsigned k,
                                              std::uint64_t seed);

}  // namespace charp::ff
