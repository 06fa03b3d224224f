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

#include "charp/ff/upoly.hpp"

#include <sstream>

#include "charp/error.hpp"

namespace charp::ff {

UPoly::UPoly(FieldPtr field) : field_(std::move(field)) {}

UPoly::UPoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

UPoly UPoly::constant(FieldPtr field, Elem c) {
  return UPoly(std::move(field), std::vector<Elem>{c});
}

UPoly UPoly::monomial(FieldPtr field, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return UPoly(std::move(field), std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scaled(field_->inv(lead()));
}

UPoly UPoly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
  return UPoly(field_, std::move(v));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(field_);
  std::vector<Elem> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(
                                      i % field_->characteristic())));
  }
  return UPoly(field_, std::move(v));
}

Elem UPoly::eval(Elem x) const {
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  if (field_ != o.field_) throw UsageError("univariate field mismatch");
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->add(coeff(i), o.coeff(i));
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const {
  if (field_ != o.field_) throw UsageError("univariate field mismatch");
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->sub(coeff(i), o.coeff(i));
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator-() const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->neg(c_[i]);
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (field_ != o.field_) throw UsageError("univariate field mismatch");
  if (is_zero() || o.is_zero()) return UPoly(field_);
  std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
  const Field& f = *field_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      v[i + j] = f.add(v[i + j], f.mul(c_[i], o.c_[j]));
    }
  }
  return UPoly(field_, std::move(v));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.field_ != b.field_) throw UsageError("univariate field mismatch");
  const Field& f = *a.field_;
  std::vector<Elem> rem = a.c_;
  const int db = b.degree();
  if (a.degree() < db) {
    q = UPoly(a.field_);
    r = a;
    return;
  }
  std::vector<Elem> quo(a.degree() - db + 1, 0);
  const Elem inv_lead = f.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    const Elem c = rem[i];
    if (!c) continue;
    const Elem factor = f.mul(c, inv_lead);
    quo[i - db] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(factor, b.c_[j]));
    }
  }
  rem.resize(db);
  q = UPoly(a.field_, std::move(quo));
  r = UPoly(a.field_, std::move(rem));
}

UPoly UPoly::operator/(const UPoly& o) const {
  UPoly q(field_), r(field_);
  divmod(*this, o, q, r);
  return q;
}

UPoly UPoly::operator%(const UPoly& o) const {
  UPoly q(field_), r(field_);
  divmod(*this, o, q, r);
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i] == 1;
    if (!unit || i == 0) {
      os << field_->format(c_[i]);
      if (i > 0) os << '*';
    }
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return (a * b) % m; }

UPoly powmod(const UPoly& a, std::uint64_t e, const UPoly& m) {
  UPoly result = UPoly::constant(a.field(), 1) % m;
  UPoly base = a % m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return result;
}

UPoly frobenius_power_mod(const UPoly& a, unsigned i, const UPoly& m) {
  UPoly r = a % m;
  const std::uint64_t q = a.field()->order();
  for (unsigned j = 0; j < i; ++j) r = powmod(r, q, m);
  return r;
}

bool is_irreducible(const UPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const UPoly g = f.monic();
  const UPoly x = UPoly::x(f.field());
  if (!(frobenius_power_mod(x, static_cast<unsigned>(n), g) == x % g)) return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r) continue;
    while (m % r == 0) m /= r;
    const UPoly h = frobenius_power_mod(x, static_cast<unsigned>(n / r), g) - x;
    if (!gcd(h, g).is_one()) return false;
  }
  return true;
}

std::vector<std::uint64_t> random_irreducible(std::uint64_t p, unsigned k,
                                              std::uint64_t seed) {
  if (k == 0) throw UsageError("irreducible polynomial degree must be >= 1");
  auto fp = Field::prime(p);
  Rng rng(seed);
  const unsigned cap = 64 * k;
  for (unsigned trial = 0; trial < cap; ++trial) {
    std::vector<Elem> c(k + 1, 0);
    for (unsigned i = 0; i < k; ++i) c[i] = uniform_below(rng, p);
    c[k] = 1;
    if (k > 1 && c[0] == 0) continue;
    UPoly f(fp, c);
    if (is_irreducible(f)) return {c.begin(), c.end()};
  }
  throw InternalError("random_irreducible: no irreducible polynomial of degree " +
                      std::to_string(k) + " over F_" + std::to_string(p) +
                      " after " + std::to_string(cap) + " trials");
}

}  // namespace charp::ff
