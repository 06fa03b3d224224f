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


#include "charp/poly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "charp/error.hpp"
#include "charp/ff/embed.hpp"

namespace charp::poly {

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, Elem c) {
  return monomial(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::variable(RingPtr ring, unsigned i) {
  if (i >= ring->nvars()) throw UsageError("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(i), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Elem c) {
  Polynomial p(std::move(ring));
  if (c) p.terms_.push_back({m, c});
  return p;
}

void Polynomial::normalize() {
  const Ring& r = *ring_;
  std::sort(terms_.begin(), terms_.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.m, b.m) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Term t = terms_[i];
    std::size_t j = i + 1;
    while (j < terms_.size() && terms_[j].m == t.m) {
      t.c = r.f().add(t.c, terms_[j].c);
      ++j;
    }
    if (t.c) terms_[out++] = t;
    i = j;
  }
  terms_.resize(out);
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!ring_->same_as(*o.ring_)) throw UsageError("polynomials live in different rings");
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.m.degree() != terms_.front().m.degree()) return false;
  }
  return true;
}

Elem Polynomial::coeff(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.m == m) return t.c;
  }
  return 0;
}

bool Polynomial::free_of(unsigned i) const {
  for (const auto& t : terms_) {
    if (t.m[i]) return false;
  }
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  return sub_mul(field().neg(1), Monomial(), o);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(o);
  return sub_mul(1, Monomial(), o);
}

Polynomial Polynomial::operator-() const { return scaled(field().neg(1)); }

Polynomial Polynomial::sub_mul(Elem c, const Monomial& m, const Polynomial& g) const {
  const Ring& r = *ring_;
  const ff::Field& f = r.f();
  if (c == 0 || g.is_zero()) return *this;
  const Elem nc = f.neg(c);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const bool shift = !m.is_one();
  while (i < terms_.size() && j < g.terms_.size()) {
    const Monomial gm = shift ? g.terms_[j].m * m : g.terms_[j].m;
    const int cmp = r.compare(terms_[i].m, gm);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, f.mul(nc, g.terms_[j++].c)});
    } else {
      const Elem v = f.add(terms_[i].c, f.mul(nc, g.terms_[j].c));
      if (v) out.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) out.push_back(terms_[i++]);
  while (j < g.terms_.size()) {
    const Monomial gm = shift ? g.terms_[j].m * m : g.terms_[j].m;
    out.push_back({gm, f.mul(nc, g.terms_[j++].c)});
  }
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const ff::Field& f = field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({a.m * b.m, f.mul(a.c, b.c)});
  }
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(Elem c) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  const ff::Field& f = field();
  for (auto& t : out) t.c = f.mul(t.c, c);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& m, Elem c) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  const ff::Field& f = field();
  for (auto& t : out) {
    t.m = t.m * m;
    t.c = f.mul(t.c, c);
  }
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::divide_by_monomial(const Monomial& m) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    if (!m.divides(t.m)) throw UsageError("polynomial is not divisible by the monomial");
    t.m = t.m / m;
  }
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead_coeff() == 1) return *this;
  return scaled(field().inv(lead_coeff()));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->same_as(*o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  }
  return true;
}

Elem Polynomial::evaluate(std::span<const Elem> point) const {
  const ff::Field& f = field();
  const unsigned n = ring_->nvars();
  if (point.size() != n) throw UsageError("evaluation point has the wrong length");
  Elem sum = 0;
  for (const auto& t : terms_) {
    Elem v = t.c;
    for (unsigned i = 0; i < n && v; ++i) {
      if (t.m[i]) v = f.mul(v, f.pow(point[i], t.m[i]));
    }
    sum = f.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  const unsigned n = ring_->nvars();
  if (images.size() != n) throw UsageError("substitution has the wrong number of images");
  if (n == 0) return *this;
  const RingPtr& target = images[0].ring();
  for (const auto& im : images) {
    if (!im.ring()->same_as(*target)) throw UsageError("substitution images in different rings");
    if (im.ring()->field() != ring_->field()) throw UsageError("substitution changes the field");
  }
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(n);
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.c);
    for (unsigned i = 0; i < n; ++i) {
      const unsigned e = t.m[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      term = term * pw[e];
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::in_ring(const RingPtr& target, std::span<const int> var_map) const {
  if (target->field() != ring_->field()) throw UsageError("in_ring changes the field");
  if (var_map.size() != ring_->nvars()) throw UsageError("variable map has the wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (unsigned i = 0; i < ring_->nvars(); ++i) {
      const unsigned e = t.m[i];
      if (!e) continue;
      if (var_map[i] < 0) throw UsageError("polynomial uses a variable that is dropped");
      m.set(static_cast<unsigned>(var_map[i]), m[static_cast<unsigned>(var_map[i])] + e);
    }
    out.push_back({m, t.c});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::reordered(const RingPtr& target) const {
  if (target->field() != ring_->field() || target->names() != ring_->names()) {
    throw UsageError("reordered: incompatible ring");
  }
  return Polynomial(target, terms_);
}

Polynomial Polynomial::extend_scalars(const RingPtr& target) const {
  if (target->names() != ring_->names()) throw UsageError("extend_scalars: variables differ");
  const auto& emb = ff::embedding(ring_->field(), target->field());
  std::vector<Term> out = terms_;
  for (auto& t : out) t.c = emb.apply(t.c);
  return Polynomial(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    if (t.m.is_one()) {
      s += field().format(t.c);
    } else if (t.c == 1) {
      s += ring_->format(t.m);
    } else {
      s += field().format(t.c) + "*" + ring_->format(t.m);
    }
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg +
                     " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      skip();
      bool negative = false;
      if (accept('+')) {
      } else if (accept('-')) {
        negative = true;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negative ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      const std::uint64_t e = number();
      if (e > kMaxExponent) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  std::uint64_t number() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected a number");
    }
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) fail("number too large");
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
    }
    return v;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = number() % ring_->field()->characteristic();
      return Polynomial::constant(ring_, ring_->f().from_int(static_cast<std::int64_t>(v)));
    }
    if (c == '[') {
      const std::size_t end = s_.find(']', pos_);
      if (end == std::string::npos) fail("unterminated element literal");
      const Elem e = ff::parse_element(ring_->f(), s_.substr(pos_, end - pos_ + 1));
      pos_ = end + 1;
      return Polynomial::constant(ring_, e);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = s_.substr(start, pos_ - start);
      const int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, static_cast<unsigned>(idx));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  return Parser(ring, text).parse();
}

}  // namespace charp::poly
