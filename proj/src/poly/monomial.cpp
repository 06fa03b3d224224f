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


#include "charp/poly/monomial.hpp"

#include <algorithm>

#include "charp/error.hpp"

namespace charp::poly {
namespace {

constexpr std::uint64_t kGuard = 0x8000800080008000ULL;

}  // namespace

Monomial Monomial::from_exponents(const std::vector<unsigned>& e) {
  if (e.size() > kMaxVars) throw UsageError("too many variables for a monomial");
  Monomial m;
  for (unsigned i = 0; i < e.size(); ++i) m.set(i, e[i]);
  return m;
}

Monomial Monomial::variable(unsigned i, unsigned power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(unsigned i, unsigned v) {
  if (i >= kMaxVars) throw UsageError("variable index out of range");
  if (v > kMaxExponent) throw ResourceLimit("exponent exceeds the monomial limit");
  const unsigned shift = 16 * (i & 3);
  const unsigned old = (*this)[i];
  w_[i >> 2] = (w_[i >> 2] & ~(std::uint64_t{0xffff} << shift)) |
               (static_cast<std::uint64_t>(v) << shift);
  deg_ = deg_ - old + v;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.w_[0] = w_[0] + o.w_[0];
  r.w_[1] = w_[1] + o.w_[1];
  if ((r.w_[0] | r.w_[1]) & kGuard) throw ResourceLimit("exponent exceeds the monomial limit");
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  r.w_[0] = w_[0] - o.w_[0];
  r.w_[1] = w_[1] - o.w_[1];
  r.deg_ = deg_ - o.deg_;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (unsigned i = 0; i < kMaxVars; ++i) {
    if ((*this)[i] && o[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    const unsigned v = std::max((*this)[i], o[i]);
    if (v) r.set(i, v);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    const unsigned v = std::min((*this)[i], o[i]);
    if (v) r.set(i, v);
  }
  return r;
}

std::string MonomialOrder::name() const {
  std::string s;
  switch (kind) {
    case Kind::kLex:
      s = "lex";
      break;
    case Kind::kGrevlex:
      s = "grevlex";
      break;
    case Kind::kBlock:
      s = "block(" + std::to_string(block) + ")";
      break;
  }
  if (!perm.empty()) {
    s += "[";
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(perm[i]);
    }
    s += "]";
  }
  return s;
}

}  // namespace charp::poly
