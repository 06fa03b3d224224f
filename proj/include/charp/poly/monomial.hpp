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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace charp::poly {

inline constexpr unsigned kMaxVars = 8;
inline constexpr unsigned kMaxExponent = 0x7fff;

/// Exponent vector packed as eight 16-bit lanes in two words. The top bit of
/// every lane is a guard bit, so exponents are bounded by kMaxExponent.
class Monomial {
 public:
  Monomial() = default;
  static Monomial from_exponents(const std::vector<unsigned>& e);
  static Monomial variable(unsigned i, unsigned power = 1);

  unsigned operator[](unsigned i) const {
    return static_cast<unsigned>((w_[i >> 2] >> (16 * (i & 3))) & 0xffff);
  }
  void set(unsigned i, unsigned v);
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  /// Throws ResourceLimit when an exponent would overflow.
  Monomial operator*(const Monomial& o) const;
  /// Requires o | *this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const {
    constexpr std::uint64_t kGuard = 0x8000800080008000ULL;
    return (((o.w_[0] | kGuard) - w_[0]) & kGuard) == kGuard &&
           (((o.w_[1] | kGuard) - w_[1]) & kGuard) == kGuard;
  }
  bool coprime(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;

  bool operator==(const Monomial& o) const {
    return w_[0] == o.w_[0] && w_[1] == o.w_[1];
  }
  std::uint64_t hash() const { return w_[0] * 0x9e3779b97f4a7c15ULL ^ (w_[1] + (w_[1] << 7)); }
  std::uint64_t word(unsigned i) const { return w_[i]; }

 private:
  std::array<std::uint64_t, 2> w_{0, 0};
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return static_cast<std::size_t>(m.hash()); }
};

/// Total order on monomials. perm lists the variables from largest to
/// smallest (empty means x0 > x1 > ...).
struct MonomialOrder {
  enum class Kind { kLex, kGrevlex, kBlock };
  Kind kind = Kind::kGrevlex;
  unsigned block = 0;  // first-block size for kBlock
  std::vector<unsigned> perm;

  static MonomialOrder lex() { return {Kind::kLex, 0, {}}; }
  static MonomialOrder grevlex() { return {Kind::kGrevlex, 0, {}}; }
  /// Grevlex on the first k ranked variables, ties broken by grevlex on the
  /// rest; eliminates the first block.
  static MonomialOrder block_elimination(unsigned k) { return {Kind::kBlock, k, {}}; }

  std::string name() const;
  bool operator==(const MonomialOrder&) const = default;
};

}  // namespace charp::poly
