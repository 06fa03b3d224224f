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
#include <stop_token>
#include <string>
#include <vector>

#include "charp/error.hpp"
#include "charp/poly/polynomial.hpp"

namespace charp::gb {

using poly::Monomial;
using poly::MonomialOrder;
using poly::Polynomial;
using poly::RingPtr;
using ff::Elem;

struct GbOptions {
  std::uint64_t max_pairs = 200000;
  std::uint64_t max_basis = 20000;
  std::stop_token stop;
};

/// Process-wide defaults (the CLI and the environment may override them).
GbOptions& default_options();

/// Generators in one ring; zero generators are dropped.
class Ideal {
 public:
  explicit Ideal(RingPtr ring);
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal of(std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  void add(const Polynomial& p);
  Ideal operator+(const Ideal& o) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis. The ring carries the monomial order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis, ResourceStats stats = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const ResourceStats& stats() const { return stats_; }
  std::size_t size() const { return basis_.size(); }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& i) const;
  bool is_zero_dimensional() const;
  /// Staircase monomials, ascending in the order. UsageError when not
  /// zero-dimensional.
  std::vector<Monomial> quotient_basis() const;
  /// Size of the staircase.
  std::size_t degree() const { return quotient_basis().size(); }
  Ideal ideal() const { return Ideal(ring_, basis_); }
  /// Order name, then one polynomial per line.
  std::string dump() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
  ResourceStats stats_;
};

/// Full reduction of f by g (monic leading coefficients not required):
/// always the largest reducible term against the first matching divisor.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                       const std::stop_token& stop = {});

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GbOptions& opts = default_options());
/// Uses the order of the ideal's ring.
GroebnerBasis groebner(const Ideal& ideal, const GbOptions& opts = default_options());

/// Every S-polynomial of the basis reduces to zero.
bool s_polynomial_closure(const GroebnerBasis& g);

/// I intersected with the subring on the remaining variables, expressed in
/// a ring with those variables (grevlex).
Ideal eliminate(const Ideal& ideal, const std::vector<unsigned>& drop,
                const GbOptions& opts = default_options());

Ideal intersect(const Ideal& a, const Ideal& b, const GbOptions& opts = default_options());
/// {g : g f in I}. UsageError for f == 0.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f,
                     const GbOptions& opts = default_options());

struct Saturation {
  Ideal ideal;
  /// Smallest k with (I : f^k) == (I : f^(k+1)).
  unsigned exponent;
};
Saturation saturate(const Ideal& ideal, const Polynomial& f,
                    const GbOptions& opts = default_options());

/// Exact quotient h / f; UsageError when f does not divide h.
Polynomial divide_exact(const Polynomial& h, const Polynomial& f);

/// FNV-1a of the dump.
std::uint64_t fingerprint(const GroebnerBasis& g);

}  // namespace charp::gb
