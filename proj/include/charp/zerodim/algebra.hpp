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

#include <vector>

#include "charp/ff/matrix.hpp"
#include "charp/ff/upoly.hpp"
#include "charp/groebner/groebner.hpp"

namespace charp::zerodim {

using ff::Elem;
using ff::FieldPtr;
using ff::UPoly;
using gb::Ideal;
using poly::Monomial;
using poly::Polynomial;

/// k[x]/I for zero-dimensional I, on the staircase basis of a reduced
/// Groebner basis.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(gb::GroebnerBasis g);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const gb::GroebnerBasis& groebner() const { return g_; }
  const FieldPtr& field() const { return g_.ring()->field(); }

  /// Coordinates of the normal form of f.
  std::vector<Elem> coords(const Polynomial& f) const;
  /// Multiplication by x_i (computed on first use).
  const ff::Matrix& mult(unsigned i) const;
  /// Multiplication by an arbitrary polynomial.
  ff::Matrix mult_by(const Polynomial& f) const;
  /// Minimal polynomial of the class of f (monic).
  UPoly minimal_polynomial(const Polynomial& f) const;

 private:
  gb::GroebnerBasis g_;
  std::vector<Monomial> basis_;
  std::vector<std::pair<Monomial, std::size_t>> index_;
  mutable std::vector<ff::Matrix> mult_;
  mutable std::vector<bool> have_mult_;
  std::size_t index_of(const Monomial& m) const;
  /// dim() when m is not a staircase monomial.
  std::size_t find(const Monomial& m) const;
};

/// Reduced Groebner basis of the same ideal for another monomial order, by
/// linear algebra on the multiplication matrices (FGLM).
gb::GroebnerBasis change_order(const QuotientAlgebra& a, const poly::MonomialOrder& order);

/// Kernel of k[x_keep] -> A_1 x ... x A_m for quotient algebras of ideals in
/// one ring, i.e. the intersection of the elimination ideals. Reduced basis
/// in a grevlex ring on the kept variables, named as in the source ring.
gb::GroebnerBasis joint_elimination(const std::vector<const QuotientAlgebra*>& algebras,
                                    const std::vector<unsigned>& keep);

/// Monic annihilator of v under the matrix (Krylov iteration).
UPoly krylov_minimal_polynomial(const ff::Matrix& m, const std::vector<Elem>& v);

/// p(M) by Horner.
ff::Matrix evaluate_matrix_poly(const UPoly& p, const ff::Matrix& m);

/// Seidenberg radical: I plus the squarefree parts of the per-variable
/// minimal polynomials. UsageError when I is not zero-dimensional.
Ideal radical_zero_dim(const Ideal& ideal, const gb::GbOptions& opts = gb::default_options());

/// Degree of the radical, i.e. the number of geometric points.
std::size_t radical_degree(const Ideal& ideal, const gb::GbOptions& opts = gb::default_options());

}  // namespace charp::zerodim
