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
#include <vector>

#include "charp/ff/embed.hpp"
#include "charp/zerodim/algebra.hpp"

namespace charp::zerodim {

inline constexpr unsigned kDefaultMaxResidueDegree = 24;
inline constexpr unsigned kDefaultMaxLocalSteps = 64;

/// A geometric point of a zero-dimensional scheme, represented by one
/// member of its Galois orbit over the base field.
struct SchemePoint {
  /// Affine coordinates in `field`.
  std::vector<Elem> coords;
  FieldPtr field;
  /// Image of the base field generator in `field`; base coefficients are
  /// lifted through it so that coordinates and equations share one frame.
  Elem base_image = 0;
  unsigned chart = 0;
  unsigned residue_degree = 1;
  /// 0 until computed.
  unsigned multiplicity = 0;
};

struct SolveOptions {
  unsigned max_residue_degree = kDefaultMaxResidueDegree;
  unsigned max_local_steps = kDefaultMaxLocalSteps;
  std::uint64_t seed = 0;
  gb::GbOptions gb = gb::default_options();
};

/// Lifts base-field values into the point field.
ff::Embedding base_lift(const FieldPtr& base, const SchemePoint& p);
Polynomial lift_polynomial(const Polynomial& f, const ff::Embedding& lift);

/// One representative per Galois orbit, residue degrees filled,
/// multiplicities unset. Sorted by (residue degree, coordinates).
std::vector<SchemePoint> solve_points(const Ideal& ideal, const SolveOptions& opts = {});

/// True when every generator of the ideal vanishes at p.
bool vanishes_at(const Ideal& ideal, const SchemePoint& p);

/// Length of the local ring of the scheme at p: d_N = dim of the algebra
/// modulo m_p^N, iterated until d_N stabilizes. Works inside the quotient
/// algebra restricted to the generalized eigenspace containing p.
unsigned local_multiplicity(const Ideal& ideal, const SchemePoint& p, const SolveOptions& opts = {});
/// Same, on a prepared quotient algebra of the scheme.
unsigned local_multiplicity(const QuotientAlgebra& a, const SchemePoint& p, const SolveOptions& opts = {});

/// Same number by the direct route: translate p to the origin over the
/// point field and count the staircase of I + m^N until it stabilizes.
unsigned local_multiplicity_gb(const Ideal& ideal, const SchemePoint& p,
                               const SolveOptions& opts = {});

/// Dimension of the Zariski tangent space at p: n minus the rank of the
/// Jacobian of the generators at p.
unsigned tangent_space_dimension(const Ideal& ideal, const SchemePoint& p);

/// Minimal polynomial over the base field of a point-field element.
UPoly minimal_polynomial_over_base(Elem a, const FieldPtr& base, const SchemePoint& frame);

/// Rewrites p so that base_image is the canonical image of the base
/// generator, then picks the lexicographically smallest Frobenius conjugate.
/// `coords` of the result are what callers should compare.
SchemePoint canonical_representative(const FieldPtr& base, const SchemePoint& p);

}  // namespace charp::zerodim
