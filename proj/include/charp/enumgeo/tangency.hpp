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

#include <optional>
#include <vector>

#include "charp/enumgeo/curve.hpp"
#include "charp/ff/matrix.hpp"
#include "charp/zerodim/report.hpp"

namespace charp::enumgeo {

/// k[u, v, s1, ..., st]. On the line chart l_j = 1, (u, v) are the two
/// remaining line coordinates in increasing index order and s_i places
/// point i on the line.
RingPtr tangency_ring(const FieldPtr& field, unsigned t);

/// Affine ideal of t points of C, each with the line as tangent, on the line
/// chart l_j = 1. With a < b the other indices, P_a = e_a - u e_j and
/// P_b = e_b - v e_j span the line; point i is P_a + s_i P_b when bit i of
/// point_charts is clear and s_i P_a + P_b when it is set. Generators per
/// point: F(p_i) and the 2x2 minors of (l ; grad F(p_i)), which on this
/// chart are grad F(p_i) . P_a and grad F(p_i) . P_b. exclude_diagonal
/// saturates by the product of the pairwise determinants of the points.
Ideal tangency_ideal(const PlaneCurve& c, unsigned t, unsigned line_chart, unsigned point_charts,
                     bool exclude_diagonal, const GbOptions& opts = gb::default_options());

/// All 3 * 2^t charts; id is (line_chart << t) | point_charts. Keys are the
/// line followed by the t points, each normalized.
std::vector<zerodim::Chart> tangency_charts(const PlaneCurve& c, unsigned t, bool exclude_diagonal,
                                            const GbOptions& opts = gb::default_options());

/// DegenerateInput when some chart is not finite.
zerodim::SchemeReport tangency_scheme(const PlaneCurve& c, unsigned t, bool exclude_diagonal,
                                      const zerodim::SolveOptions& opts = {});

/// Scheme-theoretic image in the dual plane: per line chart, the point
/// parameters are eliminated and the results intersected over point charts.
zerodim::SchemeReport tangency_image_scheme(const PlaneCurve& c, unsigned t, bool exclude_diagonal,
                                            const zerodim::SolveOptions& opts = {});

/// Length at p of {q in C : l(q) = 0, l tangent at q} for the fixed line of
/// the flag, over the flag's field.
unsigned gamma_length(const PlaneCurve& c, const Flag& flag);

/// Length at (p_1, ..., p_t) of the same fiber for t points and one fixed
/// line. The points are projective triples over `field`.
unsigned gamma_dual_length(const PlaneCurve& c, const FieldPtr& field, const std::vector<Elem>& line,
                           const std::vector<std::vector<Elem>>& points);

/// Some point rational over `field` (default: the curve's field) whose
/// tangent line has contact exactly 2.
std::optional<Flag> find_simple_tangent(const PlaneCurve& c, const FieldPtr& field = nullptr);

/// Cartier-Manin matrix: entry (u, v) is the coefficient of x^(p u - v) in
/// F^(p-1), with u, v running over the monomials of degree d with all
/// exponents >= 1. UsageError for p > 31.
ff::Matrix hasse_witt_matrix(const PlaneCurve& c);
/// Smooth curve with invertible Hasse-Witt matrix.
bool is_ordinary(const PlaneCurve& c);

struct ThetaReport {
  /// Image in the dual plane.
  zerodim::SchemeReport image;
  /// Ordered contact pairs off the diagonal, keys (l, p1, p2).
  zerodim::SchemeReport pairs;
  unsigned ordering_factor = 2;
  /// pairs.total_degree / ordering_factor.
  std::size_t pushforward_degree = 0;
  /// Pushforward multiplicity of every image point, when the pairs are
  /// uniform and each line has exactly ordering_factor ordered pairs.
  std::optional<unsigned> pushforward_multiplicity;
  std::optional<bool> ordinary;
};

/// Bitangent scheme of a smooth plane quartic. DegenerateInput when the
/// curve is not a quartic or the pair scheme is not finite.
ThetaReport theta_scheme_quartic(const PlaneCurve& c, const zerodim::SolveOptions& opts = {});

struct SampledTheta {
  SampledCurve sample;
  ThetaReport report;
  unsigned rejected = 0;
};

/// Rejection sampling of a smooth quartic whose theta scheme is finite and
/// computable within the caps; in characteristic 2 the curve must also be
/// ordinary.
SampledTheta sample_theta_quartic(const FieldPtr& field, std::uint64_t seed,
                                  unsigned max_attempts = kDefaultMaxAttempts,
                                  const zerodim::SolveOptions& opts = {});

}  // namespace charp::enumgeo
