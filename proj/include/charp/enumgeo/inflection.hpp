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

#include "charp/enumgeo/curve.hpp"
#include "charp/zerodim/report.hpp"

namespace charp::enumgeo {

/// k[x0, x1, x2, l0, l1, l2].
RingPtr flag_ring(const FieldPtr& field);

/// Homogeneous generators of the inflection flag scheme: incidence, F, the
/// gradient pairings and Hessian forms at the three vectors spanning the
/// kernel of l.
std::vector<Polynomial> inflection_flag_equations(const PlaneCurve& c);

/// Affine ideal on the chart x_{point_chart} = 1, l_{line_chart} = 1, in
/// the two remaining point coordinates followed by the two line coordinates.
Ideal inflection_flag_ideal(const PlaneCurve& c, unsigned point_chart, unsigned line_chart);

/// All nine charts; keys are (normalized point, normalized line). Chart id
/// is 3 * point_chart + line_chart.
std::vector<zerodim::Chart> inflection_flag_charts(const PlaneCurve& c);

struct FlagCheck {
  std::vector<Elem> point;
  std::vector<Elem> line;
  FieldPtr field;
  unsigned residue_degree = 1;
  unsigned multiplicity = 0;
  unsigned tangent_space_dim = 0;
  bool point_smooth = false;
  /// l is the tangent line at p.
  bool line_is_tangent = false;
  /// Intersection multiplicity of C and l at p.
  unsigned contact = 0;
  /// Length at p of the fiber over (F, l): the point varies, the line is fixed.
  unsigned line_fiber_length = 0;
};

struct InflectionReport {
  /// Flag scheme, keys (p, l).
  zerodim::SchemeReport flags;
  /// Image on the point factor, keys p.
  zerodim::SchemeReport points;
  /// One entry per flag point, in the order of flags.points.
  std::vector<FlagCheck> checks;
  /// Every flag has p smooth, l tangent at p, contact exactly 3.
  bool hypotheses_hold = false;
};

/// DegenerateInput when the flag scheme is not finite.
InflectionReport inflection_scheme(const PlaneCurve& c, const zerodim::SolveOptions& opts = {});

struct SampledInflection {
  SampledCurve sample;
  InflectionReport report;
  /// Smooth candidates whose point fields exceeded the extension cap.
  unsigned rejected_resource = 0;
  /// Smooth candidates with a flag failing the hypotheses.
  unsigned rejected_hypotheses = 0;
};

/// Rejection sampling of a smooth curve whose inflection scheme is
/// computable within the caps and satisfies hypotheses_hold.
SampledInflection sample_inflection_curve(unsigned d, const FieldPtr& field, std::uint64_t seed,
                                          unsigned max_attempts = kDefaultMaxAttempts,
                                          const zerodim::SolveOptions& opts = {});

/// Image on the line factor, keys l.
zerodim::SchemeReport gauss_image_scheme(const PlaneCurve& c, const zerodim::SolveOptions& opts = {});

/// Point-factor report only, by elimination of the line coordinates.
zerodim::SchemeReport inflection_point_scheme(const PlaneCurve& c, const zerodim::SolveOptions& opts = {});

struct FiberLinearity {
  bool is_linear = false;
  /// Rank of the conditions on the coefficients of F.
  unsigned codim = 0;
};

/// Conditions on the curve coefficients for the fixed flag to be an
/// inflection flag of a degree-d curve.
FiberLinearity fiber_linearity_check(const Flag& flag, unsigned d);

}  // namespace charp::enumgeo
