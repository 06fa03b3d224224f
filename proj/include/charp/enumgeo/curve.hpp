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
#include <functional>
#include <string>
#include <vector>

#include "charp/groebner/groebner.hpp"
#include "charp/zerodim/report.hpp"

namespace charp::enumgeo {

using ff::Elem;
using ff::FieldPtr;
using gb::GbOptions;
using gb::Ideal;
using poly::Polynomial;
using poly::RingPtr;

/// Ring k[x0, x1, x2] (grevlex).
RingPtr plane_ring(const FieldPtr& field);

/// A plane curve F = 0 given by a nonzero form of degree >= 1.
class PlaneCurve {
 public:
  explicit PlaneCurve(Polynomial form);

  const Polynomial& form() const { return f_; }
  unsigned degree() const { return degree_; }
  const FieldPtr& field() const { return f_.ring()->field(); }
  const RingPtr& ring() const { return f_.ring(); }
  /// The same curve with coefficients pushed into an extension field.
  PlaneCurve over(const FieldPtr& extension) const;
  std::string to_string() const { return f_.to_string(); }

 private:
  Polynomial f_;
  unsigned degree_;
};

PlaneCurve parse_curve(const FieldPtr& field, const std::string& text);

/// Curve file: optional "field: GF(...)" header, '#' comments, then one
/// homogeneous polynomial in x0, x1, x2 (may span lines). `field` overrides
/// a missing header; when both are present they must agree.
PlaneCurve read_curve_file(const std::string& path, const FieldPtr& field = nullptr);
PlaneCurve read_curve_text(const std::string& text, const FieldPtr& field = nullptr);

/// A point p and a line l of the plane with l . p = 0, over `field`.
struct Flag {
  std::vector<Elem> point;
  std::vector<Elem> line;
  FieldPtr field;
};

/// Throws UsageError unless both vectors are nonzero triples and incident.
void validate_flag(const Flag& flag);

/// No singular point over the algebraic closure: F and its partials
/// generate the unit ideal on every chart.
bool is_smooth(const PlaneCurve& c, const GbOptions& opts = gb::default_options());

/// Homogeneous coordinates p with F(p) = 0 and all partials zero, one per
/// Galois orbit, normalized.
std::vector<zerodim::SchemePoint> singular_points(const PlaneCurve& c,
                                                  const zerodim::SolveOptions& opts = {});

/// Gradient of F at p (coordinates in the field of p).
std::vector<Elem> gradient_at(const PlaneCurve& c, const FieldPtr& field, const std::vector<Elem>& p);

/// Length of C cap l at p, i.e. the local length of <F, l> at p. Works over
/// the field of the data. DegenerateInput when l is a component of C.
unsigned intersection_multiplicity(const PlaneCurve& c, const FieldPtr& field,
                                   const std::vector<Elem>& line, const std::vector<Elem>& point);

using CurvePredicate = std::function<bool(const PlaneCurve&)>;

struct SampledCurve {
  PlaneCurve curve;
  unsigned attempts;
  std::uint64_t seed;
};

inline constexpr unsigned kDefaultMaxAttempts = 500;

/// Rejection sampling of a uniformly random form of degree d until it is
/// smooth and satisfies `pred`. SamplingFailure after max_attempts.
SampledCurve random_smooth_curve(unsigned d, const FieldPtr& field, std::uint64_t seed,
                                 const CurvePredicate& pred = {},
                                 unsigned max_attempts = kDefaultMaxAttempts,
                                 const GbOptions& opts = gb::default_options());

/// Affine chart x_k = 1 of the plane for an ideal in the two remaining
/// coordinates; keys are normalized homogeneous triples.
zerodim::Chart plane_chart(unsigned id, unsigned k, Ideal ideal);

/// Intersection of a nonempty list of ideals in one ring.
Ideal intersect_all(const std::vector<Ideal>& v, const GbOptions& opts = gb::default_options());

/// Helpers shared by the constructions.
std::vector<Elem> normalize(const ff::Field& f, std::vector<Elem> v);
/// Index of the first nonzero coordinate.
unsigned first_nonzero(const std::vector<Elem>& v);

}  // namespace charp::enumgeo
