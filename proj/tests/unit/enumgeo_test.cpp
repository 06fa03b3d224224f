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

#include <gtest/gtest.h>

#include <set>

#include "charp/enumgeo/inflection.hpp"
#include "charp/enumgeo/tangency.hpp"
#include "charp/poly/ops.hpp"

namespace charp::enumgeo {
namespace {

using ff::Field;
using zerodim::SchemePoint;

PlaneCurve example_e() { return parse_curve(Field::prime(3), "x0*x1*x2 + (x0 - x1)^3"); }

std::vector<std::vector<Elem>> projective_points(const ff::Field& f) {
  std::vector<std::vector<Elem>> pts{{0, 0, 1}};
  for (Elem b = 0; b < f.order(); ++b) pts.push_back({0, 1, b});
  for (Elem a = 0; a < f.order(); ++a) {
    for (Elem b = 0; b < f.order(); ++b) pts.push_back({1, a, b});
  }
  return pts;
}

std::vector<Elem> cross(const ff::Field& f, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

// Order at t = 0 of F(p + t q), q another point of the line: contact of the
// line with C at p, by direct expansion.
unsigned contact_by_expansion(const PlaneCurve& c, const std::vector<Elem>& p, const std::vector<Elem>& line) {
  const ff::Field& f = *c.field();
  std::vector<Elem> q;
  for (const auto& cand : projective_points(f)) {
    Elem dot = 0;
    for (unsigned k = 0; k < 3; ++k) dot = f.add(dot, f.mul(cand[k], line[k]));
    if (dot == 0 && cross(f, cand, p) != std::vector<Elem>{0, 0, 0}) {
      q = cand;
      break;
    }
  }
  const RingPtr r = poly::Ring::make(c.field(), {"t"});
  std::vector<Polynomial> img;
  for (unsigned k = 0; k < 3; ++k) {
    img.push_back(Polynomial::constant(r, p[k]) + Polynomial::variable(r, 0).scaled(q[k]));
  }
  const Polynomial g = c.form().substitute(img);
  if (g.is_zero()) return 1000;
  unsigned ord = 1000;
  for (const auto& t : g.terms()) ord = std::min(ord, t.m[0]);
  return ord;
}

// dim m/(m^2 + I) at a rational point: staircase of I + m^2 after moving p
// to the origin, minus one.
unsigned tangent_dim_oracle(const Ideal& ideal, const std::vector<Elem>& p) {
  const RingPtr r = ideal.ring();
  const unsigned n = r->nvars();
  std::vector<Polynomial> shift;
  for (unsigned i = 0; i < n; ++i) shift.push_back(Polynomial::variable(r, i) + Polynomial::constant(r, p[i]));
  Ideal j(r);
  for (const auto& g : ideal.gens()) j.add(g.substitute(shift));
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = a; b < n; ++b) j.add(Polynomial::variable(r, a) * Polynomial::variable(r, b));
  }
  return static_cast<unsigned>(gb::groebner(j).degree()) - 1;
}

TEST(CurveTest, ParseAndValidate) {
  const auto f3 = Field::prime(3);
  const auto e = read_curve_text("field: GF(3)\n# the example\nx0*x1*x2 +\n (x0 - x1)^3\n");
  EXPECT_EQ(e.degree(), 3u);
  EXPECT_EQ(e.field(), f3);
  EXPECT_THROW(read_curve_text("field: GF(3)\nx0 + x1", Field::prime(5)), UsageError);
  EXPECT_THROW(parse_curve(f3, "x0^2 + x1"), UsageError);
  EXPECT_THROW(parse_curve(f3, "3*x0"), DegenerateInput);
  EXPECT_THROW(validate_flag(Flag{{0, 0, 1}, {0, 0, 1}, f3}), UsageError);
}

TEST(CurveTest, ExampleIsSingularAtOnePoint) {
  const auto e = example_e();
  EXPECT_FALSE(is_smooth(e));
  const auto sing = singular_points(e);
  ASSERT_EQ(sing.size(), 1u);
  EXPECT_EQ(sing[0].coords, (std::vector<Elem>{0, 0, 1}));
}

TEST(CurveTest, SmoothConicOverF2) {
  const auto f2 = Field::prime(2);
  const auto s = random_smooth_curve(2, f2, 1);
  EXPECT_TRUE(is_smooth(s.curve));
  // No singular point over GF(16), which contains every quadratic extension.
  const auto f16 = Field::extension(2, 4);
  const PlaneCurve c = s.curve.over(f16);
  for (const auto& p : projective_points(*f16)) {
    if (c.form().evaluate(p) != 0) continue;
    const auto g = gradient_at(s.curve, f16, p);
    EXPECT_TRUE(g[0] || g[1] || g[2]);
  }
}

TEST(CurveTest, SamplingFailure) {
  EXPECT_THROW(random_smooth_curve(4, Field::prime(2), 3, [](const PlaneCurve&) { return false; }, 5),
               SamplingFailure);
}

TEST(CurveTest, IntersectionMultiplicityAgreesWithExpansion) {
  for (std::uint64_t p : {5u, 7u}) {
    const auto f = Field::prime(p);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto c = random_smooth_curve(4, f, seed).curve;
      for (const auto& pt : projective_points(*f)) {
        if (c.form().evaluate(pt) != 0) continue;
        const auto g = gradient_at(c, f, pt);
        const auto line = normalize(*f, g);
        EXPECT_EQ(intersection_multiplicity(c, f, line, pt), contact_by_expansion(c, pt, line));
      }
    }
  }
}

TEST(InflectionTest, ExampleFlagScheme) {
  const auto e = example_e();
  const auto rep = inflection_scheme(e);
  ASSERT_EQ(rep.flags.points.size(), 3u);
  std::set<std::vector<Elem>> keys;
  for (const auto& p : rep.flags.points) {
    keys.insert(p.coords);
    EXPECT_EQ(p.residue_degree, 1u);
    EXPECT_EQ(p.multiplicity, 3u);
  }
  const std::set<std::vector<Elem>> want{{0, 0, 1, 0, 1, 0}, {0, 0, 1, 1, 0, 0}, {1, 1, 0, 0, 0, 1}};
  EXPECT_EQ(keys, want);
  EXPECT_EQ(rep.flags.total_degree, 9u);
  ASSERT_TRUE(rep.flags.uniform_multiplicity);
  EXPECT_EQ(*rep.flags.uniform_multiplicity, 3u);
  // Point factor: two projective points, [0,0,1] singular.
  EXPECT_EQ(rep.points.points.size(), 2u);
  const auto charts = inflection_flag_charts(e);
  for (std::size_t k = 0; k < rep.checks.size(); ++k) {
    const auto& fp = rep.flags.points[k];
    const auto& chart = charts.at(fp.chart);
    const auto local = chart.from_key(*fp.field, fp.coords);
    ASSERT_TRUE(local);
    EXPECT_EQ(rep.checks[k].tangent_space_dim, tangent_dim_oracle(chart.ideal, *local));
    EXPECT_EQ(rep.checks[k].tangent_space_dim, 1u);
  }
  EXPECT_FALSE(rep.hypotheses_hold);
}

TEST(InflectionTest, SmoothFlexHasContactThree) {
  const auto rep = inflection_scheme(example_e());
  for (const auto& ck : rep.checks) {
    if (!ck.point_smooth) continue;
    EXPECT_EQ(ck.point, (std::vector<Elem>{1, 1, 0}));
    EXPECT_TRUE(ck.line_is_tangent);
    EXPECT_EQ(ck.contact, 3u);
  }
}

TEST(InflectionTest, LineIsDegenerate) {
  EXPECT_THROW(inflection_scheme(parse_curve(Field::prime(7), "x0 + 2*x1")), DegenerateInput);
}

TEST(InflectionTest, ConicHasNoFlexes) {
  const auto f7 = Field::prime(7);
  const auto c = random_smooth_curve(2, f7, 4).curve;
  const auto rep = inflection_scheme(c);
  EXPECT_TRUE(rep.flags.points.empty());
  EXPECT_EQ(rep.flags.total_degree, 0u);
  for (const auto& p : projective_points(*f7)) {
    if (c.form().evaluate(p) != 0) continue;
    EXPECT_EQ(contact_by_expansion(c, p, normalize(*f7, gradient_at(c, f7, p))), 2u);
  }
}

TEST(InflectionTest, CubicOverF7RationalFlexesMatchScan) {
  const auto f7 = Field::prime(7);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto c = random_smooth_curve(3, f7, seed).curve;
    const auto rep = inflection_scheme(c);
    EXPECT_EQ(rep.flags.total_degree, 9u);
    EXPECT_EQ(rep.flags.radical_degree, 9u);
    std::size_t rational = 0;
    for (const auto& p : rep.points.points) rational += p.residue_degree == 1;
    std::size_t scanned = 0;
    for (const auto& p : projective_points(*f7)) {
      if (c.form().evaluate(p) != 0) continue;
      scanned += contact_by_expansion(c, p, normalize(*f7, gradient_at(c, f7, p))) >= 3;
    }
    EXPECT_EQ(rational, scanned) << "seed " << seed;
  }
}

TEST(InflectionTest, CubicOverF27HasThreeTriplePoints) {
  const auto s = sample_inflection_curve(3, Field::extension(3, 3), 1);
  EXPECT_TRUE(s.report.hypotheses_hold);
  EXPECT_EQ(s.report.points.radical_degree, 3u);
  EXPECT_EQ(s.report.points.total_degree, 9u);
  ASSERT_TRUE(s.report.points.uniform_multiplicity);
  EXPECT_EQ(*s.report.points.uniform_multiplicity, 3u);
}

TEST(InflectionTest, GaussImage) {
  const auto e = gauss_image_scheme(example_e());
  EXPECT_EQ(e.radical_degree, 3u);
  const auto c = random_smooth_curve(3, Field::prime(7), 1).curve;
  const auto g = gauss_image_scheme(c);
  EXPECT_EQ(g.radical_degree, 9u);
  EXPECT_EQ(g.total_degree, 9u);
}

TEST(InflectionTest, FermatCubicOverF2) {
  const auto c = parse_curve(Field::prime(2), "x0^3 + x1^3 + x2^3");
  ASSERT_TRUE(is_smooth(c));
  const auto rep = inflection_scheme(c);
  EXPECT_EQ(rep.flags.radical_degree, 9u);
  const auto g = gauss_image_scheme(c);
  EXPECT_EQ(g.radical_degree, 9u);
}

TEST(FiberLinearityTest, RankThree) {
  for (std::uint64_t p : {5u, 7u}) {
    const auto f = Field::prime(p);
    Rng rng(p);
    for (unsigned d = 2; d <= 5; ++d) {
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<Elem> pt(3), r(3);
        do {
          for (auto& x : pt) x = f->random(rng);
        } while (pt == std::vector<Elem>{0, 0, 0});
        std::vector<Elem> line;
        do {
          for (auto& x : r) x = f->random(rng);
          line = cross(*f, pt, r);
        } while (line == std::vector<Elem>{0, 0, 0});
        const auto res = fiber_linearity_check(Flag{pt, line, f}, d);
        EXPECT_TRUE(res.is_linear);
        EXPECT_EQ(res.codim, 3u);
      }
    }
  }
}

TEST(FiberLinearityTest, CoordinateFlag) {
  const auto f5 = Field::prime(5);
  for (unsigned d = 2; d <= 5; ++d) {
    const auto res = fiber_linearity_check(Flag{{0, 0, 1}, {1, 0, 0}, f5}, d);
    EXPECT_EQ(res.codim, 3u);
    // Curves without x2^d, x1 x2^(d-1), x1^2 x2^(d-2) have the flag; adding
    // any one of them breaks it.
    const RingPtr r = plane_ring(f5);
    const std::string base = "x0^" + std::to_string(d);
    EXPECT_TRUE(inflection_flag_ideal(PlaneCurve(poly::parse_polynomial(r, base)), 2, 0).gens().size() > 0);
  }
}

TEST(TangencyTest, GammaLengthOddCharacteristic) {
  for (auto [field, d] : std::vector<std::pair<std::string, unsigned>>{{"GF(5)", 2}, {"GF(5)", 3}, {"GF(7)", 4}}) {
    const auto f = ff::parse_field(field);
    const auto c = random_smooth_curve(d, f, 1).curve;
    const auto flag = find_simple_tangent(c);
    ASSERT_TRUE(flag) << field;
    EXPECT_EQ(contact_by_expansion(c, flag->point, flag->line), 2u);
    EXPECT_EQ(gamma_length(c, *flag), 1u) << field << " d=" << d;
  }
}

TEST(TangencyTest, GammaLengthCharacteristicTwo) {
  for (auto [field, d] : std::vector<std::pair<std::string, unsigned>>{{"GF(2)", 3}, {"GF(4)", 3}, {"GF(4)", 4}}) {
    const auto f = ff::parse_field(field);
    const auto c = random_smooth_curve(d, f, 1).curve;
    const auto flag = find_simple_tangent(c);
    ASSERT_TRUE(flag) << field;
    EXPECT_EQ(contact_by_expansion(c, flag->point, flag->line), 2u);
    EXPECT_EQ(gamma_length(c, *flag), 2u) << field << " d=" << d;
  }
}

TEST(TangencyTest, SingleTangencySchemeIsACurve) {
  const auto c = random_smooth_curve(2, Field::prime(5), 1).curve;
  EXPECT_THROW(tangency_scheme(c, 1, false), DegenerateInput);
}

TEST(TangencyTest, ThetaOverF8) {
  const auto f8 = Field::extension(2, 3);
  const auto s = sample_theta_quartic(f8, 1);
  const auto& r = s.report;
  ASSERT_TRUE(r.ordinary);
  EXPECT_TRUE(*r.ordinary);
  EXPECT_EQ(r.pairs.radical_degree, 14u);
  EXPECT_EQ(r.pairs.total_degree, 56u);
  ASSERT_TRUE(r.pairs.uniform_multiplicity);
  EXPECT_EQ(*r.pairs.uniform_multiplicity, 4u);
  EXPECT_EQ(r.image.radical_degree, 7u);
  EXPECT_EQ(r.pushforward_degree, 28u);
  ASSERT_TRUE(r.pushforward_multiplicity);
  EXPECT_EQ(*r.pushforward_multiplicity, 4u);
  for (const auto& pt : r.pairs.points) {
    const std::vector<Elem> h(pt.coords.begin(), pt.coords.begin() + 3);
    const std::vector<Elem> p1(pt.coords.begin() + 3, pt.coords.begin() + 6);
    const std::vector<Elem> p2(pt.coords.begin() + 6, pt.coords.end());
    EXPECT_NE(p1, p2);
    EXPECT_EQ(intersection_multiplicity(s.sample.curve, pt.field, h, p1), 2u);
    EXPECT_EQ(intersection_multiplicity(s.sample.curve, pt.field, h, p2), 2u);
    EXPECT_EQ(gamma_dual_length(s.sample.curve, pt.field, h, {p1, p2}), 4u);
  }
}

TEST(HasseWittTest, CubicsAgreeWithPointCounts) {
  // Elliptic curve over GF(p): ordinary iff #E(GF(p)) != 1 mod p.
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const auto f = Field::prime(p);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const auto c = random_smooth_curve(3, f, seed).curve;
      std::uint64_t n = 0;
      for (const auto& pt : projective_points(*f)) n += c.form().evaluate(pt) == 0;
      EXPECT_EQ(is_ordinary(c), n % p != 1 % p) << "p=" << p << " seed " << seed;
    }
  }
}

}  // namespace
}  // namespace charp::enumgeo
