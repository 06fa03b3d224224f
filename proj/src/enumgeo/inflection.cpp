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


#include "charp/enumgeo/inflection.hpp"

#include "charp/error.hpp"
#include "charp/ff/matrix.hpp"
#include "charp/poly/ops.hpp"

namespace charp::enumgeo {
namespace {

using zerodim::SchemePoint;

// Vectors spanning the kernel of l.
std::vector<std::vector<Polynomial>> perp(const std::vector<Polynomial>& l, const RingPtr& ring) {
  const Polynomial z(ring);
  return {{z, l[2], -l[1]}, {-l[2], z, l[0]}, {l[1], -l[0], z}};
}

std::vector<Polynomial> flag_conditions(const Polynomial& f, const std::vector<Polynomial>& l,
                                        const RingPtr& ring) {
  std::vector<Polynomial> out;
  auto vs = perp(l, ring);
  // Directions only move the point coordinates.
  for (auto& v : vs) v.resize(ring->nvars(), Polynomial(ring));
  for (const auto& v : vs) out.push_back(poly::gradient_dot(f, v));
  for (const auto& v : vs) out.push_back(poly::hessian_form(f, v));
  return out;
}

// Maps the six flag-ring variables into the chart ring.
std::vector<Polynomial> chart_images(const RingPtr& chart, unsigned i, unsigned j) {
  std::vector<Polynomial> img;
  unsigned next = 0;
  for (unsigned k = 0; k < 6; ++k) {
    const bool fixed = k < 3 ? k == i : k - 3 == j;
    img.push_back(fixed ? Polynomial::constant(chart, 1) : Polynomial::variable(chart, next++));
  }
  return img;
}

std::vector<Elem> insert_one(std::span<const Elem> a, unsigned at) {
  std::vector<Elem> v;
  for (unsigned m = 0, k = 0; m < 3; ++m) v.push_back(m == at ? 1 : a[k++]);
  return v;
}

std::optional<std::vector<Elem>> drop_chart(const ff::Field& f, std::span<const Elem> key, unsigned at) {
  if (key[at] == 0) return std::nullopt;
  const Elem inv = f.inv(key[at]);
  std::vector<Elem> out;
  for (unsigned m = 0; m < 3; ++m) {
    if (m != at) out.push_back(f.mul(key[m], inv));
  }
  return out;
}

void require_finite(const std::vector<zerodim::Chart>& charts, const GbOptions& opts) {
  for (const auto& ch : charts) {
    if (!gb::groebner(ch.ideal, opts).is_zero_dimensional()) {
      throw DegenerateInput("the inflection flag scheme is not finite (chart " + std::to_string(ch.id) +
                            "); the curve contains a line or is otherwise special");
    }
  }
}

}  // namespace

RingPtr flag_ring(const FieldPtr& field) {
  return poly::Ring::make(field, {"x0", "x1", "x2", "l0", "l1", "l2"}, poly::MonomialOrder::grevlex());
}

std::vector<Polynomial> inflection_flag_equations(const PlaneCurve& c) {
  const RingPtr r = flag_ring(c.field());
  const Polynomial f = c.form().in_ring(r, std::vector<int>{0, 1, 2});
  std::vector<Polynomial> x, l;
  for (unsigned k = 0; k < 3; ++k) {
    x.push_back(Polynomial::variable(r, k));
    l.push_back(Polynomial::variable(r, 3 + k));
  }
  std::vector<Polynomial> out{l[0] * x[0] + l[1] * x[1] + l[2] * x[2], f};
  for (auto& g : flag_conditions(f, l, r)) out.push_back(std::move(g));
  return out;
}

Ideal inflection_flag_ideal(const PlaneCurve& c, unsigned point_chart, unsigned line_chart) {
  if (point_chart > 2 || line_chart > 2) throw UsageError("chart index out of range");
  std::vector<std::string> names;
  for (unsigned k = 0; k < 3; ++k) {
    if (k != point_chart) names.push_back("x" + std::to_string(k));
  }
  for (unsigned k = 0; k < 3; ++k) {
    if (k != line_chart) names.push_back("l" + std::to_string(k));
  }
  const RingPtr chart = poly::Ring::make(c.field(), names, poly::MonomialOrder::grevlex());
  const auto img = chart_images(chart, point_chart, line_chart);
  Ideal out(chart);
  for (const auto& g : inflection_flag_equations(c)) {
    Polynomial h = g.substitute(img);
    if (!h.is_zero()) out.add(std::move(h));
  }
  return out;
}

std::vector<zerodim::Chart> inflection_flag_charts(const PlaneCurve& c) {
  std::vector<zerodim::Chart> out;
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      out.push_back(zerodim::Chart{
          3 * i + j, inflection_flag_ideal(c, i, j),
          [i, j](const ff::Field& f, std::span<const Elem> a) {
            auto p = normalize(f, insert_one(a.subspan(0, 2), i));
            auto l = normalize(f, insert_one(a.subspan(2, 2), j));
            p.insert(p.end(), l.begin(), l.end());
            return p;
          },
          [i, j](const ff::Field& f, std::span<const Elem> key) -> std::optional<std::vector<Elem>> {
            auto p = drop_chart(f, key.subspan(0, 3), i);
            auto l = drop_chart(f, key.subspan(3, 3), j);
            if (!p || !l) return std::nullopt;
            p->insert(p->end(), l->begin(), l->end());
            return p;
          }});
    }
  }
  return out;
}

zerodim::SchemeReport inflection_point_scheme(const PlaneCurve& c, const zerodim::SolveOptions& opts) {
  std::vector<zerodim::Chart> charts;
  for (unsigned i = 0; i < 3; ++i) {
    std::vector<Ideal> parts;
    for (unsigned j = 0; j < 3; ++j) parts.push_back(gb::eliminate(inflection_flag_ideal(c, i, j), {2, 3}, opts.gb));
    charts.push_back(plane_chart(i, i, intersect_all(parts, opts.gb)));
  }
  return zerodim::scheme_report(charts, opts);
}

zerodim::SchemeReport gauss_image_scheme(const PlaneCurve& c, const zerodim::SolveOptions& opts) {
  require_finite(inflection_flag_charts(c), opts.gb);
  std::vector<zerodim::Chart> charts;
  for (unsigned j = 0; j < 3; ++j) {
    std::vector<Ideal> parts;
    for (unsigned i = 0; i < 3; ++i) parts.push_back(gb::eliminate(inflection_flag_ideal(c, i, j), {0, 1}, opts.gb));
    charts.push_back(plane_chart(j, j, intersect_all(parts, opts.gb)));
  }
  return zerodim::scheme_report(charts, opts);
}

namespace {

// Length at p of {q : l(q) = 0, F(q) = 0, flag conditions at (q, l)} with l fixed.
unsigned line_fiber_length(const PlaneCurve& cc, const std::vector<Elem>& point, const std::vector<Elem>& line) {
  const RingPtr r = cc.ring();
  std::vector<Polynomial> l;
  for (Elem e : line) l.push_back(Polynomial::constant(r, e));
  Polynomial incidence(r);
  for (unsigned k = 0; k < 3; ++k) incidence += Polynomial::variable(r, k).scaled(line[k]);
  std::vector<Polynomial> gens{incidence, cc.form()};
  for (auto& g : flag_conditions(cc.form(), l, r)) gens.push_back(std::move(g));
  const unsigned k = first_nonzero(point);
  Ideal i(poly::chart_ring(r, k));
  for (const auto& g : gens) {
    Polynomial h = poly::dehomogenize(g, k);
    if (!h.is_zero()) i.add(std::move(h));
  }
  if (!gb::groebner(i).is_zero_dimensional()) return 0;
  SchemePoint p;
  p.field = cc.field();
  p.base_image = cc.field()->gen();
  p.coords = *drop_chart(*cc.field(), point, k);
  return zerodim::local_multiplicity(i, p);
}

}  // namespace

InflectionReport inflection_scheme(const PlaneCurve& c, const zerodim::SolveOptions& opts) {
  if (c.degree() < 2) throw DegenerateInput("a line has no inflection points");
  const auto charts = inflection_flag_charts(c);
  require_finite(charts, opts.gb);
  InflectionReport rep;
  rep.flags = zerodim::scheme_report(charts, opts);
  rep.points = inflection_point_scheme(c, opts);
  rep.hypotheses_hold = true;
  for (const auto& fp : rep.flags.points) {
    FlagCheck ck;
    ck.field = fp.field;
    ck.point.assign(fp.coords.begin(), fp.coords.begin() + 3);
    ck.line.assign(fp.coords.begin() + 3, fp.coords.end());
    ck.residue_degree = fp.residue_degree;
    ck.multiplicity = fp.multiplicity;
    const auto& chart = charts.at(fp.chart);
    SchemePoint local = fp;
    local.coords = *chart.from_key(*fp.field, fp.coords);
    ck.tangent_space_dim = zerodim::tangent_space_dimension(chart.ideal, local);
    const auto grad = gradient_at(c, fp.field, ck.point);
    ck.point_smooth = grad[0] || grad[1] || grad[2];
    if (ck.point_smooth) ck.line_is_tangent = normalize(*fp.field, grad) == ck.line;
    const PlaneCurve cc = c.over(fp.field);
    try {
      ck.contact = intersection_multiplicity(cc, fp.field, ck.line, ck.point);
    } catch (const DegenerateInput&) {
      ck.contact = 0;
    }
    ck.line_fiber_length = line_fiber_length(cc, ck.point, ck.line);
    rep.hypotheses_hold = rep.hypotheses_hold && ck.point_smooth && ck.line_is_tangent && ck.contact == 3;
    rep.checks.push_back(std::move(ck));
  }
  return rep;
}

SampledInflection sample_inflection_curve(unsigned d, const FieldPtr& field, std::uint64_t seed,
                                          unsigned max_attempts, const zerodim::SolveOptions& opts) {
  SampledInflection out{SampledCurve{PlaneCurve(Polynomial::variable(plane_ring(field), 0)), 0, seed}, {}, 0, 0};
  auto pred = [&](const PlaneCurve& c) {
    try {
      out.report = inflection_scheme(c, opts);
    } catch (const ResourceLimit&) {
      ++out.rejected_resource;
      return false;
    }
    if (!out.report.hypotheses_hold) ++out.rejected_hypotheses;
    return out.report.hypotheses_hold;
  };
  out.sample = random_smooth_curve(d, field, seed, pred, max_attempts, opts.gb);
  return out;
}

FiberLinearity fiber_linearity_check(const Flag& flag, unsigned d) {
  validate_flag(flag);
  const FieldPtr& field = flag.field;
  const RingPtr r = plane_ring(field);
  std::vector<Polynomial> l;
  for (Elem e : flag.line) l.push_back(Polynomial::constant(r, e));
  std::vector<Polynomial> monos;
  for (unsigned a = 0; a <= d; ++a) {
    for (unsigned b = 0; a + b <= d; ++b) {
      monos.push_back(Polynomial::monomial(r, poly::Monomial::from_exponents({a, b, d - a - b})));
    }
  }
  auto conditions = [&](const Polynomial& f) {
    std::vector<Elem> v{f.evaluate(flag.point)};
    for (const auto& g : flag_conditions(f, l, r)) v.push_back(g.evaluate(flag.point));
    return v;
  };
  ff::Matrix m(field, 7, monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k) {
    const auto col = conditions(monos[k]);
    for (std::size_t i = 0; i < 7; ++i) m.at(i, k) = col[i];
  }
  // The conditions of a random combination are the same combination of the
  // columns.
  Rng rng(mix_seed(d, field->order()));
  std::vector<Elem> a(monos.size());
  Polynomial f(r);
  for (std::size_t k = 0; k < monos.size(); ++k) {
    a[k] = field->random(rng);
    f += monos[k].scaled(a[k]);
  }
  FiberLinearity out;
  out.is_linear = m.apply(a) == conditions(f);
  out.codim = static_cast<unsigned>(m.rank());
  return out;
}

}  // namespace charp::enumgeo
