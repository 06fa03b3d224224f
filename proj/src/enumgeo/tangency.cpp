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

#include "charp/enumgeo/tangency.hpp"

#include "charp/error.hpp"
#include "charp/poly/ops.hpp"
#include "charp/zerodim/algebra.hpp"

namespace charp::enumgeo {
namespace {

struct LineFrame {
  unsigned j, a, b;
};

LineFrame line_frame(unsigned j) {
  if (j > 2) throw UsageError("line chart must be 0, 1 or 2");
  return {j, j == 0 ? 1u : 0u, j == 2 ? 1u : 2u};
}

std::vector<std::string> tangency_names(unsigned t, bool extra) {
  std::vector<std::string> names{"u", "v"};
  for (unsigned i = 1; i <= t; ++i) names.push_back("s" + std::to_string(i));
  if (extra) names.push_back("y");
  return names;
}

// (alpha, beta) of point i: P_a + s P_b, or s P_a + P_b when swapped.
std::pair<Polynomial, Polynomial> chart_weights(const RingPtr& r, unsigned i, bool swapped) {
  const Polynomial one = Polynomial::constant(r, 1);
  const Polynomial s = Polynomial::variable(r, 2 + i);
  return swapped ? std::make_pair(s, one) : std::make_pair(one, s);
}

std::vector<Polynomial> chart_point(const RingPtr& r, const LineFrame& fr, const Polynomial& alpha,
                                    const Polynomial& beta) {
  const Polynomial u = Polynomial::variable(r, 0);
  const Polynomial v = Polynomial::variable(r, 1);
  std::vector<Polynomial> p(3, Polynomial(r));
  p[fr.a] = alpha;
  p[fr.b] = beta;
  p[fr.j] = -(u * alpha + v * beta);
  return p;
}

std::vector<Elem> point_key(const ff::Field& f, const LineFrame& fr, Elem u, Elem v, Elem s, bool swapped) {
  const Elem alpha = swapped ? s : 1;
  const Elem beta = swapped ? 1 : s;
  std::vector<Elem> p(3);
  p[fr.a] = alpha;
  p[fr.b] = beta;
  p[fr.j] = f.neg(f.add(f.mul(u, alpha), f.mul(v, beta)));
  return normalize(f, p);
}

// Per point: F(p), then grad F(p) . P for each spanning point P, over `r`.
std::vector<Polynomial> tangency_conditions(const PlaneCurve& c, const std::vector<Polynomial>& p,
                                            const std::vector<std::vector<Polynomial>>& span) {
  std::vector<Polynomial> out{c.form().substitute(p)};
  std::vector<Polynomial> grad;
  for (const auto& g : poly::gradient(c.form())) grad.push_back(g.substitute(p));
  for (const auto& q : span) {
    Polynomial acc(p.front().ring());
    for (unsigned k = 0; k < 3; ++k) acc += grad[k] * q[k];
    out.push_back(acc);
  }
  return out;
}

void require_finite(const std::vector<zerodim::Chart>& charts, const GbOptions& opts) {
  for (const auto& ch : charts) {
    if (!gb::groebner(ch.ideal, opts).is_zero_dimensional()) {
      throw DegenerateInput("the tangency scheme is not finite (chart " + std::to_string(ch.id) + ")");
    }
  }
}

std::vector<Elem> projective_point(const ff::Field& f, Elem a, Elem b, Elem c) {
  return normalize(f, {a, b, c});
}

}  // namespace

RingPtr tangency_ring(const FieldPtr& field, unsigned t) {
  return poly::Ring::make(field, tangency_names(t, false), poly::MonomialOrder::grevlex());
}

Ideal tangency_ideal(const PlaneCurve& c, unsigned t, unsigned line_chart, unsigned point_charts,
                     bool exclude_diagonal, const GbOptions& opts) {
  if (t == 0) throw UsageError("tangency scheme needs t >= 1");
  if (t + 3 > poly::kMaxVars) throw UsageError("too many tangency points");
  const LineFrame fr = line_frame(line_chart);
  const bool sat = exclude_diagonal && t >= 2;
  const RingPtr r = poly::Ring::make(c.field(), tangency_names(t, sat), poly::MonomialOrder::grevlex());
  const Polynomial one = Polynomial::constant(r, 1);
  const Polynomial u = Polynomial::variable(r, 0);
  const Polynomial v = Polynomial::variable(r, 1);
  std::vector<Polynomial> pa(3, Polynomial(r)), pb(3, Polynomial(r));
  pa[fr.a] = one;
  pa[fr.j] = -u;
  pb[fr.b] = one;
  pb[fr.j] = -v;
  Ideal ideal(r);
  std::vector<std::pair<Polynomial, Polynomial>> w;
  for (unsigned i = 0; i < t; ++i) {
    w.push_back(chart_weights(r, i, (point_charts >> i) & 1));
    const auto p = chart_point(r, fr, w.back().first, w.back().second);
    for (auto& g : tangency_conditions(c, p, {pa, pb})) ideal.add(g);
  }
  if (!sat) return ideal;
  Polynomial prod = one;
  for (unsigned i = 0; i < t; ++i) {
    for (unsigned k = i + 1; k < t; ++k) prod *= w[i].first * w[k].second - w[i].second * w[k].first;
  }
  ideal.add(Polynomial::variable(r, t + 2) * prod - one);
  const auto g = gb::groebner(ideal, opts);
  if (!g.is_zero_dimensional()) return gb::eliminate(ideal, {t + 2}, opts);
  const zerodim::QuotientAlgebra a(g);
  std::vector<unsigned> keep;
  for (unsigned k = 0; k < t + 2; ++k) keep.push_back(k);
  return zerodim::joint_elimination({&a}, keep).ideal();
}

std::vector<zerodim::Chart> tangency_charts(const PlaneCurve& c, unsigned t, bool exclude_diagonal,
                                            const GbOptions& opts) {
  std::vector<zerodim::Chart> out;
  for (unsigned j = 0; j < 3; ++j) {
    const LineFrame fr = line_frame(j);
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
      out.push_back(zerodim::Chart{
          (j << t) | mask, tangency_ideal(c, t, j, mask, exclude_diagonal, opts),
          [fr, t, mask](const ff::Field& f, std::span<const Elem> a) {
            std::vector<Elem> line(3);
            line[fr.j] = 1;
            line[fr.a] = a[0];
            line[fr.b] = a[1];
            std::vector<Elem> key = normalize(f, line);
            for (unsigned i = 0; i < t; ++i) {
              const auto p = point_key(f, fr, a[0], a[1], a[2 + i], (mask >> i) & 1);
              key.insert(key.end(), p.begin(), p.end());
            }
            return key;
          },
          [fr, t, mask](const ff::Field& f, std::span<const Elem> key) -> std::optional<std::vector<Elem>> {
            if (key[fr.j] == 0) return std::nullopt;
            const Elem inv = f.inv(key[fr.j]);
            std::vector<Elem> out{f.mul(key[fr.a], inv), f.mul(key[fr.b], inv)};
            for (unsigned i = 0; i < t; ++i) {
              const Elem alpha = key[3 + 3 * i + fr.a];
              const Elem beta = key[3 + 3 * i + fr.b];
              const bool swapped = (mask >> i) & 1;
              const Elem den = swapped ? beta : alpha;
              if (den == 0) return std::nullopt;
              out.push_back(f.div(swapped ? alpha : beta, den));
            }
            return out;
          }});
    }
  }
  return out;
}

zerodim::SchemeReport tangency_scheme(const PlaneCurve& c, unsigned t, bool exclude_diagonal,
                                      const zerodim::SolveOptions& opts) {
  const auto charts = tangency_charts(c, t, exclude_diagonal, opts.gb);
  require_finite(charts, opts.gb);
  return zerodim::scheme_report(charts, opts);
}

zerodim::SchemeReport tangency_image_scheme(const PlaneCurve& c, unsigned t, bool exclude_diagonal,
                                            const zerodim::SolveOptions& opts) {
  std::vector<zerodim::Chart> charts;
  for (unsigned j = 0; j < 3; ++j) {
    std::vector<zerodim::QuotientAlgebra> parts;
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
      const auto g = gb::groebner(tangency_ideal(c, t, j, mask, exclude_diagonal, opts.gb), opts.gb);
      if (!g.is_zero_dimensional()) {
        throw DegenerateInput("the tangency scheme is not finite (chart " + std::to_string((j << t) | mask) + ")");
      }
      parts.emplace_back(g);
    }
    std::vector<const zerodim::QuotientAlgebra*> ptrs;
    for (const auto& a : parts) ptrs.push_back(&a);
    charts.push_back(plane_chart(j, j, zerodim::joint_elimination(ptrs, {0, 1}).ideal()));
  }
  return zerodim::scheme_report(charts, opts);
}

unsigned gamma_dual_length(const PlaneCurve& c, const FieldPtr& field, const std::vector<Elem>& line,
                           const std::vector<std::vector<Elem>>& points) {
  const ff::Field& f = *field;
  const unsigned t = static_cast<unsigned>(points.size());
  if (t == 0 || 2 * t > poly::kMaxVars) throw UsageError("gamma length needs 1 to 4 points");
  for (const auto& p : points) validate_flag(Flag{p, line, field});
  const PlaneCurve cc = c.over(field);
  std::vector<std::string> names;
  for (unsigned i = 0; i < t; ++i) {
    names.push_back("y" + std::to_string(i) + "a");
    names.push_back("y" + std::to_string(i) + "b");
  }
  const RingPtr r = poly::Ring::make(field, names, poly::MonomialOrder::grevlex());
  const auto grad = poly::gradient(cc.form());
  Ideal ideal(r);
  zerodim::SchemePoint at;
  at.field = field;
  at.base_image = field->gen();
  for (unsigned i = 0; i < t; ++i) {
    const unsigned k = first_nonzero(points[i]);
    std::vector<Polynomial> p;
    for (unsigned m = 0, n = 0; m < 3; ++m) {
      p.push_back(m == k ? Polynomial::constant(r, 1) : Polynomial::variable(r, 2 * i + n++));
    }
    const Elem inv = f.inv(points[i][k]);
    for (unsigned m = 0; m < 3; ++m) {
      if (m != k) at.coords.push_back(f.mul(points[i][m], inv));
    }
    ideal.add(cc.form().substitute(p));
    Polynomial incidence(r);
    for (unsigned m = 0; m < 3; ++m) incidence += p[m].scaled(line[m]);
    ideal.add(incidence);
    std::vector<Polynomial> g;
    for (const auto& d : grad) g.push_back(d.substitute(p));
    for (unsigned m = 0; m < 3; ++m) {
      for (unsigned n = m + 1; n < 3; ++n) ideal.add(g[n].scaled(line[m]) - g[m].scaled(line[n]));
    }
  }
  if (!zerodim::vanishes_at(ideal, at)) throw UsageError("gamma length: the line is not tangent at every point");
  return zerodim::local_multiplicity(ideal, at);
}

unsigned gamma_length(const PlaneCurve& c, const Flag& flag) {
  return gamma_dual_length(c, flag.field, flag.line, {flag.point});
}

std::optional<Flag> find_simple_tangent(const PlaneCurve& c, const FieldPtr& field) {
  const FieldPtr k = field ? field : c.field();
  if (k->order() > (1u << 16)) throw UsageError("point scan needs a field with at most 2^16 elements");
  const ff::Field& f = *k;
  const PlaneCurve cc = c.over(k);
  std::vector<std::vector<Elem>> pts{{0, 0, 1}};
  for (Elem b = 0; b < f.order(); ++b) pts.push_back({0, 1, b});
  for (Elem a = 0; a < f.order(); ++a) {
    for (Elem b = 0; b < f.order(); ++b) pts.push_back({1, a, b});
  }
  for (const auto& p : pts) {
    if (cc.form().evaluate(p) != 0) continue;
    const auto grad = gradient_at(c, k, p);
    if (!grad[0] && !grad[1] && !grad[2]) continue;
    const auto line = projective_point(f, grad[0], grad[1], grad[2]);
    try {
      if (intersection_multiplicity(c, k, line, p) == 2) return Flag{p, line, k};
    } catch (const DegenerateInput&) {
    }
  }
  return std::nullopt;
}

ff::Matrix hasse_witt_matrix(const PlaneCurve& c) {
  const std::uint64_t p = c.field()->characteristic();
  if (p > 31) throw UsageError("Hasse-Witt matrix is only computed for p <= 31");
  const unsigned d = c.degree();
  std::vector<poly::Monomial> basis;
  for (unsigned a = 1; a + 2 <= d; ++a) {
    for (unsigned b = 1; a + b + 1 <= d; ++b) basis.push_back(poly::Monomial::from_exponents({a, b, d - a - b}));
  }
  const Polynomial power = c.form().pow(static_cast<unsigned>(p - 1));
  ff::Matrix m(c.field(), basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<unsigned> e(3);
      bool ok = true;
      for (unsigned v = 0; v < 3; ++v) {
        const int x = static_cast<int>(p * basis[i][v]) - static_cast<int>(basis[k][v]);
        ok = ok && x >= 0;
        e[v] = ok ? static_cast<unsigned>(x) : 0;
      }
      m.at(i, k) = ok ? power.coeff(poly::Monomial::from_exponents(e)) : 0;
    }
  }
  return m;
}

bool is_ordinary(const PlaneCurve& c) {
  if (!is_smooth(c)) return false;
  const ff::Matrix m = hasse_witt_matrix(c);
  return m.rank() == m.rows();
}

ThetaReport theta_scheme_quartic(const PlaneCurve& c, const zerodim::SolveOptions& opts) {
  if (c.degree() != 4) throw DegenerateInput("the theta scheme is built for plane quartics");
  ThetaReport rep;
  rep.pairs = tangency_scheme(c, 2, true, opts);
  rep.image = tangency_image_scheme(c, 2, true, opts);
  rep.pushforward_degree = rep.pairs.total_degree / rep.ordering_factor;
  if (rep.pairs.uniform_multiplicity && rep.pairs.radical_degree == rep.ordering_factor * rep.image.radical_degree) {
    rep.pushforward_multiplicity = *rep.pairs.uniform_multiplicity;
  }
  if (c.field()->characteristic() <= 31) rep.ordinary = is_ordinary(c);
  return rep;
}

SampledTheta sample_theta_quartic(const FieldPtr& field, std::uint64_t seed, unsigned max_attempts,
                                  const zerodim::SolveOptions& opts) {
  SampledTheta out{SampledCurve{PlaneCurve(Polynomial::variable(plane_ring(field), 0)), 0, seed}, {}, 0};
  const bool char2 = field->characteristic() == 2;
  auto pred = [&](const PlaneCurve& c) {
    if (char2 && !is_ordinary(c)) {
      ++out.rejected;
      return false;
    }
    try {
      out.report = theta_scheme_quartic(c, opts);
    } catch (const ResourceLimit&) {
      ++out.rejected;
      return false;
    } catch (const DegenerateInput&) {
      ++out.rejected;
      return false;
    }
    return true;
  };
  out.sample = random_smooth_curve(4, field, seed, pred, max_attempts, opts.gb);
  return out;
}

}  // namespace charp::enumgeo
