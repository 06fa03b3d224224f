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


#include "charp/enumgeo/curve.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "charp/error.hpp"
#include "charp/ff/field.hpp"
#include "charp/poly/ops.hpp"

namespace charp::enumgeo {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

RingPtr plane_ring(const FieldPtr& field) {
  return poly::Ring::make(field, {"x0", "x1", "x2"}, poly::MonomialOrder::grevlex());
}

PlaneCurve::PlaneCurve(Polynomial form) : f_(std::move(form)), degree_(0) {
  if (f_.ring()->nvars() != 3) throw UsageError("a plane curve needs a form in three variables");
  if (f_.is_zero()) throw DegenerateInput("the zero form does not define a curve");
  if (!f_.is_homogeneous()) throw UsageError("plane curve equation is not homogeneous: " + f_.to_string());
  degree_ = f_.total_degree();
  if (degree_ == 0) throw DegenerateInput("a nonzero constant does not define a curve");
}

PlaneCurve PlaneCurve::over(const FieldPtr& extension) const {
  if (extension == field()) return *this;
  return PlaneCurve(f_.extend_scalars(plane_ring(extension)));
}

PlaneCurve parse_curve(const FieldPtr& field, const std::string& text) {
  return PlaneCurve(poly::parse_polynomial(plane_ring(field), text));
}

PlaneCurve read_curve_text(const std::string& text, const FieldPtr& field) {
  std::istringstream in(text);
  std::string line;
  std::string body;
  FieldPtr header;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("field", 0) == 0) {
      auto rest = trim(line.substr(5));
      if (!rest.empty() && rest[0] == ':') rest = trim(rest.substr(1));
      header = ff::parse_field(rest);
      continue;
    }
    body += line + " ";
  }
  if (body.empty()) throw ParseError("curve file has no equation");
  FieldPtr f = field ? field : header;
  if (!f) throw ParseError("curve file has no field header and no field was given");
  if (field && header && field != header) {
    throw UsageError("curve file is over " + header->name() + " but " + field->name() + " was requested");
  }
  return parse_curve(f, body);
}

PlaneCurve read_curve_file(const std::string& path, const FieldPtr& field) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open curve file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return read_curve_text(ss.str(), field);
}

void validate_flag(const Flag& flag) {
  if (flag.point.size() != 3 || flag.line.size() != 3) throw UsageError("flag needs two triples");
  const ff::Field& f = *flag.field;
  bool pz = true, lz = true;
  Elem dot = 0;
  for (unsigned i = 0; i < 3; ++i) {
    pz = pz && flag.point[i] == 0;
    lz = lz && flag.line[i] == 0;
    dot = f.add(dot, f.mul(flag.point[i], flag.line[i]));
  }
  if (pz || lz) throw UsageError("flag with a zero coordinate vector");
  if (dot != 0) throw UsageError("flag point does not lie on the line");
}

std::vector<Elem> normalize(const ff::Field& f, std::vector<Elem> v) {
  return zerodim::normalize_projective(f, v);
}

unsigned first_nonzero(const std::vector<Elem>& v) {
  for (unsigned i = 0; i < v.size(); ++i) {
    if (v[i]) return i;
  }
  throw UsageError("zero vector has no chart");
}

Ideal intersect_all(const std::vector<Ideal>& v, const GbOptions& opts) {
  Ideal acc = v.front();
  for (std::size_t k = 1; k < v.size(); ++k) acc = gb::intersect(acc, v[k], opts);
  return acc;
}

zerodim::Chart plane_chart(unsigned id, unsigned k, Ideal ideal) {
  return zerodim::Chart{
      id, std::move(ideal),
      [k](const ff::Field& f, std::span<const Elem> a) {
        std::vector<Elem> v;
        for (unsigned m = 0, j = 0; m < 3; ++m) v.push_back(m == k ? 1 : a[j++]);
        return normalize(f, v);
      },
      [k](const ff::Field& f, std::span<const Elem> key) -> std::optional<std::vector<Elem>> {
        if (key[k] == 0) return std::nullopt;
        const Elem inv = f.inv(key[k]);
        std::vector<Elem> out;
        for (unsigned m = 0; m < 3; ++m) {
          if (m != k) out.push_back(f.mul(key[m], inv));
        }
        return out;
      }};
}

namespace {

std::vector<zerodim::Chart> singular_charts(const PlaneCurve& c) {
  std::vector<Polynomial> gens{c.form()};
  for (auto& g : poly::gradient(c.form())) gens.push_back(g);
  std::vector<zerodim::Chart> charts;
  for (unsigned k = 0; k < 3; ++k) {
    const RingPtr r = poly::chart_ring(c.ring(), k);
    Ideal i(r);
    for (const auto& g : gens) i.add(poly::dehomogenize(g, k));
    charts.push_back(plane_chart(k, k, std::move(i)));
  }
  return charts;
}

}  // namespace

bool is_smooth(const PlaneCurve& c, const GbOptions& opts) {
  for (const auto& ch : singular_charts(c)) {
    if (!gb::groebner(ch.ideal, opts).is_unit()) return false;
  }
  return true;
}

std::vector<zerodim::SchemePoint> singular_points(const PlaneCurve& c, const zerodim::SolveOptions& opts) {
  auto charts = singular_charts(c);
  for (const auto& ch : charts) {
    if (!gb::groebner(ch.ideal, opts.gb).is_zero_dimensional()) {
      throw DegenerateInput("curve has a positive-dimensional singular locus");
    }
  }
  std::vector<zerodim::SchemePoint> out;
  std::vector<std::pair<unsigned, std::vector<Elem>>> seen;
  for (const auto& ch : charts) {
    for (auto& p : zerodim::solve_points(ch.ideal, opts)) {
      p.coords = ch.to_key(*p.field, p.coords);
      p = zerodim::canonical_representative(c.field(), p);
      std::pair<unsigned, std::vector<Elem>> key{p.field->degree(), p.coords};
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Elem> gradient_at(const PlaneCurve& c, const FieldPtr& field, const std::vector<Elem>& p) {
  const PlaneCurve cc = c.over(field);
  std::vector<Elem> g;
  for (const auto& d : poly::gradient(cc.form())) g.push_back(d.evaluate(p));
  return g;
}

unsigned intersection_multiplicity(const PlaneCurve& c, const FieldPtr& field,
                                   const std::vector<Elem>& line, const std::vector<Elem>& point) {
  const PlaneCurve cc = c.over(field);
  const RingPtr ring = cc.ring();
  const ff::Field& f = *field;
  Polynomial l(ring);
  for (unsigned i = 0; i < 3; ++i) l += Polynomial::variable(ring, i).scaled(line[i]);
  if (l.is_zero()) throw UsageError("zero line");
  // l is a component of C when F vanishes identically on it.
  {
    const unsigned j = first_nonzero(line);
    std::vector<Polynomial> sub;
    const Elem inv = f.inv(line[j]);
    for (unsigned i = 0; i < 3; ++i) {
      if (i != j) {
        sub.push_back(Polynomial::variable(ring, i));
        continue;
      }
      Polynomial s(ring);
      for (unsigned m = 0; m < 3; ++m) {
        if (m != j) s -= Polynomial::variable(ring, m).scaled(f.mul(line[m], inv));
      }
      sub.push_back(s);
    }
    if (cc.form().substitute(sub).is_zero()) throw DegenerateInput("the line is a component of the curve");
  }
  const unsigned k = first_nonzero(point);
  Ideal i(poly::chart_ring(ring, k));
  i.add(poly::dehomogenize(cc.form(), k));
  i.add(poly::dehomogenize(l, k));
  zerodim::SchemePoint p;
  p.field = field;
  p.base_image = field->gen();
  const Elem inv = f.inv(point[k]);
  for (unsigned m = 0; m < 3; ++m) {
    if (m != k) p.coords.push_back(f.mul(point[m], inv));
  }
  if (!zerodim::vanishes_at(i, p)) return 0;
  return zerodim::local_multiplicity(i, p);
}

SampledCurve random_smooth_curve(unsigned d, const FieldPtr& field, std::uint64_t seed,
                                 const CurvePredicate& pred, unsigned max_attempts,
                                 const GbOptions& opts) {
  if (d == 0) throw UsageError("curve degree must be positive");
  const RingPtr ring = plane_ring(field);
  std::vector<poly::Monomial> monos;
  for (unsigned a = 0; a <= d; ++a) {
    for (unsigned b = 0; a + b <= d; ++b) monos.push_back(poly::Monomial::from_exponents({a, b, d - a - b}));
  }
  Rng rng(seed);
  for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<poly::Term> t;
    for (const auto& m : monos) t.push_back({m, field->random(rng)});
    Polynomial f(ring, std::move(t));
    if (f.is_zero() || f.total_degree() != d) continue;
    PlaneCurve c(f);
    if (!is_smooth(c, opts)) continue;
    if (pred && !pred(c)) continue;
    return SampledCurve{c, attempt, seed};
  }
  throw SamplingFailure("no smooth curve of degree " + std::to_string(d) + " over " + field->name() +
                        " passed the checks in " + std::to_string(max_attempts) +
                        " attempts; try a larger field or another seed");
}

}  // namespace charp::enumgeo
