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


#include "charp/zerodim/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>

#include <json.hpp>

namespace charp::zerodim {
namespace {

void accumulate(ResourceStats& into, const ResourceStats& s) {
  into.pairs_processed += s.pairs_processed;
  into.pairs_skipped += s.pairs_skipped;
  into.zero_reductions += s.zero_reductions;
  into.basis_size = std::max(into.basis_size, s.basis_size);
  into.max_degree = std::max(into.max_degree, s.max_degree);
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::vector<Elem> normalize_projective(const ff::Field& f, std::span<const Elem> v) {
  std::vector<Elem> out(v.begin(), v.end());
  auto it = std::find_if(out.begin(), out.end(), [](Elem e) { return e != 0; });
  if (it == out.end()) throw UsageError("projective point with all coordinates zero");
  const Elem inv = f.inv(*it);
  for (auto& e : out) e = f.mul(e, inv);
  return out;
}

SchemeReport scheme_report(const std::vector<Chart>& charts, const SolveOptions& opts) {
  if (charts.empty()) throw UsageError("scheme_report: no charts");
  SchemeReport rep;
  rep.base = charts.front().ideal.ring()->field();
  rep.seed = opts.seed;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  // Canonical key -> index into rep.points.
  std::map<std::pair<unsigned, std::vector<Elem>>, std::size_t> seen;
  for (const auto& chart : charts) {
    if (chart.ideal.ring()->field() != rep.base) throw UsageError("scheme_report: charts over different fields");
    const auto g = gb::groebner(chart.ideal, opts.gb);
    accumulate(rep.stats, g.stats());
    if (!g.is_zero_dimensional()) throw UsageError("scheme_report: chart ideal is not zero-dimensional");
    ChartSummary cs;
    cs.id = chart.id;
    cs.degree = g.is_unit() ? 0 : g.degree();
    cs.fingerprint = gb::fingerprint(g);
    h = (h ^ cs.fingerprint) * 0x100000001b3ULL;
    std::size_t conserved = 0;
    const auto pts = solve_points(chart.ideal, opts);
    const std::optional<QuotientAlgebra> alg =
        pts.empty() ? std::nullopt : std::optional<QuotientAlgebra>(std::in_place, g);
    for (auto pt : pts) {
      pt.chart = chart.id;
      pt.multiplicity = local_multiplicity(*alg, pt, opts);
      conserved += static_cast<std::size_t>(pt.residue_degree) * pt.multiplicity;
      SchemePoint proj = pt;
      proj.coords = chart.to_key(*pt.field, pt.coords);
      proj = canonical_representative(rep.base, proj);
      const auto key = std::make_pair(proj.field->degree(), proj.coords);
      const auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(key, rep.points.size());
        rep.points.push_back(std::move(proj));
      } else if (rep.points[it->second].multiplicity != pt.multiplicity) {
        throw InternalError("scheme_report: multiplicity differs between charts " +
                            std::to_string(rep.points[it->second].chart) + " and " +
                            std::to_string(chart.id));
      }
      ++cs.points;
    }
    if (conserved != cs.degree) {
      throw InternalError("scheme_report: chart " + std::to_string(chart.id) + " has degree " +
                          std::to_string(cs.degree) + " but its points account for " +
                          std::to_string(conserved));
    }
    rep.charts.push_back(cs);
  }
  rep.fingerprint = charts.size() == 1 ? rep.charts.front().fingerprint : h;
  std::sort(rep.points.begin(), rep.points.end(), [](const SchemePoint& a, const SchemePoint& b) {
    if (a.residue_degree != b.residue_degree) return a.residue_degree < b.residue_degree;
    return a.coords < b.coords;
  });
  for (const auto& p : rep.points) {
    rep.total_degree += static_cast<std::size_t>(p.residue_degree) * p.multiplicity;
    rep.radical_degree += p.residue_degree;
  }
  if (!rep.points.empty()) {
    const unsigned m = rep.points.front().multiplicity;
    if (std::all_of(rep.points.begin(), rep.points.end(),
                    [m](const SchemePoint& p) { return p.multiplicity == m; })) {
      rep.uniform_multiplicity = m;
    }
  }
  return rep;
}

SchemeReport affine_report(const Ideal& ideal, const SolveOptions& opts) {
  Chart c{0, ideal,
          [](const ff::Field&, std::span<const Elem> a) { return std::vector<Elem>(a.begin(), a.end()); },
          [](const ff::Field&, std::span<const Elem> k) {
            return std::optional<std::vector<Elem>>(std::vector<Elem>(k.begin(), k.end()));
          }};
  return scheme_report({c}, opts);
}

std::string to_json(const SchemeReport& r, int indent) {
  using nlohmann::json;
  json j;
  j["base_field"] = r.base->name();
  j["fingerprint"] = hex64(r.fingerprint);
  j["total_degree"] = r.total_degree;
  j["radical_degree"] = r.radical_degree;
  j["uniform_multiplicity"] = r.uniform_multiplicity ? json(*r.uniform_multiplicity) : json(nullptr);
  j["seed"] = r.seed;
  json pts = json::array();
  for (const auto& p : r.points) {
    json c = json::array();
    for (Elem e : p.coords) c.push_back(p.field->format(e));
    pts.push_back({{"coordinates", c},
                   {"field", p.field->name()},
                   {"chart", p.chart},
                   {"residue_degree", p.residue_degree},
                   {"multiplicity", p.multiplicity}});
  }
  j["points"] = pts;
  json ch = json::array();
  for (const auto& c : r.charts) {
    ch.push_back({{"id", c.id}, {"degree", c.degree}, {"points", c.points}, {"fingerprint", hex64(c.fingerprint)}});
  }
  j["charts"] = ch;
  j["stats"] = {{"pairs_processed", r.stats.pairs_processed},
                {"pairs_skipped", r.stats.pairs_skipped},
                {"zero_reductions", r.stats.zero_reductions},
                {"basis_size", r.stats.basis_size},
                {"max_degree", r.stats.max_degree}};
  return j.dump(indent);
}

}  // namespace charp::zerodim
