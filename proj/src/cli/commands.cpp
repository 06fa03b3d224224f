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


#include "charp/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "charp/cli/verify.hpp"
#include "charp/enumgeo/inflection.hpp"
#include "charp/enumgeo/tangency.hpp"
#include "charp/formulas/formulas.hpp"

namespace charp::cli {
namespace {

using enumgeo::PlaneCurve;

struct CurveArgs {
  std::string field;
  unsigned degree = 0;
  std::string curve;
  bool random = false;
  std::uint64_t seed = 1;
  std::uint64_t max_pairs = 0;
  unsigned max_attempts = enumgeo::kDefaultMaxAttempts;
  std::string format = "human";
  std::string out;
};

void add_output_flags(CLI::App* app, CurveArgs& a) {
  app->add_option("--format", a.format, "human or json")->check(CLI::IsMember({"human", "json"}));
  app->add_option("--out", a.out, "write the report to this file");
  app->add_option("--max-pairs", a.max_pairs, "S-pair cap per Groebner basis");
  app->add_option("--max-attempts", a.max_attempts, "rejection sampling attempts");
}

void add_curve_flags(CLI::App* app, CurveArgs& a) {
  app->add_option("--field", a.field, "GF(p), GF(p^k) or GF(q)");
  app->add_option("--degree", a.degree, "degree of a random curve");
  app->add_option("--curve", a.curve, "curve file");
  app->add_flag("--random", a.random, "sample a random smooth curve");
  app->add_option("--seed", a.seed, "sampling seed");
  add_output_flags(app, a);
}

zerodim::SolveOptions solve_options(const CurveArgs& a) {
  if (a.max_pairs) gb::default_options().max_pairs = a.max_pairs;
  zerodim::SolveOptions o;
  o.gb = gb::default_options();
  return o;
}

FieldPtr field_of(const CurveArgs& a) { return a.field.empty() ? nullptr : ff::parse_field(a.field); }

/// Curve from --curve, or nullopt when --random was given.
std::optional<PlaneCurve> curve_from_file(const CurveArgs& a) {
  if (a.random == !a.curve.empty()) throw UsageError("give exactly one of --curve FILE and --random");
  if (a.random) {
    if (a.field.empty()) throw UsageError("--random needs --field");
    return std::nullopt;
  }
  return enumgeo::read_curve_file(a.curve, field_of(a));
}

json curve_json(const PlaneCurve& c, const CurveArgs& a, const std::optional<enumgeo::SampledCurve>& s) {
  json j{{"field", c.field()->name()}, {"degree", c.degree()}, {"curve", c.to_string()}};
  if (s) {
    j["source"] = "random";
    j["seed"] = s->seed;
    j["attempts"] = s->attempts;
  } else {
    j["source"] = "file";
    j["seed"] = a.seed;
  }
  return j;
}

json prediction_json(const formulas::CountPrediction& p) {
  return {{"problem", p.problem},
          {"characteristic", p.characteristic},
          {"points", p.points},
          {"multiplicity", p.multiplicity},
          {"total", p.total}};
}

bool matches(const zerodim::SchemeReport& r, const formulas::CountPrediction& p) {
  return r.radical_degree == p.points && r.total_degree == p.total && r.uniform_multiplicity &&
         *r.uniform_multiplicity == p.multiplicity;
}

std::string prediction_text(const formulas::CountPrediction& p) {
  return std::to_string(p.points) + " points x" + std::to_string(p.multiplicity) + ", total " +
         std::to_string(p.total);
}

void point_lines(std::ostream& os, const zerodim::SchemeReport& r) {
  for (const auto& p : r.points) {
    os << "  " << format_point(*p.field, p.coords) << "  residue degree " << p.residue_degree << "  multiplicity "
       << p.multiplicity;
    if (p.residue_degree > 1) os << "  over " << p.field->name();
    os << "\n";
  }
}

json document(const std::string& command, json body, bool pass) {
  body["tool"] = "charp";
  body["version"] = tool_version();
  body["command"] = command;
  body["verdict"] = pass ? "PASS" : "FAIL";
  return body;
}

void emit(const CurveArgs& a, const std::string& human, const json& doc, std::ostream& out) {
  const std::string text = a.format == "json" ? doc.dump(2) + "\n" : human;
  if (a.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw UsageError("cannot write '" + a.out + "'");
  f << text;
  out << "verdict: " << doc.value("verdict", "") << " (report written to " << a.out << ")\n";
}

int cmd_inflect(const CurveArgs& a, std::ostream& out) {
  const auto opts = solve_options(a);
  auto file = curve_from_file(a);
  std::optional<enumgeo::SampledCurve> sample;
  std::optional<enumgeo::InflectionReport> rep;
  if (!file) {
    if (a.degree == 0) throw UsageError("--random needs --degree");
    auto s = enumgeo::sample_inflection_curve(a.degree, field_of(a), a.seed, a.max_attempts, opts);
    sample = s.sample;
    rep = std::move(s.report);
  }
  const PlaneCurve c = file ? *file : sample->curve;
  if (!rep) rep = enumgeo::inflection_scheme(c, opts);
  const auto pred = formulas::plucker_counts(c.degree(), c.field()->characteristic());
  const bool pass = matches(rep->flags, pred);

  std::ostringstream h;
  h << "curve: " << c.to_string() << " over " << c.field()->name() << " (degree " << c.degree() << ")\n";
  if (sample) h << "sampled with seed " << sample->seed << " after " << sample->attempts << " attempt(s)\n";
  h << "inflection flags: " << report_summary(rep->flags) << "\n";
  json checks = json::array();
  for (std::size_t k = 0; k < rep->checks.size(); ++k) {
    const auto& ck = rep->checks[k];
    const auto& fp = rep->flags.points[k];
    h << "  point " << format_point(*ck.field, ck.point) << " line " << format_point(*ck.field, ck.line)
      << "  residue degree " << fp.residue_degree << "  multiplicity " << fp.multiplicity << "  tangent dim "
      << ck.tangent_space_dim << "  smooth " << (ck.point_smooth ? "yes" : "no") << "  contact " << ck.contact
      << "\n";
    checks.push_back({{"point", format_point(*ck.field, ck.point)},
                      {"line", format_point(*ck.field, ck.line)},
                      {"field", ck.field->name()},
                      {"residue_degree", ck.residue_degree},
                      {"multiplicity", ck.multiplicity},
                      {"tangent_space_dim", ck.tangent_space_dim},
                      {"point_smooth", ck.point_smooth},
                      {"line_is_tangent", ck.line_is_tangent},
                      {"contact", ck.contact},
                      {"line_fiber_length", ck.line_fiber_length}});
  }
  h << "inflection points: " << report_summary(rep->points) << "\n";
  point_lines(h, rep->points);
  h << "expected: " << prediction_text(pred) << "\n";
  h << "hypotheses (smooth point, tangent line, contact 3): " << (rep->hypotheses_hold ? "hold" : "fail") << "\n";
  h << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";

  const json doc = document("inflect",
                            {{"curve", curve_json(c, a, sample)},
                             {"flags", report_json(rep->flags)},
                             {"points", report_json(rep->points)},
                             {"checks", checks},
                             {"hypotheses_hold", rep->hypotheses_hold},
                             {"expected", prediction_json(pred)}},
                            pass);
  emit(a, h.str(), doc, out);
  return pass ? kExitPass : kExitFail;
}

struct ThetaRun {
  PlaneCurve curve;
  std::optional<enumgeo::SampledCurve> sample;
  enumgeo::ThetaReport report;
};

ThetaRun theta_run(const CurveArgs& a, const zerodim::SolveOptions& opts) {
  auto file = curve_from_file(a);
  if (file) return {*file, std::nullopt, enumgeo::theta_scheme_quartic(*file, opts)};
  if (a.degree != 0 && a.degree != 4) throw DegenerateInput("theta needs a quartic");
  auto s = enumgeo::sample_theta_quartic(field_of(a), a.seed, a.max_attempts, opts);
  return {s.sample.curve, s.sample, std::move(s.report)};
}

int cmd_theta(const CurveArgs& a, std::ostream& out) {
  const auto opts = solve_options(a);
  const auto run = theta_run(a, opts);
  const auto& rep = run.report;
  const auto pred = formulas::theta_counts(3, run.curve.field()->characteristic());
  const bool pass = matches(rep.image, pred);

  std::ostringstream h;
  h << "curve: " << run.curve.to_string() << " over " << run.curve.field()->name() << "\n";
  if (run.sample) h << "sampled with seed " << run.sample->seed << " after " << run.sample->attempts << " attempt(s)\n";
  if (rep.ordinary) h << "ordinary: " << (*rep.ordinary ? "yes" : "no") << "\n";
  h << "ordered contact pairs: " << report_summary(rep.pairs) << "\n";
  h << "image in the dual plane: " << report_summary(rep.image) << "\n";
  point_lines(h, rep.image);
  h << "pushforward of the pairs: degree " << rep.pushforward_degree;
  if (rep.pushforward_multiplicity) h << ", multiplicity " << *rep.pushforward_multiplicity << " at every line";
  h << "\nexpected image: " << prediction_text(pred) << "\n";
  h << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";

  const json doc =
      document("theta",
               {{"curve", curve_json(run.curve, a, run.sample)},
                {"image", report_json(rep.image)},
                {"pairs", report_json(rep.pairs)},
                {"ordering_factor", rep.ordering_factor},
                {"pushforward_degree", rep.pushforward_degree},
                {"pushforward_multiplicity",
                 rep.pushforward_multiplicity ? json(*rep.pushforward_multiplicity) : json(nullptr)},
                {"ordinary", rep.ordinary ? json(*rep.ordinary) : json(nullptr)},
                {"expected", prediction_json(pred)}},
               pass);
  emit(a, h.str(), doc, out);
  return pass ? kExitPass : kExitFail;
}

int cmd_tangency(const CurveArgs& a, unsigned t, std::ostream& out) {
  const auto opts = solve_options(a);
  std::ostringstream h;
  json body;
  bool pass = true;
  if (t == 1) {
    auto file = curve_from_file(a);
    std::optional<enumgeo::SampledCurve> sample;
    if (!file) {
      if (a.degree < 2) throw UsageError("--random needs --degree >= 2");
      sample = enumgeo::random_smooth_curve(a.degree, field_of(a), a.seed, {}, a.max_attempts, opts.gb);
    }
    const PlaneCurve c = file ? *file : sample->curve;
    const auto flag = enumgeo::find_simple_tangent(c);
    if (!flag) throw DegenerateInput("no rational point with a simple tangent");
    const FieldPtr& f = c.field();
    const unsigned contact = enumgeo::intersection_multiplicity(c, f, flag->line, flag->point);
    const unsigned len = enumgeo::gamma_length(c, *flag);
    const unsigned expect = f->characteristic() == 2 ? 2 : 1;
    pass = contact == 2 && len == expect;
    h << "curve: " << c.to_string() << " over " << f->name() << "\n";
    h << "point " << format_point(*f, flag->point) << " tangent " << format_point(*f, flag->line) << " contact "
      << contact << "\n";
    h << "gamma length: " << len << " (expected " << expect << ")\n";
    body = {{"curve", curve_json(c, a, sample)},
            {"t", 1},
            {"point", format_point(*f, flag->point)},
            {"line", format_point(*f, flag->line)},
            {"contact", contact},
            {"length", len},
            {"expected", expect}};
  } else {
    const auto run = theta_run(a, opts);
    const FieldPtr& f = run.curve.field();
    const unsigned expect = f->characteristic() == 2 ? 4 : 1;
    h << "curve: " << run.curve.to_string() << " over " << f->name() << "\n";
    json pairs = json::array();
    for (const auto& pt : run.report.pairs.points) {
      const std::vector<Elem> l(pt.coords.begin(), pt.coords.begin() + 3);
      const std::vector<Elem> p1(pt.coords.begin() + 3, pt.coords.begin() + 6);
      const std::vector<Elem> p2(pt.coords.begin() + 6, pt.coords.end());
      const unsigned len = enumgeo::gamma_dual_length(run.curve, pt.field, l, {p1, p2});
      pass = pass && len == expect;
      h << "  line " << format_point(*pt.field, l) << " points " << format_point(*pt.field, p1) << " "
        << format_point(*pt.field, p2) << "  gamma-dual length " << len << "\n";
      pairs.push_back({{"line", format_point(*pt.field, l)},
                       {"points", {format_point(*pt.field, p1), format_point(*pt.field, p2)}},
                       {"field", pt.field->name()},
                       {"length", len}});
    }
    if (pairs.empty()) pass = false;
    h << "expected gamma-dual length " << expect << " at every ordered pair\n";
    body = {{"curve", curve_json(run.curve, a, run.sample)}, {"t", 2}, {"pairs", pairs}, {"expected", expect}};
  }
  h << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
  emit(a, h.str(), document("tangency", body, pass), out);
  return pass ? kExitPass : kExitFail;
}

int cmd_dejonquieres(const CurveArgs& a, unsigned g, unsigned v, const std::vector<unsigned>& m, std::ostream& out) {
  const auto j = formulas::dejonquieres(g, v, m);
  std::ostringstream h;
  h << "J = " << j.value.get_str() << "\nstabilizer = " << j.stab.get_str() << "\nunordered = "
    << j.unordered.get_str() << "\nproduct of multiplicities divides unordered: " << (j.divisible ? "yes" : "no")
    << "\nverdict: " << (j.divisible ? "PASS" : "FAIL") << "\n";
  const json doc = document("formulas dejonquieres",
                            {{"g", g},
                             {"v", v},
                             {"m", m},
                             {"value", j.value.get_str()},
                             {"stab", j.stab.get_str()},
                             {"unordered", j.unordered.get_str()},
                             {"divisible", j.divisible}},
                            j.divisible);
  emit(a, h.str(), doc, out);
  return j.divisible ? kExitPass : kExitFail;
}

int cmd_congruence(const CurveArgs& a, std::uint64_t max_prime, std::ostream& out) {
  if (max_prime > 200000) throw UsageError("--max-prime is capped at 200000");
  std::ostringstream h;
  json rows = json::array();
  bool pass = true;
  std::size_t count = 0;
  for (std::uint64_t p : formulas::primes_below(max_prime + 1)) {
    const auto c = formulas::central_binomial_congruence(p);
    ++count;
    const bool p3_expected = p >= 5;
    const bool ok = c.holds_p2() && (!p3_expected || c.holds_p3());
    pass = pass && ok;
    if (!ok || !c.holds_p3()) {
      h << "p = " << p << ": C(2p,p) mod p^2 = " << c.mod_p2.get_str() << ", mod p^3 = " << c.mod_p3.get_str()
        << (ok ? " (expected failure mod p^3)" : " FAIL") << "\n";
      rows.push_back({{"p", p},
                      {"mod_p2", c.mod_p2.get_str()},
                      {"mod_p3", c.mod_p3.get_str()},
                      {"expected_failure", ok}});
    }
  }
  h << count << " primes up to " << max_prime << " checked\nverdict: " << (pass ? "PASS" : "FAIL") << "\n";
  const json doc =
      document("formulas congruence", {{"max_prime", max_prime}, {"primes", count}, {"exceptions", rows}}, pass);
  emit(a, h.str(), doc, out);
  return pass ? kExitPass : kExitFail;
}

int cmd_predict(const CurveArgs& a, const std::string& problem, unsigned n, std::uint64_t p, std::ostream& out) {
  formulas::CountPrediction pred;
  if (problem == "flexes") {
    pred = formulas::plucker_counts(n, p);
  } else if (problem == "theta") {
    pred = formulas::theta_counts(n, p);
  } else if (problem == "steiner") {
    const bool ok = formulas::steiner_identity();
    std::ostringstream h;
    h << formulas::kSteinerConics << " = 2 * 2^5 * " << formulas::kSteinerConicsChar2 << ": " << (ok ? "yes" : "no")
      << "\n";
    emit(a, h.str(),
         document("formulas predict", {{"problem", "steiner"}, {"conics", formulas::kSteinerConics},
                                       {"conics_char2", formulas::kSteinerConicsChar2}}, ok),
         out);
    return ok ? kExitPass : kExitFail;
  } else {
    throw UsageError("unknown problem '" + problem + "'");
  }
  emit(a, pred.problem + " in characteristic " + std::to_string(p) + ": " + prediction_text(pred) + "\n",
       document("formulas predict", {{"prediction", prediction_json(pred)}}, true), out);
  return kExitPass;
}

int cmd_verify(const CurveArgs& a, const std::vector<unsigned>& only, std::ostream& out) {
  VerifyOptions v;
  v.seed = a.seed;
  v.max_attempts = a.max_attempts;
  v.solve = solve_options(a);
  for (unsigned id : only) {
    if (id < 1 || id > kComputedCriteria) throw UsageError("--only takes criteria 1.." + std::to_string(kComputedCriteria));
    v.only.insert(id);
  }
  const auto results = verify_paper(v);
  const json doc = verify_document(results, v);
  std::ostringstream h;
  for (const auto& r : results) {
    h << (r.pass ? "PASS" : "FAIL") << "  " << r.id << " " << r.label << ": " << r.summary << "\n";
  }
  h << "verdict: " << doc["verdict"].get<std::string>() << "\n";
  emit(a, h.str(), doc, out);
  return doc["verdict"] == "PASS" ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"charp: enumerative schemes of plane curves over finite fields", "charp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());
  CurveArgs a;
  unsigned t = 2;
  unsigned g = 0, v = 0, genus_or_degree = 0;
  std::uint64_t characteristic = 0, max_prime = 10000;
  std::vector<unsigned> m, only;
  std::string problem;

  auto* inflect = app.add_subcommand("inflect", "inflection flags and points of a plane curve");
  add_curve_flags(inflect, a);
  auto* theta = app.add_subcommand("theta", "bitangent lines of a plane quartic");
  add_curve_flags(theta, a);
  auto* tangency = app.add_subcommand("tangency", "gamma lengths at simple tangents and bitangents");
  add_curve_flags(tangency, a);
  tangency->add_option("--t", t, "number of contact points (1 or 2)")->check(CLI::Range(1u, 2u));
  auto* formulas_cmd = app.add_subcommand("formulas", "closed-form counts and congruences");
  formulas_cmd->require_subcommand(1);
  auto* dej = formulas_cmd->add_subcommand("dejonquieres", "de Jonquieres number J(g, v, m)");
  dej->add_option("g", g)->required();
  dej->add_option("v", v)->required();
  dej->add_option("m", m)->required()->check(CLI::PositiveNumber);
  add_output_flags(dej, a);
  auto* cong = formulas_cmd->add_subcommand("congruence", "C(2p, p) modulo p^2 and p^3");
  cong->add_option("--max-prime", max_prime, "largest prime checked");
  add_output_flags(cong, a);
  auto* predict = formulas_cmd->add_subcommand("predict", "expected counts");
  predict->add_option("--problem", problem, "flexes, theta or steiner")->required();
  predict->add_option("--degree,--genus", genus_or_degree, "degree (flexes) or genus (theta)");
  predict->add_option("--characteristic", characteristic, "0 for characteristic zero");
  add_output_flags(predict, a);
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");
  verify->add_option("--seed", a.seed, "seed of the random sweeps");
  verify->add_option("--only", only, "criteria to run");
  add_output_flags(verify, a);
  a.seed = 1;

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (verify->parsed() && verify->count("--seed") == 0) a.seed = 42;

  try {
    if (inflect->parsed()) return cmd_inflect(a, out);
    if (theta->parsed()) return cmd_theta(a, out);
    if (tangency->parsed()) return cmd_tangency(a, t, out);
    if (dej->parsed()) return cmd_dejonquieres(a, g, v, m, out);
    if (cong->parsed()) return cmd_congruence(a, max_prime, out);
    if (predict->parsed()) return cmd_predict(a, problem, genus_or_degree, characteristic, out);
    if (verify->parsed()) return cmd_verify(a, only, out);
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateInput& e) {
    err << "DEGENERATE: " << e.what() << "\n";
    out << "verdict: DEGENERATE\n";
    return kExitDegenerate;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << " (pairs processed " << e.stats().pairs_processed << ", basis size "
        << e.stats().basis_size << ")\n";
    return kExitResource;
  } catch (const SamplingFailure& e) {
    err << "sampling failure: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace charp::cli
