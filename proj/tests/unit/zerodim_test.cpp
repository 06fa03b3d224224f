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

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "charp/ff/matrix.hpp"
#include "charp/zerodim/factor.hpp"
#include "charp/zerodim/report.hpp"

namespace charp::zerodim {
namespace {

using ff::Field;
using poly::parse_polynomial;
using poly::Ring;
using poly::RingPtr;

UPoly up(const FieldPtr& f, std::vector<Elem> c) { return UPoly(f, std::move(c)); }

Ideal ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
  Ideal i(r);
  for (const auto& g : gens) i.add(parse_polynomial(r, g));
  return i;
}

SchemePoint rational_point(const FieldPtr& f, std::vector<Elem> c) {
  SchemePoint p;
  p.coords = std::move(c);
  p.field = f;
  p.base_image = f->gen();
  return p;
}

// x_i^{a_i} plus random terms of lower total degree; no constant term when
// through_origin is set.
Ideal random_pure_power_ideal(const RingPtr& r, Rng& rng, unsigned max_pow, bool through_origin) {
  const unsigned n = r->nvars();
  Ideal out(r);
  for (unsigned i = 0; i < n; ++i) {
    const unsigned a = 1 + static_cast<unsigned>(uniform_below(rng, max_pow));
    std::vector<poly::Term> t{{Monomial::variable(i, a), 1}};
    const unsigned extra = static_cast<unsigned>(uniform_below(rng, 4));
    for (unsigned k = 0; k < extra && a > 1; ++k) {
      Monomial m;
      unsigned budget = static_cast<unsigned>(uniform_below(rng, a));
      if (through_origin && budget == 0) budget = 1;
      for (unsigned j = 0; j < n && budget; ++j) {
        const unsigned e = j + 1 == n ? budget : static_cast<unsigned>(uniform_below(rng, budget + 1));
        m.set(j, e);
        budget -= e;
      }
      if (m.degree() >= a) continue;
      t.push_back({m, r->f().random(rng)});
    }
    out.add(Polynomial(r, std::move(t)));
  }
  return out;
}

TEST(SquarefreeTest, Examples) {
  auto f3 = Field::prime(3);
  auto d = squarefree_decomposition_charp(UPoly::monomial(f3, 1, 6));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].factor, UPoly::x(f3));
  EXPECT_EQ(d[0].exponent, 6u);

  const UPoly q = up(f3, {1, 0, 1});
  d = squarefree_decomposition_charp(q * q * q);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].factor, q);
  EXPECT_EQ(d[0].exponent, 3u);

  auto f9 = Field::extension(3, 2);
  const Elem c = f9->gen();
  d = squarefree_decomposition_charp(up(f9, {f9->neg(c), 0, 0, 1}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].exponent, 3u);
  EXPECT_EQ(d[0].factor, up(f9, {f9->neg(f9->pth_root(c)), 1}));
}

TEST(SquarefreeTest, MixedExponentsReconstruct) {
  auto f2 = Field::prime(2);
  const UPoly a = up(f2, {1, 1});
  const UPoly b = up(f2, {1, 1, 1});
  const UPoly x = UPoly::x(f2);
  const UPoly f = x * a * a * a * b * b * b * b * b * b;
  UPoly prod = UPoly::constant(f2, 1);
  for (const auto& fac : squarefree_decomposition_charp(f)) {
    for (unsigned i = 0; i < fac.exponent; ++i) prod = prod * fac.factor;
  }
  EXPECT_EQ(prod, f);
  EXPECT_EQ(squarefree_part(f), x * a * b);
}

TEST(FactorTest, SmallExamples) {
  auto f2 = Field::prime(2);
  auto r = factor_univariate(up(f2, {1, 0, 1}));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].factor, up(f2, {1, 1}));
  EXPECT_EQ(r[0].exponent, 2u);

  auto f5 = Field::prime(5);
  r = factor_univariate(up(f5, {0, 4, 0, 1}));
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].factor, up(f5, {0, 1}));
  EXPECT_EQ(r[1].factor, up(f5, {1, 1}));
  EXPECT_EQ(r[2].factor, up(f5, {4, 1}));
  EXPECT_EQ(roots(up(f5, {0, 4, 0, 1})), (std::vector<Elem>{0, 1, 4}));
}

TEST(FactorTest, RoundTripRandomProducts) {
  for (auto f : {Field::prime(2), Field::prime(3), Field::extension(3, 2)}) {
    Rng rng(17 + f->order());
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<UPoly> irr;
      UPoly prod = UPoly::constant(f, 1);
      while (irr.size() < 3) {
        const int deg = 1 + static_cast<int>(uniform_below(rng, 4));
        std::vector<Elem> c(deg + 1);
        for (auto& v : c) v = f->random(rng);
        c[deg] = 1;
        UPoly g(f, c);
        if (!ff::is_irreducible(g)) continue;
        irr.push_back(g);
        prod = prod * g;
      }
      std::vector<UFactor> expect;
      std::sort(irr.begin(), irr.end(), [](const UPoly& a, const UPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(),
                                            b.coeffs().rbegin(), b.coeffs().rend());
      });
      const auto got = factor_univariate(prod, trial);
      UPoly back = UPoly::constant(f, 1);
      std::vector<UPoly> flat;
      for (const auto& fac : got) {
        EXPECT_TRUE(ff::is_irreducible(fac.factor));
        for (unsigned i = 0; i < fac.exponent; ++i) {
          back = back * fac.factor;
          flat.push_back(fac.factor);
        }
      }
      EXPECT_EQ(back, prod);
      EXPECT_EQ(flat, irr);
      // The seed must not change the answer.
      const auto again = factor_univariate(prod, trial + 1000);
      ASSERT_EQ(again.size(), got.size());
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(again[i].factor, got[i].factor);
    }
  }
}

TEST(RadicalTest, Examples) {
  auto r = Ring::make(Field::prime(5), {"x", "y"});
  auto rad = radical_zero_dim(ideal_of(r, {"x^2", "y^3"}));
  auto g = gb::groebner(rad);
  EXPECT_EQ(g.basis().size(), 2u);
  EXPECT_TRUE(g.contains(parse_polynomial(r, "x")));
  EXPECT_TRUE(g.contains(parse_polynomial(r, "y")));

  auto r1 = Ring::make(Field::prime(3), {"x"});
  auto g1 = gb::groebner(radical_zero_dim(ideal_of(r1, {"x^3"})));
  ASSERT_EQ(g1.basis().size(), 1u);
  EXPECT_EQ(g1.basis()[0], parse_polynomial(r1, "x"));

  auto r2 = Ring::make(Field::prime(2), {"x", "y"});
  EXPECT_THROW(radical_zero_dim(ideal_of(r2, {"x*y"})), UsageError);
}

TEST(RadicalTest, IdempotentOnRandomIdeals) {
  for (auto f : {Field::prime(2), Field::prime(3), Field::extension(2, 2)}) {
    auto r = Ring::standard(f, 3);
    Rng rng(5 * f->order());
    for (int trial = 0; trial < 10; ++trial) {
      const Ideal i = random_pure_power_ideal(r, rng, 3, false);
      const Ideal rad = radical_zero_dim(i);
      const auto g1 = gb::groebner(rad);
      const auto g2 = gb::groebner(radical_zero_dim(rad));
      EXPECT_EQ(g1.dump(), g2.dump());
      for (const auto& p : i.gens()) EXPECT_TRUE(g1.contains(p));
      EXPECT_EQ(radical_degree(i), g1.degree());
    }
  }
}

TEST(SolveTest, Examples) {
  auto f5 = Field::prime(5);
  auto r = Ring::make(f5, {"x", "y"});
  auto pts = solve_points(ideal_of(r, {"x^2 - 1", "y - x"}));
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].coords, (std::vector<Elem>{1, 1}));
  EXPECT_EQ(pts[1].coords, (std::vector<Elem>{4, 4}));
  for (const auto& p : pts) EXPECT_EQ(p.residue_degree, 1u);

  auto r3 = Ring::make(Field::prime(3), {"x"});
  pts = solve_points(ideal_of(r3, {"x^2 + 1"}));
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].residue_degree, 2u);
  EXPECT_EQ(pts[0].field->order(), 9u);
  EXPECT_TRUE(vanishes_at(ideal_of(r3, {"x^2 + 1"}), pts[0]));

  EXPECT_TRUE(solve_points(ideal_of(r3, {"1"})).empty());
}

TEST(SolveTest, MixedResidueDegreesOverExtensionBase) {
  auto f4 = Field::extension(2, 2);
  auto r = Ring::make(f4, {"x", "y"});
  // x has one rational value and a conjugate pair over GF(4); y adds a cubic.
  const Ideal i = ideal_of(r, {"(x + 1)*(x^2 + x + [0,1])", "y^3 + y + 1"});
  const auto pts = solve_points(i);
  std::size_t geometric = 0;
  for (const auto& p : pts) {
    EXPECT_TRUE(vanishes_at(i, p));
    EXPECT_EQ(p.field->degree() % f4->degree(), 0u);
    geometric += p.residue_degree;
  }
  EXPECT_EQ(geometric, radical_degree(i));
  EXPECT_EQ(geometric, 9u);
}

TEST(SolveTest, ResidueDegreeCap) {
  auto r = Ring::make(Field::prime(2), {"x"});
  SolveOptions opts;
  opts.max_residue_degree = 4;
  EXPECT_THROW(solve_points(ideal_of(r, {"x^5 + x^2 + 1"}), opts), ResourceLimit);
  opts.max_residue_degree = 5;
  EXPECT_EQ(solve_points(ideal_of(r, {"x^5 + x^2 + 1"}), opts).size(), 1u);
}

TEST(SolveTest, BruteForceRationalPoints) {
  for (auto f : {Field::prime(3), Field::prime(5), Field::extension(2, 2), Field::extension(3, 2)}) {
    for (unsigned n = 1; n <= 3; ++n) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < n; ++i) total *= f->order();
      if (total > 100000) continue;
      auto r = Ring::standard(f, n);
      Rng rng(f->order() * 31 + n);
      for (int trial = 0; trial < 8; ++trial) {
        const Ideal i = random_pure_power_ideal(r, rng, 3, false);
        std::set<std::vector<Elem>> brute;
        std::vector<Elem> pt(n, 0);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          std::uint64_t v = idx;
          for (unsigned k = 0; k < n; ++k) {
            pt[k] = v % f->order();
            v /= f->order();
          }
          bool zero = true;
          for (const auto& g : i.gens()) zero = zero && g.evaluate(pt) == 0;
          if (zero) brute.insert(pt);
        }
        std::set<std::vector<Elem>> found;
        for (const auto& p : solve_points(i)) {
          if (p.residue_degree == 1) found.insert(p.coords);
        }
        EXPECT_EQ(found, brute);
      }
    }
  }
}

TEST(MultiplicityTest, Examples) {
  auto f = Field::prime(7);
  auto r = Ring::make(f, {"x", "y"});
  const auto origin = rational_point(f, {0, 0});
  EXPECT_EQ(local_multiplicity(ideal_of(r, {"x^2", "y"}), origin), 2u);
  EXPECT_EQ(local_multiplicity(ideal_of(r, {"x", "y"}), origin), 1u);
  EXPECT_EQ(local_multiplicity_gb(ideal_of(r, {"x^2", "y"}), origin), 2u);
  EXPECT_THROW(local_multiplicity(ideal_of(r, {"x - 1", "y"}), origin), UsageError);
  // Two points, lengths 3 and 1.
  const Ideal two = ideal_of(r, {"x^3*(x - 1)", "y"});
  EXPECT_EQ(local_multiplicity(two, origin), 3u);
  EXPECT_EQ(local_multiplicity(two, rational_point(f, {1, 0})), 1u);
  EXPECT_EQ(tangent_space_dimension(ideal_of(r, {"x^2", "y"}), origin), 1u);
  EXPECT_EQ(tangent_space_dimension(ideal_of(r, {"x", "y"}), origin), 0u);
}

// Length at the origin by dense linear algebra on polynomials of degree < N:
// (I + m^N)/m^N is spanned by truncations of monomial multiples of the
// generators.
std::size_t macaulay_length(const Ideal& i) {
  const auto& ring = i.ring();
  const unsigned n = ring->nvars();
  std::size_t prev = 0;
  for (unsigned big_n = 1; big_n < 40; ++big_n) {
    std::vector<Monomial> monos;
    std::vector<unsigned> e(n, 0);
    std::function<void(unsigned, unsigned)> walk = [&](unsigned k, unsigned left) {
      if (k == n) {
        monos.push_back(Monomial::from_exponents(e));
        return;
      }
      for (unsigned v = 0; v <= left; ++v) {
        e[k] = v;
        walk(k + 1, left - v);
      }
    };
    walk(0, big_n - 1);
    std::unordered_map<Monomial, std::size_t, poly::MonomialHash> col;
    for (std::size_t k = 0; k < monos.size(); ++k) col[monos[k]] = k;
    std::vector<std::vector<Elem>> rows;
    for (const auto& g : i.gens()) {
      for (const auto& m : monos) {
        std::vector<Elem> row(monos.size(), 0);
        bool any = false;
        for (const auto& t : g.terms()) {
          const Monomial prod = t.m * m;
          if (prod.degree() >= big_n) continue;
          row[col.at(prod)] = t.c;
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
    }
    ff::Matrix mat(ring->field(), rows.size(), monos.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < monos.size(); ++b) mat.at(a, b) = rows[a][b];
    }
    const std::size_t d = monos.size() - (rows.empty() ? 0 : mat.rank());
    if (big_n > 1 && d == prev) return d;
    prev = d;
  }
  return 0;
}

TEST(MultiplicityTest, MacaulayOracle) {
  int checked = 0;
  for (auto f : {Field::prime(2), Field::prime(5), Field::extension(2, 2)}) {
    Rng rng(911 + f->order());
    for (int trial = 0; trial < 17; ++trial) {
      const unsigned n = 1 + static_cast<unsigned>(uniform_below(rng, 3));
      auto r = Ring::standard(f, n);
      const Ideal i = random_pure_power_ideal(r, rng, 3, true);
      const auto origin = rational_point(f, std::vector<Elem>(n, 0));
      const std::size_t expect = macaulay_length(i);
      ASSERT_GT(expect, 0u);
      EXPECT_EQ(local_multiplicity(i, origin), expect);
      EXPECT_EQ(local_multiplicity_gb(i, origin), expect);
      ++checked;
    }
  }
  EXPECT_GE(checked, 50);
}

TEST(MultiplicityTest, AgreesWithGroebnerRouteAndConserves) {
  for (auto f : {Field::prime(2), Field::prime(3), Field::extension(2, 2)}) {
    auto r = Ring::standard(f, 2);
    Rng rng(77 + f->order());
    for (int trial = 0; trial < 10; ++trial) {
      const Ideal i = random_pure_power_ideal(r, rng, 4, false);
      std::size_t sum = 0;
      for (const auto& p : solve_points(i)) {
        const unsigned m = local_multiplicity(i, p);
        EXPECT_EQ(m, local_multiplicity_gb(i, p));
        sum += m * p.residue_degree;
      }
      EXPECT_EQ(sum, gb::groebner(i).degree());
    }
  }
}

TEST(CanonicalTest, ConjugatesShareRepresentative) {
  auto f4 = Field::extension(2, 2);
  auto r = Ring::make(f4, {"x"});
  const auto pts = solve_points(ideal_of(r, {"x^3 + x + 1"}));
  ASSERT_EQ(pts.size(), 1u);
  const auto& p = pts[0];
  const ff::Field& big = *p.field;
  SchemePoint conj = p;
  conj.coords[0] = big.pow(p.coords[0], 4);
  SchemePoint frame = p;
  frame.coords[0] = big.frobenius(p.coords[0]);
  frame.base_image = big.frobenius(p.base_image);
  const auto a = canonical_representative(f4, p).coords;
  EXPECT_EQ(canonical_representative(f4, conj).coords, a);
  EXPECT_EQ(canonical_representative(f4, frame).coords, a);
}

TEST(ReportTest, EmptyAndGrid) {
  auto f = Field::prime(7);
  auto r = Ring::make(f, {"x", "y"});
  const auto empty = affine_report(ideal_of(r, {"1"}));
  EXPECT_TRUE(empty.points.empty());
  EXPECT_EQ(empty.total_degree, 0u);

  const auto grid = affine_report(ideal_of(r, {"(x-1)*(x-2)*(x-3)", "(y-4)*(y-5)"}));
  ASSERT_EQ(grid.points.size(), 6u);
  EXPECT_EQ(grid.total_degree, 6u);
  EXPECT_EQ(grid.radical_degree, 6u);
  ASSERT_TRUE(grid.uniform_multiplicity.has_value());
  EXPECT_EQ(*grid.uniform_multiplicity, 1u);
  for (const auto& p : grid.points) {
    EXPECT_EQ((p.coords[0] + 7 - 1) % 7 < 3, true);
    EXPECT_TRUE(p.coords[1] == 4 || p.coords[1] == 5);
  }
  const std::string js = to_json(grid);
  EXPECT_NE(js.find("\"total_degree\": 6"), std::string::npos);
}

TEST(ReportTest, ProjectiveChartsMerge) {
  // x^2 + y^2 + z^2 = 0 and y = 0 over GF(5) in P^2: the points [1:0:2], [1:0:3].
  auto f = Field::prime(5);
  std::vector<Chart> charts;
  for (unsigned c = 0; c < 3; ++c) {
    auto ring = Ring::make(f, {"a", "b"});
    Ideal i(ring);
    auto var = [&](unsigned k) {
      if (k == c) return Polynomial::constant(ring, 1);
      return Polynomial::variable(ring, k < c ? k : k - 1);
    };
    i.add(var(0) * var(0) + var(1) * var(1) + var(2) * var(2));
    i.add(var(1));
    charts.push_back(Chart{
        c, i,
        [c](const ff::Field& fld, std::span<const Elem> a) {
          std::vector<Elem> v;
          for (unsigned k = 0, j = 0; k < 3; ++k) v.push_back(k == c ? 1 : a[j++]);
          return normalize_projective(fld, v);
        },
        [c](const ff::Field& fld, std::span<const Elem> key) -> std::optional<std::vector<Elem>> {
          if (key[c] == 0) return std::nullopt;
          std::vector<Elem> out;
          const Elem inv = fld.inv(key[c]);
          for (unsigned k = 0; k < 3; ++k) {
            if (k != c) out.push_back(fld.mul(key[k], inv));
          }
          return out;
        }});
  }
  const auto rep = scheme_report(charts);
  ASSERT_EQ(rep.points.size(), 2u);
  EXPECT_EQ(rep.points[0].coords, (std::vector<Elem>{1, 0, 2}));
  EXPECT_EQ(rep.points[1].coords, (std::vector<Elem>{1, 0, 3}));
  EXPECT_EQ(rep.total_degree, 2u);
}

}  // namespace
}  // namespace charp::zerodim
