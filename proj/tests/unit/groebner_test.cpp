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

#include "charp/groebner/groebner.hpp"

namespace charp::gb {
namespace {

using ff::Field;
using poly::parse_polynomial;
using poly::Ring;

std::vector<Polynomial> parse_all(const RingPtr& r, const std::vector<std::string>& s) {
  std::vector<Polynomial> out;
  for (const auto& t : s) out.push_back(parse_polynomial(r, t));
  return out;
}

Polynomial random_poly(const RingPtr& ring, Rng& rng, unsigned max_deg, unsigned terms) {
  std::vector<poly::Term> t;
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m;
    unsigned budget = static_cast<unsigned>(uniform_below(rng, max_deg + 1));
    for (unsigned i = 0; i < ring->nvars() && budget; ++i) {
      const unsigned e = static_cast<unsigned>(uniform_below(rng, budget + 1));
      m.set(i, e);
      budget -= e;
    }
    t.push_back({m, ring->f().random(rng)});
  }
  return Polynomial(ring, std::move(t));
}

TEST(NormalFormTest, HandExample) {
  auto r = Ring::make(Field::prime(7), {"x", "y"}, MonomialOrder::lex());
  auto g = buchberger(Ideal(r, parse_all(r, {"x^2 - y", "y^2 - 1"})), MonomialOrder::lex());
  EXPECT_EQ(g.normal_form(parse_polynomial(r, "x^4")), Polynomial::constant(r, 1));
  auto q = g.quotient_basis();
  EXPECT_EQ(q.size(), 4u);
  EXPECT_EQ(g.dump(), "lex\ny^2 + 6\nx^2 + 6*y\n");
}

TEST(BuchbergerTest, SmallExamples) {
  auto r = Ring::make(Field::prime(5), {"x", "y"});
  auto g = groebner(Ideal(r, parse_all(r, {"x + y", "x - y"})));
  EXPECT_EQ(g.basis(), parse_all(r, {"y", "x"}));
  auto unit = groebner(Ideal(r, parse_all(r, {"x*y + 3", "x*y"})));
  EXPECT_TRUE(unit.is_unit());
  auto box = groebner(Ideal(r, parse_all(r, {"x^2", "y^3"})));
  EXPECT_EQ(box.degree(), 6u);
  auto line = groebner(Ideal(r, parse_all(r, {"x"})));
  EXPECT_FALSE(line.is_zero_dimensional());
  EXPECT_THROW(line.quotient_basis(), UsageError);
}

TEST(BuchbergerTest, RandomIdealsAreReducedAndUnique) {
  Rng rng(12);
  for (auto fld : {Field::prime(2), Field::prime(3), Field::extension(3, 2), Field::prime(101)}) {
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(),
                       MonomialOrder::block_elimination(1)}) {
      auto r = Ring::standard(fld, 3, "x", order);
      for (int k = 0; k < 8; ++k) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, rng, 3, 4));
        auto g = groebner(Ideal(r, gens));
        EXPECT_TRUE(s_polynomial_closure(g));
        for (const auto& p : gens) EXPECT_TRUE(g.contains(p));
        for (const auto& b : g.basis()) {
          EXPECT_EQ(b.lead_coeff(), 1u);
          for (const auto& c : g.basis()) {
            if (&b == &c) continue;
            for (const auto& t : b.terms()) EXPECT_FALSE(c.lead_monomial().divides(t.m));
          }
        }
        auto shuffled = gens;
        std::reverse(shuffled.begin(), shuffled.end());
        shuffled.push_back(gens[0] * gens[1]);
        EXPECT_EQ(groebner(Ideal(r, shuffled)).dump(), g.dump());
        Polynomial f = random_poly(r, rng, 4, 6);
        auto nf = g.normal_form(f);
        EXPECT_EQ(g.normal_form(nf), nf);
        EXPECT_TRUE(g.contains(f - nf));
      }
    }
  }
}

TEST(EliminateTest, TwistedCubic) {
  auto r = Ring::make(Field::prime(7), {"t", "x", "y"});
  auto e = eliminate(Ideal(r, parse_all(r, {"x - t^2", "y - t^3"})), {0});
  ASSERT_EQ(e.gens().size(), 1u);
  EXPECT_EQ(e.gens()[0].monic(), parse_polynomial(e.ring(), "x^3 - y^2").monic());
  auto e2 = eliminate(Ideal(r, parse_all(r, {"t*x - 1", "t*y"})), {0});
  ASSERT_EQ(e2.gens().size(), 1u);
  EXPECT_EQ(e2.gens()[0], parse_polynomial(e2.ring(), "y"));
}

TEST(EliminateTest, NothingDroppedKeepsNormalForms) {
  auto r = Ring::make(Field::prime(5), {"x", "y"});
  Ideal i(r, parse_all(r, {"x^2 + y", "x*y - 1"}));
  auto e = eliminate(i, {});
  auto a = groebner(i), b = groebner(Ideal(r, e.gens()));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(EliminateTest, RandomMembership) {
  Rng rng(31);
  auto r = Ring::standard(Field::prime(7), 4);
  for (int k = 0; k < 10; ++k) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, rng, 2, 4));
    Ideal id(r, gens);
    const std::vector<unsigned> drop{1, 3};
    auto e = eliminate(id, drop);
    auto g = groebner(id);
    for (const auto& p : e.gens()) {
      std::vector<int> back{0, 2};
      EXPECT_TRUE(g.contains(p.in_ring(r, back)));
    }
  }
}

TEST(QuotientTest, MonomialExamples) {
  auto r = Ring::make(Field::prime(3), {"x", "y"});
  auto x = parse_polynomial(r, "x");
  Ideal i(r, parse_all(r, {"x^2*y"}));
  EXPECT_EQ(groebner(ideal_quotient(i, x)).dump(), groebner(Ideal(r, parse_all(r, {"x*y"}))).dump());
  auto sat = saturate(i, x);
  EXPECT_EQ(groebner(sat.ideal).dump(), groebner(Ideal(r, parse_all(r, {"y"}))).dump());
  EXPECT_EQ(sat.exponent, 2u);
  auto same = saturate(i, Polynomial::constant(r, 1));
  EXPECT_EQ(groebner(same.ideal).dump(), groebner(i).dump());
  EXPECT_THROW(ideal_quotient(i, Polynomial(r)), UsageError);
}

// I = <x^3, xy>: (I : x) = <x^2, y> and x^3 in I makes the saturation <1>.
TEST(QuotientTest, CubeAndMixedTerm) {
  auto r = Ring::make(Field::prime(3), {"x", "y"});
  auto x = parse_polynomial(r, "x");
  Ideal i(r, parse_all(r, {"x^3", "x*y"}));
  auto gi = groebner(i);
  auto q = groebner(ideal_quotient(i, x));
  for (const auto& g : q.basis()) EXPECT_TRUE(gi.contains(g * x));
  // Membership oracle on all monomials of degree <= 4.
  for (unsigned a = 0; a <= 4; ++a) {
    for (unsigned b = 0; a + b <= 4; ++b) {
      auto m = Polynomial::monomial(r, Monomial::from_exponents({a, b}));
      EXPECT_EQ(q.contains(m), gi.contains(m * x));
    }
  }
  EXPECT_EQ(q.dump(), groebner(Ideal(r, parse_all(r, {"x^2", "y"}))).dump());
  auto sat = saturate(i, x);
  EXPECT_TRUE(groebner(sat.ideal).is_unit());
  EXPECT_EQ(sat.exponent, 3u);
}

TEST(QuotientTest, RandomQuotientContract) {
  Rng rng(77);
  auto r = Ring::standard(Field::prime(5), 3);
  for (int k = 0; k < 6; ++k) {
    Ideal i(r, {random_poly(r, rng, 3, 3), random_poly(r, rng, 3, 3)});
    auto f = random_poly(r, rng, 2, 2);
    if (f.is_zero()) continue;
    auto gi = groebner(i);
    auto q = ideal_quotient(i, f);
    for (const auto& g : q.gens()) EXPECT_TRUE(gi.contains(g * f));
    for (const auto& g : i.gens()) EXPECT_TRUE(groebner(q).contains(g));
  }
}

TEST(IntersectTest, PrincipalIdeals) {
  auto r = Ring::make(Field::prime(7), {"x", "y"});
  auto inter = intersect(Ideal(r, parse_all(r, {"x*y"})), Ideal(r, parse_all(r, {"x^2"})));
  EXPECT_EQ(groebner(inter).dump(), groebner(Ideal(r, parse_all(r, {"x^2*y"}))).dump());
}

TEST(ResourceTest, PairCapAndCancellation) {
  auto r = Ring::standard(Field::prime(32003), 4);
  Rng rng(5);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_poly(r, rng, 4, 8));
  GbOptions tight;
  tight.max_pairs = 3;
  try {
    groebner(Ideal(r, gens), tight);
    ADD_FAILURE() << "expected a resource limit";
  } catch (const ResourceLimit& e) {
    EXPECT_GT(e.stats().pairs_processed, 3u);
  }
  std::stop_source src;
  src.request_stop();
  GbOptions cancelled;
  cancelled.stop = src.get_token();
  EXPECT_THROW(groebner(Ideal(r, gens), cancelled), Cancelled);
}

TEST(FingerprintTest, StableAcrossRuns) {
  auto r = Ring::make(Field::prime(5), {"x", "y"});
  Ideal i(r, parse_all(r, {"x^2 - y", "y^2 - 1"}));
  EXPECT_EQ(fingerprint(groebner(i)), fingerprint(groebner(i)));
}

}  // namespace
}  // namespace charp::gb
