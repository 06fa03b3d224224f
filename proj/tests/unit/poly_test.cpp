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

#include "charp/error.hpp"
#include "charp/poly/ops.hpp"
#include "charp/poly/polynomial.hpp"

namespace charp::poly {
namespace {

using ff::Field;

Polynomial random_poly(const RingPtr& ring, Rng& rng, unsigned max_deg, unsigned terms) {
  std::vector<Term> t;
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

Polynomial random_form(const RingPtr& ring, Rng& rng, unsigned deg) {
  std::vector<Term> t;
  const unsigned n = ring->nvars();
  for (unsigned a = 0; a <= deg; ++a) {
    for (unsigned b = 0; a + b <= deg; ++b) {
      Monomial m;
      m.set(0, a);
      if (n > 1) m.set(1, b);
      if (n > 2) m.set(2, deg - a - b);
      else if (a + b != deg) continue;
      t.push_back({m, ring->f().random(rng)});
    }
  }
  return Polynomial(ring, std::move(t));
}

TEST(PolynomialTest, ArithmeticExamples) {
  auto r = Ring::make(Field::prime(3), {"x", "y"});
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  EXPECT_EQ(((x + y) * (x - y)).to_string(), "x^2 + 2*y^2");
  auto r2 = Ring::make(Field::prime(2), {"x", "y"});
  auto x2 = Polynomial::variable(r2, 0), y2 = Polynomial::variable(r2, 1);
  EXPECT_EQ((x2 + y2).pow(2), x2 * x2 + y2 * y2);
  EXPECT_EQ((x * x * y).divide_by_monomial(Monomial::variable(0)), x * y);
  EXPECT_THROW(y.divide_by_monomial(Monomial::variable(0)), UsageError);
  EXPECT_THROW(x + x2, UsageError);
}

TEST(PolynomialTest, DistributivityAndCanonicalForm) {
  Rng rng(3);
  for (auto fld : {Field::prime(2), Field::prime(7), Field::extension(3, 2)}) {
    auto r = Ring::standard(fld, 3);
    for (int i = 0; i < 50; ++i) {
      auto f = random_poly(r, rng, 4, 6), g = random_poly(r, rng, 4, 6), h = random_poly(r, rng, 4, 6);
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_EQ(Polynomial(r, f.terms()), f);
      EXPECT_EQ(f - f, Polynomial(r));
      EXPECT_EQ(parse_polynomial(r, f.to_string()), f);
    }
  }
}

TEST(MonomialOrderTest, TotalMultiplicativeWithOneMinimum) {
  Rng rng(9);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grevlex(),
                                    MonomialOrder::block_elimination(2),
                                    {MonomialOrder::Kind::kGrevlex, 0, {2, 0, 3, 1}}};
  for (const auto& o : orders) {
    auto r = Ring::standard(Field::prime(5), 4, "x", o);
    auto rand_mono = [&] {
      Monomial m;
      for (unsigned i = 0; i < 4; ++i) m.set(i, static_cast<unsigned>(uniform_below(rng, 4)));
      return m;
    };
    for (int i = 0; i < 300; ++i) {
      const Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
      const int ab = r->compare(a, b);
      EXPECT_EQ(ab, -r->compare(b, a));
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(r->compare(a * c, b * c), ab);
      if (!a.is_one()) {
        EXPECT_GT(r->compare(a, Monomial()), 0);
      }
      if (ab > 0 && r->compare(b, c) > 0) EXPECT_GT(r->compare(a, c), 0);
    }
  }
}

TEST(MonomialTest, PackedOperations) {
  auto a = Monomial::from_exponents({1, 2, 0, 3, 0, 0, 0, 5});
  auto b = Monomial::from_exponents({1, 1, 0, 0, 0, 0, 0, 2});
  EXPECT_TRUE(b.divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ((a / b)[7], 3u);
  EXPECT_EQ(a.degree(), 11u);
  EXPECT_EQ(a.lcm(b), a);
  EXPECT_EQ(a.gcd(b), b);
  EXPECT_FALSE(a.coprime(b));
  EXPECT_TRUE(Monomial::variable(2).coprime(a));
  EXPECT_THROW(Monomial::variable(0, kMaxExponent) * Monomial::variable(0), ResourceLimit);
}

TEST(HasseTest, Examples) {
  auto r3 = Ring::make(Field::prime(3), {"x"});
  auto x3 = Polynomial::variable(r3, 0);
  EXPECT_TRUE(hasse_second_derivative(x3.pow(3), 0).is_zero());
  EXPECT_TRUE(partial_derivative(x3.pow(3), 0).is_zero());
  auto r7 = Ring::make(Field::prime(7), {"x"});
  auto x7 = Polynomial::variable(r7, 0);
  EXPECT_EQ(hasse_second_derivative(x7.pow(5), 0), x7.pow(3).scaled(3));
  auto r2 = Ring::make(Field::prime(2), {"x", "y"});
  auto f = parse_polynomial(r2, "x^2*y");
  EXPECT_EQ(hasse_second_derivative(f, 0), Polynomial::variable(r2, 1));
  EXPECT_TRUE(partial_derivative(partial_derivative(f, 0), 0).is_zero());
}

TEST(HasseTest, DoubleEqualsSecondPartial) {
  Rng rng(17);
  for (std::uint64_t p : {5u, 7u}) {
    auto r = Ring::standard(Field::prime(p), 3);
    for (int k = 0; k < 40; ++k) {
      auto f = random_poly(r, rng, 6, 8);
      for (unsigned i = 0; i < 3; ++i) {
        EXPECT_EQ(hasse_second_derivative(f, i).scaled(2),
                  partial_derivative(partial_derivative(f, i), i));
      }
    }
  }
}

TEST(HasseTest, GradientAndHessianForms) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto r = Ring::make(Field::prime(p), {"x", "y"});
    auto f = parse_polynomial(r, "x^2 + y^2");
    EXPECT_EQ(hessian_form(f, constant_vector(r, {1, 0})), Polynomial::constant(r, 1));
    auto lin = parse_polynomial(r, "x + 2*y");
    EXPECT_TRUE(hessian_form(lin, constant_vector(r, {1, 1})).is_zero());
    EXPECT_EQ(gradient_dot(lin, constant_vector(r, {1, 1})), Polynomial::constant(r, r->f().from_int(3)));
  }
  auto r = Ring::make(Field::prime(5), {"x", "y"});
  EXPECT_THROW(gradient_dot(Polynomial::variable(r, 0), constant_vector(r, {1})), UsageError);
}

// F(x + t) - F(x) - grad F . t - hess F(t) has t-order at least 3.
TEST(HasseTest, TaylorCongruence) {
  Rng rng(23);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto big = Ring::make(Field::prime(p), {"x0", "x1", "x2", "t0", "t1", "t2"});
    auto small = Ring::standard(Field::prime(p), 3);
    const std::vector<int> to_big{0, 1, 2};
    for (int k = 0; k < 25; ++k) {
      auto f = random_poly(small, rng, 4, 10).in_ring(big, to_big);
      std::vector<Polynomial> shifted, t;
      for (unsigned i = 0; i < 3; ++i) {
        shifted.push_back(Polynomial::variable(big, i) + Polynomial::variable(big, i + 3));
        t.push_back(Polynomial::variable(big, i + 3));
      }
      for (unsigned i = 0; i < 3; ++i) shifted.push_back(Polynomial::variable(big, i + 3));
      auto rem = f.substitute(shifted) - f - gradient_dot(f, [&] {
                   auto v = t;
                   for (unsigned i = 0; i < 3; ++i) v.push_back(Polynomial(big));
                   return v;
                 }()) -
                 hessian_form(f, [&] {
                   auto v = t;
                   for (unsigned i = 0; i < 3; ++i) v.push_back(Polynomial(big));
                   return v;
                 }());
      for (const auto& term : rem.terms()) {
        EXPECT_GE(term.m[3] + term.m[4] + term.m[5], 3u) << rem.to_string();
      }
    }
  }
}

TEST(SubstituteTest, LinearAndEvaluate) {
  auto f3 = Field::prime(3);
  auto r = Ring::standard(f3, 3);
  auto e = parse_polynomial(r, "x0*x1*x2 + (x0 - x1)^3");
  const std::vector<Elem> pt{1, 1, 0};
  EXPECT_EQ(e.evaluate(pt), 0u);
  FieldMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(substitute_linear(e, id), e);
  EXPECT_THROW(substitute_linear(e, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}), UsageError);
  Rng rng(4);
  auto f7 = Field::prime(7);
  auto r7 = Ring::standard(f7, 3);
  auto rand_inv = [&] {
    for (;;) {
      FieldMatrix m(3, std::vector<Elem>(3));
      for (auto& row : m)
        for (auto& v : row) v = f7->random(rng);
      try {
        substitute_linear(Polynomial::constant(r7, 1), m);
        return m;
      } catch (const UsageError&) {
      }
    }
  };
  for (int k = 0; k < 20; ++k) {
    auto f = random_form(r7, rng, 3);
    auto m = rand_inv(), n = rand_inv();
    FieldMatrix mn(3, std::vector<Elem>(3, 0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) mn[i][j] = f7->add(mn[i][j], f7->mul(m[i][l], n[l][j]));
    // F(M(N x)) computed as (x -> Mx) then (x -> Nx).
    EXPECT_EQ(substitute_linear(substitute_linear(f, m), n), substitute_linear(f, mn));
  }
}

TEST(ChartTest, DehomogenizeAndHomogenize) {
  auto r = Ring::standard(Field::prime(3), 3);
  auto e = parse_polynomial(r, "x0*x1*x2 + (x0 - x1)^3");
  auto d = dehomogenize(e, 2);
  EXPECT_EQ(d.ring()->names(), (std::vector<std::string>{"x0", "x1"}));
  EXPECT_EQ(d, parse_polynomial(d.ring(), "x0*x1 + (x0 - x1)^3"));
  EXPECT_EQ(homogenize(d, 3, r, 2), e);
  auto rx = Ring::make(Field::prime(5), {"x"});
  auto h = homogenize(parse_polynomial(rx, "x + 1"), 2, 1, "z");
  EXPECT_EQ(h, parse_polynomial(h.ring(), "x*z + z^2"));
  Rng rng(8);
  for (int k = 0; k < 30; ++k) {
    auto f = random_form(r, rng, 4);
    const unsigned chart = static_cast<unsigned>(k % 3);
    bool divisible = true;
    for (const auto& t : f.terms()) divisible = divisible && t.m[chart] > 0;
    if (f.is_zero() || divisible) continue;
    EXPECT_EQ(homogenize(dehomogenize(f, chart), 4, r, chart), f);
  }
}

TEST(ParseTest, GrammarAndErrors) {
  auto f9 = Field::extension(3, 2);
  auto r = Ring::make(f9, {"x0", "x1", "l0", "t0"});
  auto p = parse_polynomial(r, "[0,1]*x0^2 - 2*l0*(t0 + 1)");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(parse_polynomial(r, p.to_string()), p);
  EXPECT_THROW(parse_polynomial(r, "x0 + y"), ParseError);
  EXPECT_THROW(parse_polynomial(r, "x0 +"), ParseError);
  EXPECT_THROW(parse_polynomial(r, "(x0"), ParseError);
  EXPECT_THROW(parse_polynomial(r, "x0 ^"), ParseError);
}

}  // namespace
}  // namespace charp::poly
