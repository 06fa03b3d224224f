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

#include "charp/error.hpp"
#include "charp/ff/embed.hpp"
#include "charp/ff/field.hpp"
#include "charp/ff/upoly.hpp"

namespace charp::ff {
namespace {

std::vector<Elem> all_elements(const Field& f) {
  std::vector<Elem> out;
  for (Elem a = 0; a < f.order(); ++a) out.push_back(a);
  return out;
}

TEST(PrimeFieldTest, SmallArithmetic) {
  auto f = Field::prime(3);
  EXPECT_EQ(f->add(2, 2), 1u);
  EXPECT_EQ(f->mul(2, 2), 1u);
  EXPECT_EQ(f->neg(1), 2u);
  EXPECT_EQ(f->inv(2), 2u);
  EXPECT_THROW(f->inv(0), DivisionByZero);
}

TEST(ExtensionFieldTest, GF4GeneratorSquare) {
  auto f = Field::make({2, 2, {1, 1, 1}});
  const Elem t = f->gen();
  EXPECT_EQ(f->mul(t, t), f->add(t, 1));
  EXPECT_EQ(f->format(f->mul(t, t)), "[1,1]");
}

TEST(ExtensionFieldTest, GF9NonzeroOrder) {
  auto f = Field::extension(3, 2);
  for (Elem a = 1; a < 9; ++a) EXPECT_EQ(f->pow(a, 8), 1u) << a;
}

TEST(ExtensionFieldTest, RejectsReducibleModulus) {
  EXPECT_THROW(Field::make({2, 2, {1, 0, 1}}), UsageError);
  EXPECT_THROW(Field::make({4, 1, {}}), UsageError);
}

TEST(ExtensionFieldTest, InterningSharesPointers) {
  EXPECT_EQ(Field::extension(5, 2), Field::extension(5, 2));
  EXPECT_EQ(Field::prime(7), Field::prime(7));
}

TEST(ExtensionFieldTest, ElementMismatchIsUsageError) {
  FieldElement a(Field::prime(3), 1);
  FieldElement b(Field::prime(5), 1);
  EXPECT_THROW(a + b, UsageError);
}

class FieldAxiomsTest : public ::testing::TestWithParam<std::pair<std::uint64_t, unsigned>> {};

TEST_P(FieldAxiomsTest, RandomAxioms) {
  const auto [p, k] = GetParam();
  auto f = Field::extension(p, k);
  Rng rng(p * 131 + k);
  for (int i = 0; i < 300; ++i) {
    const Elem a = f->random(rng), b = f->random(rng), c = f->random(rng);
    EXPECT_EQ(f->add(a, b), f->add(b, a));
    EXPECT_EQ(f->mul(a, b), f->mul(b, a));
    EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
    EXPECT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
    EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    EXPECT_EQ(f->sub(f->add(a, b), b), a);
    if (a) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
    EXPECT_EQ(f->pow(a, f->order()), a);
    EXPECT_EQ(f->pth_root(f->frobenius(a)), a);
    EXPECT_EQ(f->frobenius(f->pth_root(a)), a);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Fields, FieldAxiomsTest,
    ::testing::Values(std::pair<std::uint64_t, unsigned>{2, 1}, std::pair<std::uint64_t, unsigned>{2, 3},
                      std::pair<std::uint64_t, unsigned>{2, 8}, std::pair<std::uint64_t, unsigned>{2, 20},
                      std::pair<std::uint64_t, unsigned>{3, 3}, std::pair<std::uint64_t, unsigned>{3, 12},
                      std::pair<std::uint64_t, unsigned>{5, 2}, std::pair<std::uint64_t, unsigned>{7, 2},
                      std::pair<std::uint64_t, unsigned>{7, 9}, std::pair<std::uint64_t, unsigned>{65521, 1},
                      std::pair<std::uint64_t, unsigned>{2147483647, 1}));

TEST(FrobeniusTest, ExhaustiveSmallFields) {
  auto f2 = Field::prime(2);
  for (Elem a : all_elements(*f2)) EXPECT_EQ(f2->frobenius(a), a);
  auto f9 = Field::extension(3, 2);
  for (Elem a : all_elements(*f9)) EXPECT_EQ(f9->pth_root(f9->frobenius(a)), a);
  auto f8 = Field::extension(2, 3);
  for (Elem a : all_elements(*f8)) {
    EXPECT_EQ(f8->frobenius(f8->frobenius(f8->frobenius(a))), a);
  }
}

TEST(RandomIrreducibleTest, Examples) {
  auto lin = random_irreducible(2, 1, 5);
  ASSERT_EQ(lin.size(), 2u);
  EXPECT_EQ(lin[1], 1u);
  auto f3 = Field::prime(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = random_irreducible(3, 2, seed);
    UPoly q(f3, {c.begin(), c.end()});
    for (Elem x = 0; x < 3; ++x) EXPECT_NE(q.eval(x), 0u);
  }
  auto f2 = Field::prime(2);
  const UPoly x = UPoly::x(f2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = random_irreducible(2, 4, seed);
    UPoly m(f2, {c.begin(), c.end()});
    EXPECT_EQ(m.degree(), 4);
    auto xp = [&](unsigned e) {
      return UPoly::monomial(f2, 1, std::size_t{1} << e) - x;
    };
    EXPECT_TRUE((xp(4) % m).is_zero());
    EXPECT_TRUE(gcd(xp(2), m).is_one());
    EXPECT_TRUE(gcd(xp(1), m).is_one());
  }
  EXPECT_EQ(random_irreducible(5, 6, 77), random_irreducible(5, 6, 77));
}

TEST(EmbedTest, HomomorphismAndInjectivity) {
  const std::vector<std::tuple<std::uint64_t, unsigned, unsigned>> cases{
      {2, 1, 2}, {2, 2, 4}, {2, 3, 6}, {3, 2, 4}, {3, 1, 3}, {2, 4, 8}, {3, 4, 8}, {5, 2, 4}, {7, 2, 4}, {3, 3, 6}};
  for (const auto& [p, k, m] : cases) {
    auto src = Field::extension(p, k);
    auto dst = Field::extension(p, m);
    EXPECT_EQ(embed(0, src, dst), 0u);
    EXPECT_EQ(embed(1, src, dst), 1u);
    std::set<Elem> image;
    if (src->order() <= 81) {
      for (Elem a = 0; a < src->order(); ++a) image.insert(embed(a, src, dst));
      EXPECT_EQ(image.size(), src->order());
    }
    Rng rng(p + k + m);
    for (int i = 0; i < 100; ++i) {
      const Elem a = src->random(rng), b = src->random(rng);
      EXPECT_EQ(embed(src->add(a, b), src, dst), dst->add(embed(a, src, dst), embed(b, src, dst)));
      EXPECT_EQ(embed(src->mul(a, b), src, dst), dst->mul(embed(a, src, dst), embed(b, src, dst)));
    }
    EXPECT_EQ(&embedding(src, dst), &embedding(src, dst));
  }
  auto f2 = Field::prime(2);
  auto f4 = Field::extension(2, 2);
  EXPECT_EQ(embed(1, f2, f4), 1u);
  EXPECT_THROW(embedding(Field::extension(2, 2), Field::extension(2, 3)), UsageError);
}

TEST(ParseTest, FieldAndElementLiterals) {
  EXPECT_EQ(parse_field("GF(3)"), Field::prime(3));
  EXPECT_EQ(parse_field("GF(2^4)"), Field::extension(2, 4));
  EXPECT_EQ(parse_field("GF(9)"), Field::extension(3, 2));
  auto f = parse_field("GF(2^4; t^4+t+1)");
  EXPECT_EQ(f->degree(), 4u);
  EXPECT_EQ(f->descriptor().modulus, (std::vector<std::uint64_t>{1, 1, 0, 0, 1}));
  EXPECT_THROW(parse_field("GF(6)"), ParseError);
  EXPECT_THROW(parse_field("GF(2^4; t^4+1)"), ParseError);
  EXPECT_THROW(parse_field("F(3)"), ParseError);
  auto f9 = Field::extension(3, 2);
  EXPECT_EQ(parse_element(*f9, "[1,2]"), f9->from_coeffs(std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(parse_element(*f9, "-1"), 2u);
  EXPECT_THROW(parse_element(*f9, "[1,2,0]"), ParseError);
}

TEST(UPolyTest, DivisionAndGcd) {
  auto f = Field::prime(5);
  UPoly a(f, {4, 0, 1});  // x^2 - 1
  UPoly b(f, {4, 1});     // x - 1
  EXPECT_TRUE((a % b).is_zero());
  EXPECT_EQ(a / b, UPoly(f, {1, 1}));
  EXPECT_EQ(gcd(a, UPoly(f, {1, 1})), UPoly(f, {1, 1}));
  EXPECT_THROW(a / UPoly(f), DivisionByZero);
}

}  // namespace
}  // namespace charp::ff
