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

#include <random>

#include "charp/kernels/dense_mod.hpp"
#include "charp/kernels/modvec.hpp"

namespace charp::kernels {
namespace {

std::vector<std::uint32_t> random_vec(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

TEST(ModVecTest, Avx2MatchesScalar) {
  if (!cpu_has_avx2()) GTEST_SKIP() << "no AVX2 on this machine";
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 4093u, 65521u}) {
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 257u}) {
      const auto src = random_vec(rng, n, p);
      const auto base = random_vec(rng, n, p);
      for (std::uint32_t c : {0u, 1u, p - 1, static_cast<std::uint32_t>(rng() % p)}) {
        auto a = base, b = base;
        scalar::axpy_mod(a.data(), src.data(), n, c, p);
        avx2::axpy_mod(b.data(), src.data(), n, c, p);
        ASSERT_EQ(a, b) << "p=" << p << " n=" << n << " c=" << c;
        a = base;
        b = base;
        scalar::scale_mod(a.data(), n, c, p);
        avx2::scale_mod(b.data(), n, c, p);
        ASSERT_EQ(a, b) << "p=" << p << " n=" << n << " c=" << c;
      }
    }
  }
}

TEST(ModVecTest, ExtremeResidues) {
  if (!cpu_has_avx2()) GTEST_SKIP() << "no AVX2 on this machine";
  const std::uint32_t p = 65521;
  std::vector<std::uint32_t> src(16, p - 1), a(16, p - 1), b(16, p - 1);
  scalar::axpy_mod(a.data(), src.data(), 16, p - 1, p);
  avx2::axpy_mod(b.data(), src.data(), 16, p - 1, p);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a[0], static_cast<std::uint32_t>((static_cast<std::uint64_t>(p - 1) * (p - 1) + p - 1) % p));
}

DenseModMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t p) {
  DenseModMatrix m(r, c, p);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<std::uint32_t>(rng() % p);
  }
  return m;
}

TEST(DenseModMatrixTest, KernelIsAnnihilated) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 5u, 7u, 65521u, 2147483647u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto m = random_matrix(rng, 1 + rng() % 12, 1 + rng() % 12, p);
      const auto ker = m.kernel();
      EXPECT_EQ(ker.size() + m.rank(), m.cols());
      for (const auto& v : ker) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
          std::uint64_t s = 0;
          for (std::size_t j = 0; j < m.cols(); ++j) s = (s + std::uint64_t{m.at(i, j)} * v[j]) % p;
          EXPECT_EQ(s, 0u);
        }
      }
    }
  }
}

TEST(DenseModMatrixTest, ScalarAndVectorPathsAgree) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(rng, 20, 40, 7);
    for (std::size_t j = 0; j < 40; ++j) m.at(19, j) = (m.at(0, j) + 3 * m.at(1, j)) % 7;
    set_force_scalar(true);
    auto a = m;
    a.rref();
    set_force_scalar(false);
    auto b = m;
    b.rref();
    for (std::size_t i = 0; i < 20; ++i) {
      for (std::size_t j = 0; j < 40; ++j) ASSERT_EQ(a.at(i, j), b.at(i, j));
    }
    EXPECT_LE(m.rank(), 19u);
  }
}

TEST(DenseModMatrixTest, IdentityRank) {
  DenseModMatrix m(4, 4, 3);
  for (std::size_t i = 0; i < 4; ++i) m.at(i, i) = 1;
  EXPECT_EQ(m.rank(), 4u);
  EXPECT_TRUE(m.kernel().empty());
  EXPECT_EQ(inv_mod(2, 3), 2u);
}

}  // namespace
}  // namespace charp::kernels
