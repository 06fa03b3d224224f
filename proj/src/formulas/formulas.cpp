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


#include "charp/formulas/formulas.hpp"

#include <map>
#include <mutex>

#include "charp/error.hpp"

namespace charp::formulas {
namespace {

std::mutex g_fact_mu;
std::vector<BigInt> g_fact{1};

}  // namespace

BigInt factorial(unsigned n) {
  std::lock_guard<std::mutex> lock(g_fact_mu);
  while (g_fact.size() <= n) g_fact.push_back(g_fact.back() * static_cast<unsigned long>(g_fact.size()));
  return g_fact[n];
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<BigInt> elementary_symmetric_all(const std::vector<BigInt>& values) {
  // Coefficients of prod (1 + v_i z).
  std::vector<BigInt> s(values.size() + 1, 0);
  s[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t h = i + 1; h >= 1; --h) s[h] += s[h - 1] * values[i];
  }
  return s;
}

BigInt elementary_symmetric(const std::vector<BigInt>& values, std::size_t h) {
  if (h > values.size()) throw UsageError("elementary_symmetric: index out of range");
  return elementary_symmetric_all(values)[h];
}

DejonquieresNumber dejonquieres(unsigned g, unsigned v, const std::vector<unsigned>& m) {
  if (m.empty()) throw UsageError("dejonquieres: empty multiplicity vector");
  const unsigned t = static_cast<unsigned>(m.size());
  BigInt prod = 1;
  std::vector<BigInt> shifted;
  std::map<unsigned, unsigned> counts;
  for (unsigned mi : m) {
    if (mi == 0) throw UsageError("dejonquieres: multiplicities must be positive");
    prod *= mi;
    shifted.emplace_back(mi - 1);
    ++counts[mi];
  }
  const auto sigma = elementary_symmetric_all(shifted);
  BigInt sum = 0;
  for (unsigned h = 0; h <= t; ++h) {
    sum += binomial(t + v - h, v) * binomial(g, h) * factorial(t - h) * factorial(h) * sigma[h];
  }
  DejonquieresNumber out;
  out.value = prod * sum;
  out.stab = 1;
  for (const auto& [mi, c] : counts) out.stab *= factorial(c);
  if (!mpz_divisible_p(out.value.get_mpz_t(), out.stab.get_mpz_t())) {
    throw InternalError("dejonquieres: stabilizer does not divide J");
  }
  out.unordered = out.value / out.stab;
  out.divisible = mpz_divisible_p(out.unordered.get_mpz_t(), prod.get_mpz_t()) != 0;
  return out;
}

CountPrediction plucker_counts(unsigned d, std::uint64_t characteristic) {
  if (d < 2) throw UsageError("plucker_counts: degree must be at least 2");
  CountPrediction c;
  c.problem = "flexes-d" + std::to_string(d);
  c.characteristic = characteristic;
  c.total = 3ull * d * (d - 2);
  c.multiplicity = characteristic == 3 ? 3 : 1;
  c.points = c.total / c.multiplicity;
  return c;
}

CountPrediction theta_counts(unsigned g, std::uint64_t characteristic) {
  if (g < 3 || g > 31) throw UsageError("theta_counts: genus must be in [3, 31]");
  CountPrediction c;
  c.problem = "theta-g" + std::to_string(g);
  c.characteristic = characteristic;
  const std::uint64_t half = 1ull << (g - 1);
  const std::uint64_t odd = (1ull << g) - 1;
  c.total = half * odd;
  c.multiplicity = characteristic == 2 ? static_cast<unsigned>(half) : 1;
  c.points = c.total / c.multiplicity;
  return c;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_below(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 3) return out;
  std::vector<bool> composite(n, false);
  for (std::uint64_t i = 2; i < n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < n; j += i) composite[j] = true;
  }
  return out;
}

CentralBinomialResidues central_binomial_congruence(std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("central_binomial_congruence: " + std::to_string(p) + " is not prime");
  if (p > (1u << 30)) throw UsageError("central_binomial_congruence: prime too large");
  const BigInt n = binomial(static_cast<unsigned>(2 * p), static_cast<unsigned>(p));
  const BigInt bp = static_cast<unsigned long>(p);
  CentralBinomialResidues r;
  r.p = p;
  const BigInt p2 = bp * bp;
  const BigInt p3 = p2 * bp;
  mpz_mod(r.mod_p2.get_mpz_t(), n.get_mpz_t(), p2.get_mpz_t());
  mpz_mod(r.mod_p3.get_mpz_t(), n.get_mpz_t(), p3.get_mpz_t());
  return r;
}

bool steiner_identity() { return kSteinerConics == 2u * 32u * kSteinerConicsChar2; }

}  // namespace charp::formulas
