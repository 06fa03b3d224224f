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


#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace charp::formulas {

using BigInt = mpz_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// sigma_h(values). UsageError unless h <= values.size().
BigInt elementary_symmetric(const std::vector<BigInt>& values, std::size_t h);
/// sigma_0, ..., sigma_t.
std::vector<BigInt> elementary_symmetric_all(const std::vector<BigInt>& values);

struct DejonquieresNumber {
  BigInt value;
  /// Order of the stabilizer of m in the symmetric group.
  BigInt stab;
  /// value / stab.
  BigInt unordered;
  /// prod m_i divides unordered.
  bool divisible = false;
};

/// Expected number of hyperplanes with contact at least m_1, ..., m_t at t
/// ordered points of a genus g curve of degree v + sum m_i.
DejonquieresNumber dejonquieres(unsigned g, unsigned v, const std::vector<unsigned>& m);

struct CountPrediction {
  std::string problem;
  std::uint64_t characteristic = 0;
  std::uint64_t points = 0;
  unsigned multiplicity = 1;
  std::uint64_t total = 0;
};

/// Flexes of a general plane curve of degree d >= 2.
CountPrediction plucker_counts(unsigned d, std::uint64_t characteristic);
/// Odd theta hyperplanes of a general canonical curve of genus g >= 3.
CountPrediction theta_counts(unsigned g, std::uint64_t characteristic);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_below(std::uint64_t n);

struct CentralBinomialResidues {
  std::uint64_t p = 0;
  /// C(2p, p) mod p^2 and mod p^3.
  BigInt mod_p2;
  BigInt mod_p3;
  bool holds_p2() const { return mod_p2 == 2; }
  bool holds_p3() const { return mod_p3 == 2; }
};

/// UsageError unless p is prime.
CentralBinomialResidues central_binomial_congruence(std::uint64_t p);

inline constexpr unsigned kSteinerConics = 3264;
inline constexpr unsigned kSteinerConicsChar2 = 51;
/// 3264 == 2 * 2^5 * 51.
bool steiner_identity();

}  // namespace charp::formulas
