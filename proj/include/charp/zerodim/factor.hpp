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

#include <cstdint>
#include <vector>

#include "charp/ff/upoly.hpp"

namespace charp::zerodim {

using ff::Elem;
using ff::UPoly;

struct UFactor {
  UPoly factor;  // monic
  unsigned exponent;
};

/// Squarefree decomposition in characteristic p. Handles f' == 0 by
/// extracting p-th roots of the coefficients. Factors are monic, pairwise
/// coprime and squarefree; the product of factor^exponent is f up to a unit.
std::vector<UFactor> squarefree_decomposition_charp(const UPoly& f);

/// Product of the distinct monic irreducible factors of f.
UPoly squarefree_part(const UPoly& f);

/// g with g(x^p) == f, coefficientwise p-th roots. Requires f' == 0.
UPoly pth_root_poly(const UPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<UPoly, unsigned>> distinct_degree_factorization(const UPoly& f);

/// Cantor-Zassenhaus splitting of a product of irreducibles of degree d.
std::vector<UPoly> equal_degree_factorization(const UPoly& f, unsigned d, Rng& rng);

/// Complete factorization into monic irreducibles with exponents, sorted by
/// (degree, coefficients). The seed only drives the random splitting, so the
/// result does not depend on it.
std::vector<UFactor> factor_univariate(const UPoly& f, std::uint64_t seed = 0);

/// Distinct roots of f in its coefficient field, ascending by packed value.
std::vector<Elem> roots(const UPoly& f, std::uint64_t seed = 0);

}  // namespace charp::zerodim
