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

#include "charp/zerodim/factor.hpp"

#include <algorithm>

#include "charp/error.hpp"

namespace charp::zerodim {
namespace {

bool factor_less(const UFactor& a, const UFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coeffs();
  const auto& cb = b.factor.coeffs();
  if (ca != cb) return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
  return a.exponent < b.exponent;
}

UPoly random_poly_below(const ff::FieldPtr& f, int degree, Rng& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(degree));
  for (auto& v : c) v = f->random(rng);
  return UPoly(f, std::move(c));
}

// Splits f (product of irreducibles of degree d) once. Returns a proper
// factor or an empty polynomial when the random draw was unlucky.
UPoly split_once(const UPoly& f, unsigned d, Rng& rng) {
  const auto& field = f.field();
  const UPoly a = random_poly_below(field, f.degree(), rng);
  if (a.degree() < 1) return UPoly(field);
  UPoly g = gcd(a, f);
  if (g.degree() > 0 && g.degree() < f.degree()) return g;
  UPoly h(field);
  if (field->characteristic() == 2) {
    // Absolute trace to F_2 over GF(q^d).
    const unsigned steps = field->degree() * d;
    UPoly t = a % f;
    UPoly acc = t;
    for (unsigned i = 1; i < steps; ++i) {
      t = mulmod(t, t, f);
      acc = acc + t;
    }
    h = acc;
  } else {
    // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q - 1)/2).
    const std::uint64_t q = field->order();
    UPoly t = a % f;
    UPoly norm = t;
    for (unsigned i = 1; i < d; ++i) {
      t = powmod(t, q, f);
      norm = mulmod(norm, t, f);
    }
    h = powmod(norm, (q - 1) / 2, f) - UPoly::constant(field, 1);
  }
  g = gcd(h, f);
  if (g.degree() > 0 && g.degree() < f.degree()) return g;
  return UPoly(field);
}

}  // namespace

UPoly pth_root_poly(const UPoly& f) {
  const auto& field = f.field();
  const std::uint64_t p = field->characteristic();
  std::vector<Elem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i % p == 0) {
      c.push_back(field->pth_root(f.coeffs()[i]));
    } else if (f.coeffs()[i] != 0) {
      throw UsageError("pth_root_poly: polynomial is not a p-th power");
    }
  }
  return UPoly(field, std::move(c));
}

std::vector<UFactor> squarefree_decomposition_charp(const UPoly& f) {
  if (f.is_zero()) throw UsageError("squarefree decomposition of zero");
  std::vector<UFactor> out;
  UPoly g = f.monic();
  if (g.degree() < 1) return out;
  const unsigned p = static_cast<unsigned>(
      std::min<std::uint64_t>(g.field()->characteristic(), 1u << 30));
  const UPoly d = g.derivative();
  if (d.is_zero()) {
    for (auto& fac : squarefree_decomposition_charp(pth_root_poly(g))) {
      out.push_back({fac.factor, fac.exponent * p});
    }
    std::sort(out.begin(), out.end(), factor_less);
    return out;
  }
  UPoly c = gcd(g, d);
  UPoly w = g / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    for (auto& fac : squarefree_decomposition_charp(pth_root_poly(c.monic()))) {
      out.push_back({fac.factor, fac.exponent * p});
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

UPoly squarefree_part(const UPoly& f) {
  UPoly r = UPoly::constant(f.field(), 1);
  for (const auto& fac : squarefree_decomposition_charp(f)) r = r * fac.factor;
  return r;
}

std::vector<std::pair<UPoly, unsigned>> distinct_degree_factorization(const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  const auto& field = f.field();
  UPoly rest = f.monic();
  const UPoly x = UPoly::x(field);
  UPoly h = x % rest;
  const std::uint64_t q = field->order();
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
    h = powmod(h, q, rest);
    UPoly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<UPoly> equal_degree_factorization(const UPoly& f, unsigned d, Rng& rng) {
  std::vector<UPoly> done;
  std::vector<UPoly> todo{f.monic()};
  while (!todo.empty()) {
    UPoly g = std::move(todo.back());
    todo.pop_back();
    if (g.degree() <= static_cast<int>(d)) {
      done.push_back(g);
      continue;
    }
    UPoly h(g.field());
    for (int attempt = 0; attempt < 10000 && h.is_zero(); ++attempt) {
      h = split_once(g, d, rng);
    }
    if (h.is_zero()) throw InternalError("equal-degree splitting did not converge");
    todo.push_back(h.monic());
    todo.push_back((g / h).monic());
  }
  return done;
}

std::vector<UFactor> factor_univariate(const UPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw UsageError("factorization of the zero polynomial");
  std::vector<UFactor> out;
  Rng rng(seed);
  for (const auto& sq : squarefree_decomposition_charp(f)) {
    for (const auto& [part, d] : distinct_degree_factorization(sq.factor)) {
      for (auto& irr : equal_degree_factorization(part, d, rng)) {
        out.push_back({irr, sq.exponent});
      }
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::vector<Elem> roots(const UPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw UsageError("roots of the zero polynomial");
  std::vector<Elem> out;
  if (f.degree() < 1) return out;
  const auto& field = f.field();
  const UPoly x = UPoly::x(field);
  const UPoly g = f.monic();
  // Product of the distinct linear factors: gcd(f, x^q - x).
  UPoly lin = gcd(powmod(x, field->order(), g) - x, g);
  if (lin.degree() < 1) return out;
  Rng rng(seed);
  for (const auto& r : equal_degree_factorization(lin, 1, rng)) {
    out.push_back(field->neg(r.coeff(0)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace charp::zerodim
