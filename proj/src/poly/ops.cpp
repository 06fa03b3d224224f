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


#include "charp/poly/ops.hpp"

#include "charp/error.hpp"

namespace charp::poly {
namespace {

Elem small_int(const ff::Field& f, std::uint64_t v) {
  return f.from_int(static_cast<std::int64_t>(v % f.characteristic()));
}

// Lex and grevlex survive adding or dropping a variable; others fall back.
MonomialOrder plain_order(const Ring& ring) {
  const auto& o = ring.order();
  if (o.perm.empty() && o.kind != MonomialOrder::Kind::kBlock) return o;
  return MonomialOrder::grevlex();
}

}  // namespace

Polynomial partial_derivative(const Polynomial& f, unsigned i) {
  const ff::Field& fld = f.field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const unsigned e = t.m[i];
    if (!e) continue;
    Monomial m = t.m;
    m.set(i, e - 1);
    out.push_back({m, fld.mul(t.c, small_int(fld, e))});
  }
  return Polynomial(f.ring(), std::move(out));
}

Polynomial hasse_second_derivative(const Polynomial& f, unsigned i) {
  const ff::Field& fld = f.field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const std::uint64_t e = t.m[i];
    if (e < 2) continue;
    Monomial m = t.m;
    m.set(i, static_cast<unsigned>(e - 2));
    out.push_back({m, fld.mul(t.c, small_int(fld, e * (e - 1) / 2))});
  }
  return Polynomial(f.ring(), std::move(out));
}

Polynomial hasse_second(const Polynomial& f, unsigned i, unsigned j) {
  if (i == j) return hasse_second_derivative(f, i);
  return partial_derivative(partial_derivative(f, i), j);
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  for (unsigned i = 0; i < f.ring()->nvars(); ++i) g.push_back(partial_derivative(f, i));
  return g;
}

std::vector<Polynomial> constant_vector(const RingPtr& ring, const std::vector<Elem>& v) {
  std::vector<Polynomial> out;
  for (Elem e : v) out.push_back(Polynomial::constant(ring, e));
  return out;
}

Polynomial gradient_dot(const Polynomial& f, const std::vector<Polynomial>& v) {
  const unsigned n = f.ring()->nvars();
  if (v.size() != n) throw UsageError("gradient_dot: vector has the wrong length");
  Polynomial sum(f.ring());
  for (unsigned i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    sum += partial_derivative(f, i) * v[i];
  }
  return sum;
}

Polynomial hessian_form(const Polynomial& f, const std::vector<Polynomial>& v) {
  const unsigned n = f.ring()->nvars();
  if (v.size() != n) throw UsageError("hessian_form: vector has the wrong length");
  Polynomial sum(f.ring());
  for (unsigned i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (unsigned j = i; j < n; ++j) {
      if (v[j].is_zero()) continue;
      sum += hasse_second(f, i, j) * v[i] * v[j];
    }
  }
  return sum;
}

Polynomial substitute_linear(const Polynomial& f, const FieldMatrix& m) {
  const RingPtr& ring = f.ring();
  const ff::Field& fld = ring->f();
  const unsigned n = ring->nvars();
  if (m.size() != n) throw UsageError("substitute_linear: matrix has the wrong shape");
  for (const auto& row : m) {
    if (row.size() != n) throw UsageError("substitute_linear: matrix has the wrong shape");
  }
  // Invertibility by Gaussian elimination.
  FieldMatrix a = m;
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw UsageError("substitute_linear: singular matrix");
    std::swap(a[piv], a[c]);
    const Elem inv = fld.inv(a[c][c]);
    for (unsigned r = c + 1; r < n; ++r) {
      if (!a[r][c]) continue;
      const Elem factor = fld.mul(a[r][c], inv);
      for (unsigned k = c; k < n; ++k) a[r][k] = fld.sub(a[r][k], fld.mul(factor, a[c][k]));
    }
  }
  std::vector<Polynomial> images;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (unsigned j = 0; j < n; ++j) {
      if (m[i][j]) terms.push_back({Monomial::variable(j), m[i][j]});
    }
    images.emplace_back(ring, std::move(terms));
  }
  return f.substitute(images);
}

RingPtr chart_ring(const RingPtr& ring, unsigned chart) {
  if (chart >= ring->nvars()) throw UsageError("chart index out of range");
  std::vector<std::string> names;
  for (unsigned i = 0; i < ring->nvars(); ++i) {
    if (i != chart) names.push_back(ring->names()[i]);
  }
  return Ring::make(ring->field(), std::move(names), plain_order(*ring));
}

Polynomial dehomogenize(const Polynomial& f, unsigned chart) {
  const RingPtr target = chart_ring(f.ring(), chart);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (unsigned i = 0, j = 0; i < f.ring()->nvars(); ++i) {
      if (i == chart) continue;
      if (t.m[i]) m.set(j, t.m[i]);
      ++j;
    }
    out.push_back({m, t.c});
  }
  return Polynomial(target, std::move(out));
}

Polynomial homogenize(const Polynomial& f, unsigned d, const RingPtr& target, unsigned chart) {
  if (target->nvars() != f.ring()->nvars() + 1 || chart >= target->nvars()) {
    throw UsageError("homogenize: target ring must have exactly one more variable");
  }
  if (target->field() != f.ring()->field()) throw UsageError("homogenize: field mismatch");
  if (!f.is_zero() && f.total_degree() > d) throw UsageError("homogenize: degree too small");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (unsigned i = 0, j = 0; i < target->nvars(); ++i) {
      if (i == chart) continue;
      if (t.m[j]) m.set(i, t.m[j]);
      ++j;
    }
    m.set(chart, d - t.m.degree());
    out.push_back({m, t.c});
  }
  return Polynomial(target, std::move(out));
}

Polynomial homogenize(const Polynomial& f, unsigned d, unsigned chart, const std::string& name) {
  std::vector<std::string> names = f.ring()->names();
  if (chart > names.size()) throw UsageError("chart index out of range");
  names.insert(names.begin() + chart, name);
  return homogenize(f, d, Ring::make(f.ring()->field(), std::move(names), plain_order(*f.ring())),
                    chart);
}

}  // namespace charp::poly
