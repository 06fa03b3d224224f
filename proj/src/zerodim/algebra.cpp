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


#include "charp/zerodim/algebra.hpp"

#include <algorithm>
#include <cstdint>

#include "charp/zerodim/factor.hpp"

namespace charp::zerodim {
namespace {

bool mono_less(const Monomial& a, const Monomial& b) {
  return a.word(0) != b.word(0) ? a.word(0) < b.word(0) : a.word(1) < b.word(1);
}

}  // namespace

QuotientAlgebra::QuotientAlgebra(gb::GroebnerBasis g) : g_(std::move(g)) {
  basis_ = g_.quotient_basis();
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace_back(basis_[i], i);
  std::sort(index_.begin(), index_.end(),
            [](const auto& a, const auto& b) { return mono_less(a.first, b.first); });
  mult_.assign(g_.ring()->nvars(), ff::Matrix(field(), 0, 0));
  have_mult_.assign(g_.ring()->nvars(), false);
}

std::size_t QuotientAlgebra::find(const Monomial& m) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), m,
                             [](const auto& a, const Monomial& b) { return mono_less(a.first, b); });
  return it == index_.end() || !(it->first == m) ? dim() : it->second;
}

std::size_t QuotientAlgebra::index_of(const Monomial& m) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), m,
                             [](const auto& a, const Monomial& b) { return mono_less(a.first, b); });
  if (it == index_.end() || !(it->first == m)) throw InternalError("monomial outside the staircase");
  return it->second;
}

std::vector<Elem> QuotientAlgebra::coords(const Polynomial& f) const {
  std::vector<Elem> v(dim(), 0);
  const Polynomial nf = g_.normal_form(f);
  for (const auto& t : nf.terms()) v[index_of(t.m)] = t.c;
  return v;
}

const ff::Matrix& QuotientAlgebra::mult(unsigned i) const {
  if (!have_mult_.at(i)) {
    mult_[i] = mult_by(Polynomial::variable(g_.ring(), i));
    have_mult_[i] = true;
  }
  return mult_[i];
}

ff::Matrix QuotientAlgebra::mult_by(const Polynomial& f) const {
  const std::size_t d = dim();
  ff::Matrix m(field(), d, d);
  const bool single = f.size() == 1 && f.lead_coeff() == 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (single) {
      const std::size_t k = find(f.lead_monomial() * basis_[j]);
      if (k < d) {
        m.at(k, j) = 1;
        continue;
      }
    }
    const auto col = coords(f.mul_term(basis_[j], 1));
    for (std::size_t i = 0; i < d; ++i) m.at(i, j) = col[i];
  }
  return m;
}

namespace {

// FGLM walk over the monomials of `ring` in increasing order. `apply(i, w)`
// multiplies the vector of a monomial by variable i of `ring`; the result is
// the reduced basis of the kernel of k[ring] -> k^dim.
template <class Apply>
gb::GroebnerBasis fglm_walk(const poly::RingPtr& ring, std::size_t d, const std::vector<Elem>& one,
                            const Apply& apply, const ResourceStats& stats) {
  const ff::Field& f = ring->f();
  const unsigned n = ring->nvars();
  struct Row {
    std::vector<Elem> v;
    std::vector<Elem> comb;  // over the new staircase
    std::size_t pivot;
  };
  std::vector<Row> rows;
  std::vector<Monomial> stair;
  std::vector<std::vector<Elem>> stair_vec;
  std::vector<Polynomial> out;
  std::vector<Monomial> leads;
  // Candidates with the staircase element and variable they come from.
  struct Cand {
    Monomial m;
    std::size_t from;
    unsigned var;
  };
  auto cmp = [&ring](const Cand& x, const Cand& y) { return ring->compare(x.m, y.m) > 0; };
  std::vector<Cand> heap;
  auto push = [&](Cand c) {
    heap.push_back(c);
    std::push_heap(heap.begin(), heap.end(), cmp);
  };
  std::vector<Monomial> seen;
  push({Monomial(), SIZE_MAX, 0});
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), cmp);
    const Cand c = heap.back();
    heap.pop_back();
    if (std::find(seen.begin(), seen.end(), c.m) != seen.end()) continue;
    seen.push_back(c.m);
    bool is_multiple = false;
    for (const auto& l : leads) is_multiple = is_multiple || l.divides(c.m);
    if (is_multiple) continue;
    std::vector<Elem> v = c.from == SIZE_MAX ? one : apply(c.var, stair_vec[c.from]);
    const std::vector<Elem> orig = v;
    std::vector<Elem> comb(stair.size() + 1, 0);
    comb.back() = 1;
    for (const auto& r : rows) {
      const Elem x = v[r.pivot];
      if (!x) continue;
      const Elem nx = f.neg(x);
      for (std::size_t i = 0; i < d; ++i) {
        if (r.v[i]) v[i] = f.add(v[i], f.mul(nx, r.v[i]));
      }
      for (std::size_t i = 0; i < r.comb.size(); ++i) {
        if (r.comb[i]) comb[i] = f.add(comb[i], f.mul(nx, r.comb[i]));
      }
    }
    std::size_t piv = 0;
    while (piv < d && v[piv] == 0) ++piv;
    if (piv == d) {
      // c.m plus the combination of staircase monomials vanishes.
      std::vector<poly::Term> t{{c.m, 1}};
      for (std::size_t i = 0; i < stair.size(); ++i) {
        if (comb[i]) t.push_back({stair[i], comb[i]});
      }
      out.push_back(Polynomial(ring, std::move(t)));
      leads.push_back(c.m);
      continue;
    }
    const Elem inv = f.inv(v[piv]);
    for (auto& x : v) x = f.mul(x, inv);
    for (auto& x : comb) x = f.mul(x, inv);
    rows.push_back({std::move(v), std::move(comb), piv});
    const std::size_t idx = stair.size();
    stair.push_back(c.m);
    stair_vec.push_back(orig);
    for (unsigned i = 0; i < n; ++i) push({c.m * Monomial::variable(i), idx, i});
  }
  std::sort(out.begin(), out.end(), [&ring](const Polynomial& x, const Polynomial& y) {
    return ring->compare(x.lead_monomial(), y.lead_monomial()) < 0;
  });
  return gb::GroebnerBasis(ring, std::move(out), stats);
}

}  // namespace

gb::GroebnerBasis change_order(const QuotientAlgebra& a, const poly::MonomialOrder& order) {
  const poly::RingPtr ring = a.groebner().ring()->with_order(order);
  return fglm_walk(ring, a.dim(), a.coords(Polynomial::constant(a.groebner().ring(), 1)),
                   [&a](unsigned i, const std::vector<Elem>& w) { return a.mult(i).apply(w); },
                   a.groebner().stats());
}

gb::GroebnerBasis joint_elimination(const std::vector<const QuotientAlgebra*>& algebras,
                                    const std::vector<unsigned>& keep) {
  if (algebras.empty()) throw UsageError("joint_elimination: no algebras");
  const poly::RingPtr src = algebras.front()->groebner().ring();
  std::vector<std::string> names;
  for (unsigned k : keep) names.push_back(src->names().at(k));
  const poly::RingPtr ring = poly::Ring::make(src->field(), names, poly::MonomialOrder::grevlex());
  std::vector<std::size_t> offset{0};
  std::vector<Elem> one;
  ResourceStats stats;
  for (const auto* a : algebras) {
    if (a->field() != src->field()) throw UsageError("joint_elimination: algebras over different fields");
    const auto c = a->coords(Polynomial::constant(a->groebner().ring(), 1));
    one.insert(one.end(), c.begin(), c.end());
    offset.push_back(one.size());
    stats.pairs_processed += a->groebner().stats().pairs_processed;
  }
  auto apply = [&](unsigned i, const std::vector<Elem>& w) {
    std::vector<Elem> out;
    out.reserve(w.size());
    for (std::size_t b = 0; b < algebras.size(); ++b) {
      if (offset[b] == offset[b + 1]) continue;
      const std::vector<Elem> part(w.begin() + offset[b], w.begin() + offset[b + 1]);
      const auto img = algebras[b]->mult(keep[i]).apply(part);
      out.insert(out.end(), img.begin(), img.end());
    }
    return out;
  };
  return fglm_walk(ring, one.size(), one, apply, stats);
}

UPoly QuotientAlgebra::minimal_polynomial(const Polynomial& f) const {
  return krylov_minimal_polynomial(mult_by(f), coords(Polynomial::constant(g_.ring(), 1)));
}

UPoly krylov_minimal_polynomial(const ff::Matrix& m, const std::vector<Elem>& v0) {
  const ff::Field& f = *m.field();
  const std::size_t d = m.rows();
  // Echelon rows with their combinations in terms of the Krylov vectors.
  struct Row {
    std::vector<Elem> v;
    std::vector<Elem> comb;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  std::vector<Elem> v = v0;
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<Elem> w = v;
    std::vector<Elem> comb(k + 1, 0);
    comb[k] = 1;
    for (const auto& r : rows) {
      const Elem c = w[r.pivot];
      if (!c) continue;
      const Elem nc = f.neg(c);
      for (std::size_t i = 0; i < d; ++i) {
        if (r.v[i]) w[i] = f.add(w[i], f.mul(nc, r.v[i]));
      }
      for (std::size_t i = 0; i < r.comb.size(); ++i) {
        if (r.comb[i]) comb[i] = f.add(comb[i], f.mul(nc, r.comb[i]));
      }
    }
    std::size_t piv = 0;
    while (piv < d && w[piv] == 0) ++piv;
    if (piv == d) return UPoly(m.field(), std::move(comb)).monic();
    const Elem inv = f.inv(w[piv]);
    for (auto& x : w) x = f.mul(x, inv);
    for (auto& x : comb) x = f.mul(x, inv);
    rows.push_back({std::move(w), std::move(comb), piv});
    v = m.apply(v);
  }
  throw InternalError("Krylov iteration did not terminate");
}

ff::Matrix evaluate_matrix_poly(const UPoly& p, const ff::Matrix& m) {
  const std::size_t d = m.rows();
  ff::Matrix acc(m.field(), d, d);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t j = 0; j < d; ++j) acc.at(j, j) = m.field()->add(acc.at(j, j), p.coeffs()[i]);
  }
  return acc;
}

namespace {

Polynomial univariate_in(const gb::GroebnerBasis& g, const UPoly& u, unsigned var) {
  std::vector<poly::Term> t;
  for (std::size_t e = 0; e < u.coeffs().size(); ++e) {
    if (u.coeffs()[e]) t.push_back({Monomial::variable(var, static_cast<unsigned>(e)), u.coeffs()[e]});
  }
  return Polynomial(g.ring(), std::move(t));
}

}  // namespace

Ideal radical_zero_dim(const Ideal& ideal, const gb::GbOptions& opts) {
  const auto g = gb::groebner(ideal, opts);
  if (!g.is_zero_dimensional()) throw UsageError("radical_zero_dim: ideal is not zero-dimensional");
  if (g.is_unit()) return g.ideal();
  QuotientAlgebra a(g);
  Ideal out(g.ring(), g.basis());
  for (unsigned i = 0; i < g.ring()->nvars(); ++i) {
    const UPoly mp = a.minimal_polynomial(Polynomial::variable(g.ring(), i));
    out.add(univariate_in(g, squarefree_part(mp), i));
  }
  // Back in the caller's ring.
  Ideal res(ideal.ring());
  for (const auto& p : out.gens()) res.add(p.ring() == ideal.ring() ? p : p.reordered(ideal.ring()));
  return res;
}

std::size_t radical_degree(const Ideal& ideal, const gb::GbOptions& opts) {
  return gb::groebner(radical_zero_dim(ideal, opts), opts).degree();
}

}  // namespace charp::zerodim
