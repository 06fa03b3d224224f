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


#include "charp/zerodim/solve.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "charp/poly/ops.hpp"
#include "charp/zerodim/factor.hpp"

namespace charp::zerodim {
namespace {

Elem base_generator_image(const FieldPtr& base) { return base->is_prime() ? 0 : base->gen(); }

struct Partial {
  FieldPtr field;
  Elem theta;
  std::vector<Elem> coords;
};

// Specializes f at the known trailing coordinates; the result is univariate
// in x_k over the partial's field.
UPoly specialize(const Polynomial& f, unsigned k, const Partial& part, const ff::Embedding& lift) {
  const ff::Field& F = *part.field;
  std::vector<Elem> c;
  const unsigned n = f.ring()->nvars();
  for (const auto& t : f.terms()) {
    Elem v = lift.apply(t.c);
    for (unsigned j = k + 1; j < n && v; ++j) {
      if (t.m[j]) v = F.mul(v, F.pow(part.coords[j], t.m[j]));
    }
    const unsigned e = t.m[k];
    if (c.size() <= e) c.resize(e + 1, 0);
    c[e] = F.add(c[e], v);
  }
  return UPoly(part.field, std::move(c));
}

Partial extend(const Partial& part, const FieldPtr& base, unsigned s, const SolveOptions& opts) {
  const std::uint64_t p = base->characteristic();
  const unsigned deg = part.field->degree() * s;
  if (deg / base->degree() > opts.max_residue_degree || !ff::Field::representable(p, deg)) {
    throw ResourceLimit("point field GF(" + std::to_string(p) + "^" + std::to_string(deg) +
                        ") exceeds the extension cap");
  }
  FieldPtr big = ff::Field::extension(p, deg);
  const auto& emb = ff::embedding(part.field, big);
  Partial out{big, base->is_prime() ? 0 : emb.apply(part.theta), part.coords};
  for (auto& c : out.coords) c = emb.apply(c);
  return out;
}

bool coords_less(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Elem frobenius_power(const ff::Field& f, Elem a, std::uint64_t q_power_of_p, unsigned times) {
  for (unsigned i = 0; i < times; ++i) a = f.pow(a, q_power_of_p);
  return a;
}

// Base element whose lift is a, for a in the image of the base field.
Elem pull_back(Elem a, const FieldPtr& base, const ff::Embedding& lift) {
  if (base->is_prime()) {
    if (a >= base->characteristic()) throw InternalError("value is not in the base field");
    return a;
  }
  if (lift.target() == base && lift.image_of_generator() == base->gen()) return a;
  if (base->order() > (std::uint64_t{1} << 20)) throw UsageError("base field too large to invert the lift");
  for (Elem b = 0; b < base->order(); ++b) {
    if (lift.apply(b) == a) return b;
  }
  throw InternalError("value is not in the base field");
}

}  // namespace

ff::Embedding base_lift(const FieldPtr& base, const SchemePoint& p) {
  return ff::Embedding(base, p.field, base->is_prime() ? 0 : p.base_image);
}

Polynomial lift_polynomial(const Polynomial& f, const ff::Embedding& lift) {
  poly::RingPtr target = f.ring()->with_field(lift.target());
  std::vector<poly::Term> t = f.terms();
  for (auto& term : t) term.c = lift.apply(term.c);
  return Polynomial(target, std::move(t));
}

std::vector<SchemePoint> solve_points(const Ideal& ideal, const SolveOptions& opts) {
  const FieldPtr base = ideal.ring()->field();
  const auto g = gb::groebner(ideal, opts.gb);
  if (!g.is_zero_dimensional()) throw UsageError("solve_points: ideal is not zero-dimensional");
  if (g.is_unit()) return {};
  const Ideal rad = radical_zero_dim(ideal, opts.gb);
  const auto lex = change_order(QuotientAlgebra(gb::groebner(rad, opts.gb)), poly::MonomialOrder::lex());
  const unsigned n = ideal.ring()->nvars();
  std::vector<Partial> parts{{base, base_generator_image(base), std::vector<Elem>(n, 0)}};
  for (unsigned k = n; k-- > 0;) {
    std::vector<Polynomial> layer;
    for (const auto& p : lex.basis()) {
      bool inside = true;
      for (unsigned j = 0; j < k && inside; ++j) inside = p.free_of(j);
      if (inside) layer.push_back(p);
    }
    std::vector<Partial> next;
    for (const auto& part : parts) {
      const ff::Embedding lift(base, part.field, part.theta);
      UPoly acc(part.field);
      for (const auto& p : layer) {
        const UPoly s = specialize(p, k, part, lift);
        acc = acc.is_zero() ? s : (s.is_zero() ? acc : gcd(acc, s));
      }
      if (acc.is_zero()) throw InternalError("solve_points: free coordinate in a zero-dimensional ideal");
      if (acc.degree() < 1) continue;
      for (const auto& fac : factor_univariate(acc, opts.seed)) {
        const int s = fac.factor.degree();
        if (s == 1) {
          Partial q = part;
          q.coords[k] = part.field->neg(fac.factor.coeff(0));
          next.push_back(std::move(q));
          continue;
        }
        Partial q = extend(part, base, static_cast<unsigned>(s), opts);
        const auto& emb = ff::embedding(part.field, q.field);
        std::vector<Elem> c;
        for (Elem e : fac.factor.coeffs()) c.push_back(emb.apply(e));
        const auto r = roots(UPoly(q.field, std::move(c)), opts.seed);
        if (r.empty()) throw InternalError("irreducible factor has no root in its splitting field");
        q.coords[k] = r.front();
        next.push_back(std::move(q));
      }
    }
    parts = std::move(next);
  }
  std::vector<SchemePoint> out;
  for (auto& part : parts) {
    SchemePoint sp;
    sp.coords = std::move(part.coords);
    sp.field = part.field;
    sp.base_image = part.theta;
    sp.residue_degree = part.field->degree() / base->degree();
    out.push_back(std::move(sp));
  }
  std::sort(out.begin(), out.end(), [](const SchemePoint& a, const SchemePoint& b) {
    if (a.residue_degree != b.residue_degree) return a.residue_degree < b.residue_degree;
    return coords_less(a.coords, b.coords);
  });
  return out;
}

bool vanishes_at(const Ideal& ideal, const SchemePoint& p) {
  const auto lift = base_lift(ideal.ring()->field(), p);
  for (const auto& g : ideal.gens()) {
    if (lift_polynomial(g, lift).evaluate(p.coords) != 0) return false;
  }
  return true;
}

UPoly minimal_polynomial_over_base(Elem a, const FieldPtr& base, const SchemePoint& frame) {
  const ff::Field& F = *frame.field;
  const std::uint64_t q = base->order();
  UPoly prod = UPoly::constant(frame.field, 1);
  Elem c = a;
  do {
    prod = prod * UPoly(frame.field, {F.neg(c), 1});
    c = F.pow(c, q);
  } while (c != a);
  const auto lift = base_lift(base, frame);
  std::vector<Elem> coeffs;
  for (Elem e : prod.coeffs()) coeffs.push_back(pull_back(e, base, lift));
  return UPoly(base, std::move(coeffs));
}

unsigned local_multiplicity(const Ideal& ideal, const SchemePoint& p, const SolveOptions& opts) {
  if (!vanishes_at(ideal, p)) throw UsageError("local_multiplicity: point is not on the scheme");
  const auto g = gb::groebner(ideal, opts.gb);
  if (!g.is_zero_dimensional()) throw UsageError("local_multiplicity: ideal is not zero-dimensional");
  return local_multiplicity(QuotientAlgebra(g), p, opts);
}

unsigned local_multiplicity(const QuotientAlgebra& a, const SchemePoint& p, const SolveOptions& opts) {
  const FieldPtr base = a.field();
  if (!vanishes_at(a.groebner().ideal(), p)) throw UsageError("local_multiplicity: point is not on the scheme");
  const unsigned n = a.groebner().ring()->nvars();
  const std::size_t dim = a.dim();
  // Generalized eigenspace of all coordinate operators at the conjugates of p.
  ff::Matrix stack(base, 0, dim);
  for (unsigned i = 0; i < n; ++i) {
    const UPoly mp = minimal_polynomial_over_base(p.coords[i], base, p);
    ff::Matrix m = evaluate_matrix_poly(mp, a.mult(i));
    std::size_t r = m.rank();
    for (;;) {
      ff::Matrix m2 = m * m;
      const std::size_t r2 = m2.rank();
      if (r2 == r) break;
      m = std::move(m2);
      r = r2;
    }
    stack = ff::Matrix::vstack(stack, m);
  }
  const auto vbasis = stack.kernel();
  const auto free = stack.free_columns();
  const std::size_t d = vbasis.size();
  if (d == 0) throw InternalError("local_multiplicity: empty primary component");
  // Restricted operators, moved to the point field and shifted by -p_i.
  const auto lift = base_lift(base, p);
  const ff::Field& F = *p.field;
  std::vector<ff::Matrix> c;
  for (unsigned i = 0; i < n; ++i) {
    ff::Matrix ci(p.field, d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const auto w = a.mult(i).apply(vbasis[k]);
      for (std::size_t r = 0; r < d; ++r) ci.at(r, k) = lift.apply(w[free[r]]);
    }
    for (std::size_t r = 0; r < d; ++r) ci.at(r, r) = F.sub(ci.at(r, r), p.coords[i]);
    c.push_back(std::move(ci));
  }
  std::vector<std::vector<Elem>> w;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Elem> e(d, 0);
    e[k] = 1;
    w.push_back(std::move(e));
  }
  for (unsigned step = 0; step < opts.max_local_steps; ++step) {
    ff::Matrix rows(p.field, w.size() * n, d);
    std::size_t r = 0;
    for (unsigned i = 0; i < n; ++i) {
      for (const auto& v : w) {
        const auto img = c[i].apply(v);
        for (std::size_t j = 0; j < d; ++j) rows.at(r, j) = img[j];
        ++r;
      }
    }
    const auto piv = rows.rref();
    if (piv.size() == w.size()) return static_cast<unsigned>(d - w.size());
    std::vector<std::vector<Elem>> next;
    for (std::size_t k = 0; k < piv.size(); ++k) {
      std::vector<Elem> v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = rows.at(k, j);
      next.push_back(std::move(v));
    }
    w = std::move(next);
  }
  throw ResourceLimit("local_multiplicity: m^N did not stabilize within " +
                      std::to_string(opts.max_local_steps) + " steps");
}

unsigned local_multiplicity_gb(const Ideal& ideal, const SchemePoint& p, const SolveOptions& opts) {
  if (!vanishes_at(ideal, p)) throw UsageError("local_multiplicity: point is not on the scheme");
  const auto lift = base_lift(ideal.ring()->field(), p);
  const poly::RingPtr ring = ideal.ring()->with_field(p.field)->with_order(poly::MonomialOrder::grevlex());
  const unsigned n = ring->nvars();
  std::vector<Polynomial> shift;
  for (unsigned i = 0; i < n; ++i) {
    shift.push_back(Polynomial::variable(ring, i) + Polynomial::constant(ring, p.coords[i]));
  }
  Ideal moved(ring);
  for (const auto& g : ideal.gens()) {
    moved.add(lift_polynomial(g, lift).reordered(ring).substitute(shift));
  }
  std::size_t prev = 0;
  for (unsigned big_n = 1; big_n <= opts.max_local_steps; ++big_n) {
    Ideal j = moved;
    // All monomials of degree big_n.
    std::vector<unsigned> e(n, 0);
    std::function<void(unsigned, unsigned)> gen = [&](unsigned i, unsigned left) {
      if (i + 1 == n) {
        e[i] = left;
        j.add(Polynomial::monomial(ring, Monomial::from_exponents(e)));
        return;
      }
      for (unsigned v = 0; v <= left; ++v) {
        e[i] = v;
        gen(i + 1, left - v);
      }
    };
    gen(0, big_n);
    const std::size_t d = gb::groebner(j, opts.gb).degree();
    if (big_n > 1 && d == prev) return static_cast<unsigned>(d);
    prev = d;
  }
  throw ResourceLimit("local_multiplicity_gb: no stabilization within the step cap");
}

unsigned tangent_space_dimension(const Ideal& ideal, const SchemePoint& p) {
  const auto lift = base_lift(ideal.ring()->field(), p);
  const unsigned n = ideal.ring()->nvars();
  ff::Matrix jac(p.field, ideal.gens().size(), n);
  for (std::size_t r = 0; r < ideal.gens().size(); ++r) {
    const Polynomial g = lift_polynomial(ideal.gens()[r], lift);
    for (unsigned j = 0; j < n; ++j) jac.at(r, j) = poly::partial_derivative(g, j).evaluate(p.coords);
  }
  return n - static_cast<unsigned>(jac.rank());
}

SchemePoint canonical_representative(const FieldPtr& base, const SchemePoint& p) {
  SchemePoint out = p;
  const ff::Field& F = *p.field;
  const std::uint64_t ch = F.characteristic();
  if (!base->is_prime()) {
    const Elem canon = ff::embedding(base, p.field).image_of_generator();
    unsigned j = 0;
    Elem t = p.base_image;
    while (t != canon) {
      t = F.pow(t, ch);
      if (++j > F.degree()) throw InternalError("base generator image is not conjugate to the canonical one");
    }
    for (auto& c : out.coords) c = frobenius_power(F, c, ch, j);
    out.base_image = canon;
  }
  std::vector<Elem> best = out.coords;
  std::vector<Elem> cur = out.coords;
  for (unsigned s = 1; s < p.residue_degree; ++s) {
    for (auto& c : cur) c = F.pow(c, base->order());
    if (coords_less(cur, best)) best = cur;
  }
  out.coords = std::move(best);
  return out;
}

}  // namespace charp::zerodim
