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


#include "charp/groebner/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>

namespace charp::gb {
namespace {

using poly::Ring;
using poly::Term;

// Sum of sorted term lists kept in ascending order so that the leading term
// sits at the back of each bucket.
class GeoBucket {
 public:
  explicit GeoBucket(const Ring& ring) : ring_(ring), f_(ring.f()) {}

  void add(std::vector<Term> asc) {
    std::size_t level = 0;
    while (capacity(level) < asc.size()) ++level;
    for (;;) {
      if (buckets_.size() <= level) buckets_.resize(level + 1);
      if (buckets_[level].empty()) {
        buckets_[level] = std::move(asc);
        return;
      }
      asc = merge(std::move(buckets_[level]), std::move(asc));
      buckets_[level].clear();
      if (asc.size() <= capacity(level)) {
        buckets_[level] = std::move(asc);
        return;
      }
      ++level;
    }
  }

  bool pop_lead(Term& out) {
    for (;;) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || ring_.compare(buckets_[i].back().m, buckets_[best].back().m) > 0) {
          best = static_cast<int>(i);
        }
      }
      if (best < 0) return false;
      Term t = buckets_[best].back();
      buckets_[best].pop_back();
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (static_cast<int>(i) == best || buckets_[i].empty()) continue;
        if (buckets_[i].back().m == t.m) {
          t.c = f_.add(t.c, buckets_[i].back().c);
          buckets_[i].pop_back();
        }
      }
      if (t.c) {
        out = t;
        return true;
      }
    }
  }

 private:
  static std::size_t capacity(std::size_t level) { return std::size_t{4} << (2 * level); }

  std::vector<Term> merge(std::vector<Term> a, std::vector<Term> b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      const int c = ring_.compare(a[i].m, b[j].m);
      if (c < 0) {
        out.push_back(a[i++]);
      } else if (c > 0) {
        out.push_back(b[j++]);
      } else {
        const Elem v = f_.add(a[i].c, b[j].c);
        if (v) out.push_back({a[i].m, v});
        ++i;
        ++j;
      }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
  }

  const Ring& ring_;
  const ff::Field& f_;
  std::vector<std::vector<Term>> buckets_;
};

std::vector<Term> ascending(const Polynomial& p, std::size_t skip_lead) {
  const auto& t = p.terms();
  return std::vector<Term>(t.rbegin(), t.rend() - static_cast<std::ptrdiff_t>(skip_lead));
}

// -(c) * m * tail(g), ascending.
std::vector<Term> scaled_tail(const ff::Field& f, const Polynomial& g, const Monomial& m, Elem c) {
  const auto& t = g.terms();
  std::vector<Term> out;
  out.reserve(t.size() - 1);
  const Elem nc = f.neg(c);
  for (std::size_t k = t.size(); k-- > 1;) out.push_back({t[k].m * m, f.mul(nc, t[k].c)});
  return out;
}

// Full reduction of f by reducers (pointers into a basis).
Polynomial reduce(const Polynomial& f, const std::vector<const Polynomial*>& g,
                  const std::stop_token& stop) {
  const Ring& ring = *f.ring();
  const ff::Field& fld = ring.f();
  GeoBucket bucket(ring);
  bucket.add(ascending(f, 0));
  std::vector<Term> out;
  Term t;
  std::uint64_t steps = 0;
  while (bucket.pop_lead(t)) {
    const Polynomial* red = nullptr;
    for (const Polynomial* h : g) {
      if (h->lead_monomial().divides(t.m)) {
        red = h;
        break;
      }
    }
    if (!red) {
      out.push_back(t);
      continue;
    }
    if ((++steps & 63) == 0 && stop.stop_requested()) throw Cancelled();
    const Elem c = red->lead_coeff() == 1 ? t.c : fld.div(t.c, red->lead_coeff());
    if (red->size() > 1) bucket.add(scaled_tail(fld, *red, t.m / red->lead_monomial(), c));
  }
  return Polynomial::from_sorted(f.ring(), std::move(out));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GbOptions& opts) : ring_(std::move(ring)), opts_(opts) {}

  GroebnerBasis run(const std::vector<Polynomial>& input) {
    std::vector<Polynomial> gens;
    for (const auto& p : input) {
      if (!p.is_zero()) gens.push_back(p.monic());
    }
    // Process inputs in increasing order so the chain criterion sees small
    // leading terms first.
    std::sort(gens.begin(), gens.end(), [this](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    for (auto& g : gens) {
      Polynomial h = reduce(g, active_reducers(), opts_.stop);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit();
      insert(h.monic(), h.total_degree());
    }
    while (!pairs_.empty()) {
      if (opts_.stop.stop_requested()) throw Cancelled();
      const Pair pr = pop_pair();
      ++stats_.pairs_processed;
      if (stats_.pairs_processed > opts_.max_pairs) {
        throw ResourceLimit("Groebner basis exceeded the pair cap of " +
                                std::to_string(opts_.max_pairs),
                            stats_);
      }
      Polynomial s = s_poly(pr);
      Polynomial h = reduce(s, active_reducers(), opts_.stop);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (h.is_constant()) return unit();
      insert(h.monic(), std::max(pr.sugar, h.total_degree()));
    }
    return finish();
  }

 private:
  GroebnerBasis unit() {
    stats_.basis_size = 1;
    return GroebnerBasis(ring_, {Polynomial::constant(ring_, 1)}, stats_);
  }

  std::vector<const Polynomial*> active_reducers() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  Polynomial s_poly(const Pair& pr) const {
    const Polynomial& a = polys_[pr.i];
    const Polynomial& b = polys_[pr.j];
    Polynomial sa = a.mul_term(pr.lcm / a.lead_monomial(), 1);
    return sa.sub_mul(1, pr.lcm / b.lead_monomial(), b);
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar ? a.sugar < b.sugar : ring_->compare(a.lcm, b.lcm) < 0) best = k;
    }
    Pair out = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return out;
  }

  // Gebauer-Moeller update.
  void insert(Polynomial h, unsigned sugar) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.lead_monomial();
    stats_.max_degree = std::max<std::uint64_t>(stats_.max_degree, h.total_degree());
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    if (polys_.size() > opts_.max_basis) {
      stats_.basis_size = polys_.size();
      throw ResourceLimit("Groebner basis exceeded the basis cap of " +
                              std::to_string(opts_.max_basis),
                          stats_);
    }

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].lead_monomial();
      c.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    // Chain criterion among the new pairs: drop (h,g1) when some other
    // (h,g2) has lcm dividing lcm(h,g1) (keeping one of equal lcms).
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = 0; b < c.size() && c[a].keep; ++b) {
        if (a == b || !c[b].keep) continue;
        if (c[b].lcm.divides(c[a].lcm) && !(c[b].lcm == c[a].lcm)) c[a].keep = false;
      }
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (!c[a].keep) continue;
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (!c[b].keep || !(c[a].lcm == c[b].lcm)) continue;
        // Equal lcms: keep a coprime representative if any, else the first.
        if (c[b].coprime && !c[a].coprime) {
          c[a].keep = false;
          break;
        }
        c[b].keep = false;
      }
    }
    // Old pairs made redundant by h.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const auto& pr : pairs_) {
      if (lh.divides(pr.lcm)) {
        const Monomial a = polys_[pr.i].lead_monomial().lcm(lh);
        const Monomial b = polys_[pr.j].lead_monomial().lcm(lh);
        if (!(a == pr.lcm) && !(b == pr.lcm)) {
          ++stats_.pairs_skipped;
          continue;
        }
      }
      kept.push_back(pr);
    }
    pairs_ = std::move(kept);
    for (const auto& cand : c) {
      if (!cand.keep || cand.coprime) {
        ++stats_.pairs_skipped;
        continue;
      }
      const Monomial& lg = polys_[cand.g].lead_monomial();
      const unsigned s = std::max(sugar_[cand.g] + (cand.lcm.degree() - lg.degree()),
                                  sugar + (cand.lcm.degree() - lh.degree()));
      pairs_.push_back({cand.g, hi, cand.lcm, s});
    }
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].lead_monomial())) active_[g] = false;
    }
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> min;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) min.push_back(polys_[k]);
    }
    std::sort(min.begin(), min.end(), [this](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    std::vector<Polynomial> reduced;
    for (std::size_t k = 0; k < min.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t l = 0; l < min.size(); ++l) {
        if (l != k) others.push_back(&min[l]);
      }
      Polynomial tail = Polynomial::from_sorted(
          ring_, std::vector<Term>(min[k].terms().begin() + 1, min[k].terms().end()));
      Polynomial r = reduce(tail, others, opts_.stop);
      reduced.push_back(Polynomial::monomial(ring_, min[k].lead_monomial(), 1) + r);
    }
    stats_.basis_size = reduced.size();
    return GroebnerBasis(ring_, std::move(reduced), stats_);
  }

  RingPtr ring_;
  GbOptions opts_;
  std::vector<Polynomial> polys_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  ResourceStats stats_;
};

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  return (end && *end == 0 && x > 0) ? x : fallback;
}

}  // namespace

GbOptions& default_options() {
  static GbOptions opts = [] {
    GbOptions o;
    o.max_pairs = env_cap("CHARP_MAX_PAIRS", o.max_pairs);
    o.max_basis = env_cap("CHARP_MAX_BASIS", o.max_basis);
    return o;
  }();
  return opts;
}

Ideal::Ideal(RingPtr ring) : ring_(std::move(ring)) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) add(g);
}

Ideal Ideal::of(std::vector<Polynomial> gens) {
  if (gens.empty()) throw UsageError("Ideal::of needs at least one generator");
  RingPtr r = gens.front().ring();
  return Ideal(r, std::move(gens));
}

void Ideal::add(const Polynomial& p) {
  if (!p.ring()->same_as(*ring_)) throw UsageError("ideal generator in a different ring");
  if (!p.is_zero()) gens_.push_back(p);
}

Ideal Ideal::operator+(const Ideal& o) const {
  Ideal out = *this;
  for (const auto& g : o.gens_) out.add(g);
  return out;
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis, ResourceStats stats)
    : ring_(std::move(ring)), basis_(std::move(basis)), stats_(stats) {}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  return gb::normal_form(f.ring()->same_as(*ring_) ? f : f.reordered(ring_), basis_);
}

bool GroebnerBasis::contains(const Ideal& i) const {
  for (const auto& g : i.gens()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool GroebnerBasis::is_zero_dimensional() const {
  const unsigned n = ring_->nvars();
  if (is_unit()) return true;
  for (unsigned i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& g : basis_) {
      const Monomial& m = g.lead_monomial();
      if (m[i] > 0 && m[i] == m.degree()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Monomial> GroebnerBasis::quotient_basis() const {
  if (!is_zero_dimensional()) throw UsageError("quotient_basis: ideal is not zero-dimensional");
  std::vector<Monomial> out;
  if (is_unit()) return out;
  const unsigned n = ring_->nvars();
  auto under = [this](const Monomial& m) {
    for (const auto& g : basis_) {
      if (g.lead_monomial().divides(m)) return false;
    }
    return true;
  };
  std::vector<Monomial> frontier{Monomial()};
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen{{0, 0}};
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    out.push_back(m);
    for (unsigned i = 0; i < n; ++i) {
      Monomial next = m * Monomial::variable(i);
      if (!seen.insert({next.word(0), next.word(1)}).second) continue;
      if (under(next)) frontier.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(),
            [this](const Monomial& a, const Monomial& b) { return ring_->compare(a, b) < 0; });
  return out;
}

std::string GroebnerBasis::dump() const {
  std::string s = ring_->order().name() + "\n";
  for (const auto& g : basis_) s += g.to_string() + "\n";
  return s;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                       const std::stop_token& stop) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& h : g) {
    if (!h.ring()->same_as(*f.ring())) throw UsageError("normal_form: ring mismatch");
    if (!h.is_zero()) ptrs.push_back(&h);
  }
  return reduce(f, ptrs, stop);
}

namespace {

// Recently computed bases, keyed by the ordered generator list.
class BasisCache {
 public:
  std::optional<GroebnerBasis> find(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::lock_guard lock(mu_);
    for (const auto& e : entries_) {
      if (e.gens == gens && e.basis.ring()->same_as(*ring)) {
        if (e.basis.ring() == ring) return e.basis;
        std::vector<Polynomial> b;
        for (const auto& p : e.basis.basis()) b.push_back(p.reordered(ring));
        return GroebnerBasis(ring, std::move(b), e.basis.stats());
      }
    }
    return std::nullopt;
  }

  void put(std::vector<Polynomial> gens, const GroebnerBasis& g) {
    std::lock_guard lock(mu_);
    entries_.push_back({std::move(gens), g});
    if (entries_.size() > kCapacity) entries_.pop_front();
  }

 private:
  static constexpr std::size_t kCapacity = 64;
  struct Entry {
    std::vector<Polynomial> gens;
    GroebnerBasis basis;
  };
  std::mutex mu_;
  std::deque<Entry> entries_;
};

BasisCache& basis_cache() {
  static BasisCache cache;
  return cache;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GbOptions& opts) {
  RingPtr ring = ideal.ring()->order() == order ? ideal.ring() : ideal.ring()->with_order(order);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.ring() == ring ? g : g.reordered(ring));
  if (gens.empty()) return GroebnerBasis(ring, {});
  if (auto hit = basis_cache().find(ring, gens)) return *hit;
  GroebnerBasis g = Buchberger(ring, opts).run(gens);
  basis_cache().put(std::move(gens), g);
  return g;
}

GroebnerBasis groebner(const Ideal& ideal, const GbOptions& opts) {
  return buchberger(ideal, ideal.ring()->order(), opts);
}

bool s_polynomial_closure(const GroebnerBasis& g) {
  const auto& b = g.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const Monomial l = b[i].lead_monomial().lcm(b[j].lead_monomial());
      Polynomial s = b[i].mul_term(l / b[i].lead_monomial(), g.ring()->f().inv(b[i].lead_coeff()));
      s = s.sub_mul(g.ring()->f().inv(b[j].lead_coeff()), l / b[j].lead_monomial(), b[j]);
      if (!normal_form(s, b).is_zero()) return false;
    }
  }
  return true;
}

Ideal eliminate(const Ideal& ideal, const std::vector<unsigned>& drop, const GbOptions& opts) {
  const RingPtr& ring = ideal.ring();
  const unsigned n = ring->nvars();
  std::vector<bool> dropped(n, false);
  for (unsigned d : drop) {
    if (d >= n) throw UsageError("eliminate: variable index out of range");
    dropped[d] = true;
  }
  std::vector<unsigned> perm;
  std::vector<std::string> kept_names;
  std::vector<int> to_sub(n, -1);
  for (unsigned i = 0; i < n; ++i) {
    if (dropped[i]) perm.push_back(i);
  }
  const unsigned k = static_cast<unsigned>(perm.size());
  for (unsigned i = 0; i < n; ++i) {
    if (!dropped[i]) {
      to_sub[i] = static_cast<int>(kept_names.size());
      kept_names.push_back(ring->names()[i]);
      perm.push_back(i);
    }
  }
  bool identity = true;
  for (unsigned i = 0; i < n; ++i) identity = identity && perm[i] == i;
  MonomialOrder order = k == 0 ? MonomialOrder::grevlex() : MonomialOrder::block_elimination(k);
  if (!identity) order.perm = perm;
  const GroebnerBasis g = buchberger(ideal, order, opts);
  RingPtr sub = poly::Ring::make(ring->field(), kept_names, MonomialOrder::grevlex());
  Ideal out(sub);
  for (const auto& p : g.basis()) {
    bool free = true;
    for (unsigned d = 0; d < n && free; ++d) free = !dropped[d] || p.free_of(d);
    if (free) out.add(p.in_ring(sub, to_sub));
  }
  return out;
}

Ideal intersect(const Ideal& a, const Ideal& b, const GbOptions& opts) {
  if (!a.ring()->same_as(*b.ring())) throw UsageError("intersect: ring mismatch");
  const RingPtr& ring = a.ring();
  std::vector<std::string> names{"_t"};
  for (const auto& nm : ring->names()) names.push_back(nm);
  RingPtr big = poly::Ring::make(ring->field(), names, MonomialOrder::grevlex());
  std::vector<int> shift(ring->nvars());
  for (unsigned i = 0; i < ring->nvars(); ++i) shift[i] = static_cast<int>(i + 1);
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  Ideal j(big);
  for (const auto& g : a.gens()) j.add(t * g.in_ring(big, shift));
  for (const auto& g : b.gens()) j.add(one_minus_t * g.in_ring(big, shift));
  Ideal e = eliminate(j, {0}, opts);
  // Back into the original ring (same variable names).
  Ideal out(ring);
  for (const auto& g : e.gens()) {
    out.add(Polynomial(ring, g.terms()));
  }
  return out;
}

Polynomial divide_exact(const Polynomial& h, const Polynomial& f) {
  if (f.is_zero()) throw DivisionByZero();
  const ff::Field& fld = f.field();
  const Elem inv = fld.inv(f.lead_coeff());
  std::vector<Term> q;
  Polynomial r = h;
  while (!r.is_zero()) {
    if (!f.lead_monomial().divides(r.lead_monomial())) {
      throw UsageError("divide_exact: not divisible");
    }
    const Monomial m = r.lead_monomial() / f.lead_monomial();
    const Elem c = fld.mul(r.lead_coeff(), inv);
    q.push_back({m, c});
    r = r.sub_mul(c, m, f);
  }
  return Polynomial::from_sorted(h.ring(), std::move(q));
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f, const GbOptions& opts) {
  if (f.is_zero()) throw UsageError("ideal_quotient by the zero polynomial");
  if (f.is_constant()) return ideal;
  const Ideal inter = intersect(ideal, Ideal(ideal.ring(), {f}), opts);
  Ideal out(ideal.ring());
  for (const auto& g : inter.gens()) out.add(divide_exact(g, f));
  return out;
}

Saturation saturate(const Ideal& ideal, const Polynomial& f, const GbOptions& opts) {
  if (f.is_zero()) throw UsageError("saturate by the zero polynomial");
  Ideal current = ideal;
  GroebnerBasis gb = groebner(current, opts);
  for (unsigned k = 0;; ++k) {
    if (gb.is_unit() || f.is_constant()) return {gb.ideal(), k};
    Ideal next = ideal_quotient(gb.ideal(), f, opts);
    GroebnerBasis ng = groebner(next, opts);
    if (ng.dump() == gb.dump()) return {gb.ideal(), k};
    gb = std::move(ng);
  }
}

std::uint64_t fingerprint(const GroebnerBasis& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : g.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace charp::gb
