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

#include "charp/ff/field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "charp/error.hpp"
#include "charp/ff/upoly.hpp"

namespace charp::ff {
namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct Registry {
  std::recursive_mutex mu;
  std::map<std::vector<std::uint64_t>, FieldPtr> fields;
  std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> canonical;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::vector<std::uint64_t> registry_key(const FieldDescriptor& d) {
  std::vector<std::uint64_t> key{d.p, d.k};
  key.insert(key.end(), d.modulus.begin(), d.modulus.end());
  return key;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool Field::representable(std::uint64_t p, unsigned k) {
  if (p < 2 || k == 0) return false;
  if (k == 1) return p < (std::uint64_t{1} << 31);
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) return false;
  }
  return true;
}

Field::Field(const FieldDescriptor& d) : desc_(d) {
  q_ = 1;
  for (unsigned i = 0; i < d.k; ++i) q_ *= d.p;
  if (d.k == 1) {
    kind_ = Kind::kPrime;
    return;
  }
  if (d.p == 2) {
    for (unsigned i = 0; i < d.k; ++i) {
      if (d.modulus[i]) binary_modulus_ |= std::uint64_t{1} << i;
    }
  }
  kind_ = Kind::kGeneric;
  if (q_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
  // Find a primitive element with generic arithmetic, then switch over.
  const std::uint64_t n = q_ - 1;
  const auto factors = prime_factors(n);
  Elem g = 0;
  for (Elem cand = 2; cand < q_; ++cand) {
    bool primitive = true;
    for (std::uint64_t f : factors) {
      if (pow(cand, n / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw InternalError("no primitive element found in " + name());
  log_.assign(q_, 0);
  exp_.assign(2 * n, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = x;
    exp_[i + n] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_generic(x, g);
  }
  zech_.assign(n, -1);
  for (std::uint64_t i = 0; i < n; ++i) {
    Elem s = add_digits(exp_[i], 1);
    zech_[i] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
  }
  half_order_ = static_cast<std::uint32_t>(n);
  kind_ = Kind::kTable;
}

FieldPtr Field::make(const FieldDescriptor& d) {
  if (!ff::is_prime(d.p)) {
    throw UsageError("field characteristic " + std::to_string(d.p) +
                     " is not prime");
  }
  if (!representable(d.p, d.k)) {
    throw UsageError("field GF(" + std::to_string(d.p) + "^" +
                     std::to_string(d.k) + ") is too large");
  }
  FieldDescriptor desc = d;
  if (desc.k == 1) desc.modulus.clear();
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = registry_key(desc);
  if (auto it = reg.fields.find(key); it != reg.fields.end()) return it->second;
  if (desc.k > 1) {
    if (desc.modulus.size() != desc.k + 1 || desc.modulus.back() != 1) {
      throw UsageError("field modulus must be monic of degree " +
                       std::to_string(desc.k));
    }
    auto fp = Field::prime(desc.p);
    std::vector<Elem> c;
    for (auto v : desc.modulus) {
      if (v >= desc.p) throw UsageError("modulus coefficient out of range");
      c.push_back(v);
    }
    if (!is_irreducible(UPoly(fp, c))) {
      throw UsageError("field modulus is not irreducible over F_" +
                       std::to_string(desc.p));
    }
  }
  auto field = std::make_shared<const Field>(desc);
  reg.fields.emplace(std::move(key), field);
  return field;
}

FieldPtr Field::prime(std::uint64_t p) { return make(FieldDescriptor{p, 1, {}}); }

FieldPtr Field::extension(std::uint64_t p, unsigned k) {
  if (k == 1) return prime(p);
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = std::make_pair(p, k);
  if (auto it = reg.canonical.find(key); it != reg.canonical.end()) {
    return it->second;
  }
  if (!ff::is_prime(p)) throw UsageError("characteristic must be prime");
  if (!representable(p, k)) {
    throw UsageError("field GF(" + std::to_string(p) + "^" +
                     std::to_string(k) + ") is too large");
  }
  const std::uint64_t seed = mix_seed(0x63686172705f6666ULL, p * 1000003ULL + k);
  auto field = make(FieldDescriptor{p, k, random_irreducible(p, k, seed)});
  reg.canonical.emplace(key, field);
  return field;
}

Elem Field::add_table(Elem a, Elem b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t la = log_[a], lb = log_[b];
  const std::uint64_t n = q_ - 1;
  const std::uint64_t d = lb >= la ? lb - la : lb + n - la;
  const std::int64_t z = zech_[d];
  if (z < 0) return 0;
  return exp_[la + static_cast<std::uint64_t>(z)];
}

Elem Field::add_digits(Elem a, Elem b) const {
  if (desc_.p == 2) return a ^ b;
  const std::uint64_t p = desc_.p;
  Elem r = 0, place = 1;
  while (a || b) {
    std::uint64_t s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return r;
}

Elem Field::neg_digits(Elem a) const {
  const std::uint64_t p = desc_.p;
  Elem r = 0, place = 1;
  while (a) {
    std::uint64_t d = a % p;
    if (d) r += (p - d) * place;
    a /= p;
    place *= p;
  }
  return r;
}

Elem Field::mul_binary(Elem a, Elem b) const {
  const unsigned k = desc_.k;
  const std::uint64_t top = std::uint64_t{1} << k;
  Elem r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= top | binary_modulus_;
  }
  return r;
}

Elem Field::mul_generic(Elem a, Elem b) const {
  if (desc_.p == 2) return mul_binary(a, b);
  const std::uint64_t p = desc_.p;
  const unsigned k = desc_.k;
  std::uint64_t da[64] = {}, db[64] = {};
  unsigned na = 0, nb = 0;
  while (a) {
    da[na++] = a % p;
    a /= p;
  }
  while (b) {
    db[nb++] = b % p;
    b /= p;
  }
  std::uint64_t prod[128] = {};
  const auto& m = desc_.modulus;
  if (p < (std::uint64_t{1} << 26)) {
    // Sums of at most 2k products below p^2 fit in 64 bits; reduce late.
    for (unsigned i = 0; i < na; ++i) {
      if (!da[i]) continue;
      for (unsigned j = 0; j < nb; ++j) prod[i + j] += da[i] * db[j];
    }
    for (int i = static_cast<int>(na + nb) - 2; i >= static_cast<int>(k); --i) {
      const std::uint64_t c = prod[i] % p;
      if (!c) continue;
      for (unsigned j = 0; j < k; ++j) prod[i - k + j] += (p - c) * m[j];
    }
    Elem r = 0;
    for (int i = static_cast<int>(k) - 1; i >= 0; --i) r = r * p + prod[i] % p;
    return r;
  }
  for (unsigned i = 0; i < na; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < nb; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
  }
  for (int i = static_cast<int>(na + nb) - 2; i >= static_cast<int>(k); --i) {
    const std::uint64_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k; ++j) {
      if (!m[j]) continue;
      // prod[i - k + j] -= c * m[j]
      prod[i - k + j] = (prod[i - k + j] + (p - c) * m[j]) % p;
    }
  }
  Elem r = 0;
  for (int i = static_cast<int>(k) - 1; i >= 0; --i) r = r * p + prod[i];
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero();
  if (kind_ == Kind::kPrime) {
    // Extended Euclid on (a, p).
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(desc_.p);
    std::int64_t nr = static_cast<std::int64_t>(a);
    while (nr) {
      std::int64_t qt = r / nr;
      std::int64_t tmp = t - qt * nt;
      t = nt;
      nt = tmp;
      tmp = r - qt * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(desc_.p);
    return static_cast<Elem>(t);
  }
  if (kind_ == Kind::kTable) {
    const std::uint32_t la = log_[a];
    return exp_[la == 0 ? 0 : (q_ - 1) - la];
  }
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (kind_ == Kind::kTable) {
    const std::uint64_t n = q_ - 1;
    const auto l = static_cast<unsigned __int128>(log_[a]) * (e % n) % n;
    return exp_[static_cast<std::uint64_t>(l)];
  }
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

Elem Field::pth_root(Elem a) const {
  if (desc_.k == 1) return a;
  std::uint64_t e = 1;
  for (unsigned i = 1; i < desc_.k; ++i) e *= desc_.p;
  return pow(a, e);
}

Elem Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(desc_.p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > desc_.k) {
    throw UsageError("element has more than " + std::to_string(desc_.k) +
                     " coefficients");
  }
  Elem r = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= desc_.p) throw UsageError("element residue out of range");
    r = r * desc_.p + coeffs[i];
  }
  return r;
}

std::vector<std::uint64_t> Field::to_coeffs(Elem a) const {
  std::vector<std::uint64_t> c(desc_.k, 0);
  for (unsigned i = 0; i < desc_.k && a; ++i) {
    c[i] = a % desc_.p;
    a /= desc_.p;
  }
  return c;
}

std::string Field::format(Elem a) const {
  if (desc_.k == 1) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  auto c = to_coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

std::string Field::modulus_string() const {
  if (desc_.k == 1) return "";
  std::vector<Elem> c(desc_.modulus.begin(), desc_.modulus.end());
  return UPoly(Field::prime(desc_.p), c).to_string("t");
}

std::string Field::name() const {
  if (desc_.k == 1) return "GF(" + std::to_string(desc_.p) + ")";
  return "GF(" + std::to_string(desc_.p) + "^" + std::to_string(desc_.k) +
         "; " + modulus_string() + ")";
}

FieldElement::FieldElement(FieldPtr field, Elem value)
    : field_(std::move(field)), value_(value) {
  if (!field_->valid(value_)) throw UsageError("element out of range");
}

FieldElement FieldElement::from_coeffs(FieldPtr field,
                                       std::span<const std::uint64_t> coeffs) {
  Elem v = field->from_coeffs(coeffs);
  return {std::move(field), v};
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_) throw UsageError("field mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && value_ == o.value_;
}

}  // namespace charp::ff
