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

#include <algorithm>
#include <cctype>
#include <string>

#include "charp/error.hpp"
#include "charp/ff/field.hpp"

namespace charp::ff {
namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::uint64_t parse_uint(const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    throw ParseError("expected a number in '" + s + "'");
  }
  std::uint64_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    const std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
    if (v > (UINT64_MAX - d) / 10) throw ParseError("number too large in '" + s + "'");
    v = v * 10 + d;
    ++pos;
  }
  return v;
}

}  // namespace

std::vector<std::uint64_t> parse_univariate_mod_p(const std::string& text,
                                                  std::uint64_t p) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<std::uint64_t> c;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in '" + s + "'");
    }
    std::uint64_t coef = 1;
    bool has_coef = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = parse_uint(s, pos) % p;
      has_coef = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    std::size_t exponent = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exponent = parse_uint(s, pos);
      }
    } else if (!has_coef) {
      throw ParseError("malformed term in '" + s + "'");
    }
    if (exponent > 64) throw ParseError("exponent too large in '" + s + "'");
    if (c.size() <= exponent) c.resize(exponent + 1, 0);
    const std::uint64_t term = negative ? (p - coef) % p : coef;
    c[exponent] = (c[exponent] + term) % p;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

FieldPtr parse_field(const std::string& text) {
  const std::string s = strip(text);
  if (s.size() < 5 || s.compare(0, 3, "GF(") != 0 || s.back() != ')') {
    throw ParseError("field literal must look like GF(p), GF(p^k) or "
                     "GF(p^k; modulus): '" + text + "'");
  }
  const std::string body = s.substr(3, s.size() - 4);
  const auto semi = body.find(';');
  const std::string head = body.substr(0, semi);
  std::size_t pos = 0;
  std::uint64_t base = parse_uint(head, pos);
  unsigned k = 1;
  if (pos < head.size()) {
    if (head[pos] != '^') throw ParseError("malformed field literal '" + text + "'");
    ++pos;
    k = static_cast<unsigned>(parse_uint(head, pos));
    if (pos != head.size() || k == 0) {
      throw ParseError("malformed field literal '" + text + "'");
    }
  } else if (!is_prime(base)) {
    // GF(q) with q a prime power.
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= base; ++d) {
      if (base % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) throw ParseError("field order must be a prime power: '" + text + "'");
    std::uint64_t q = base;
    k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    if (q != 1) throw ParseError("field order must be a prime power: '" + text + "'");
    base = p;
  }
  if (!is_prime(base)) throw ParseError("characteristic must be prime: '" + text + "'");
  try {
    if (semi == std::string::npos) return Field::extension(base, k);
    auto modulus = parse_univariate_mod_p(body.substr(semi + 1), base);
    if (k == 1 && modulus.size() <= 2) return Field::prime(base);
    return Field::make(FieldDescriptor{base, k, modulus});
  } catch (const UsageError& e) {
    throw ParseError(std::string("invalid field '") + text + "': " + e.what());
  }
}

Elem parse_element(const Field& field, const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty element literal");
  std::size_t pos = 0;
  if (s[0] != '[') {
    bool negative = false;
    if (s[0] == '-') {
      negative = true;
      ++pos;
    }
    const std::uint64_t v = parse_uint(s, pos) % field.characteristic();
    if (pos != s.size()) throw ParseError("malformed element '" + text + "'");
    const Elem e = field.from_int(static_cast<std::int64_t>(v));
    return negative ? field.neg(e) : e;
  }
  if (s.back() != ']') throw ParseError("malformed element '" + text + "'");
  std::vector<std::uint64_t> c;
  pos = 1;
  while (pos < s.size() - 1) {
    c.push_back(parse_uint(s, pos) % field.characteristic());
    if (pos < s.size() - 1) {
      if (s[pos] != ',') throw ParseError("malformed element '" + text + "'");
      ++pos;
    }
  }
  if (c.size() > field.degree()) {
    throw ParseError("element '" + text + "' has too many residues for " +
                     field.name());
  }
  return field.from_coeffs(c);
}

}  // namespace charp::ff
