/**************************************************************************
 * Copyright 2026 The algen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

// Dense univariate polynomials over a prime field F_p, p < 2^63.
// Coefficients are least residues, lowest degree first, no trailing zeros.

#include "algen/errors.hpp"
#include "algen/primes.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace algen::fp_poly {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  require(a % p != 0, Errc::DivisionByZero, "inverse of zero mod p");
  return detail::powmod_u64(a, p - 2, p);
}

inline Poly sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + detail::mulmod_u64(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

/// Remainder of a modulo a nonzero f.
inline Poly mod(Poly a, const Poly& f, std::uint64_t p) {
  require(!f.empty(), Errc::DivisionByZero, "polynomial modulo zero");
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t c = detail::mulmod_u64(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = (a[shift + i] + p - detail::mulmod_u64(c, f[i], p)) % p;
    trim(a);
  }
  return a;
}

inline Poly make_monic(Poly f, std::uint64_t p) {
  if (f.empty()) return f;
  const std::uint64_t li = inv_mod(f.back(), p);
  for (auto& c : f) c = detail::mulmod_u64(c, li, p);
  return f;
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = mod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

/// base^e mod f.
inline Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r = mod(Poly{1}, f, p);
  base = mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = mod(mul(r, base, p), f, p);
    e >>= 1;
    if (e) base = mod(mul(base, base, p), f, p);
  }
  return r;
}

/// Number of distinct roots of a nonzero f in F_p: deg gcd(f, x^p - x).
inline unsigned distinct_root_count(const Poly& f, std::uint64_t p) {
  require(!f.empty(), Errc::BadParams, "root count of the zero polynomial");
  if (f.size() == 1) return 0;
  Poly xp = powmod(Poly{0, 1}, p, f, p);
  Poly h = sub(std::move(xp), Poly{0, 1}, p);
  const Poly g = gcd(f, std::move(h), p);
  return static_cast<unsigned>(degree(g));
}

/// Ben-Or test: f of degree d >= 1 is irreducible iff gcd(f, x^{p^i} - x) = 1
/// for every 1 <= i <= d/2.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
  require(degree(f) >= 1, Errc::BadParams, "irreducibility needs degree >= 1");
  const int d = degree(f);
  const Poly x{0, 1};
  Poly h = mod(x, f, p);
  for (int i = 1; 2 * i <= d; ++i) {
    h = powmod(h, p, f, p);
    const Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) return false;
  }
  return true;
}

}  // namespace algen::fp_poly
