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

// Integer polynomials and the families f_k, h_k, phi_k, psi_k; generator
// thresholds for M_2(Z)^m and M_3(Z)^m; irreducibility modulo p.

#include "algen/errors.hpp"
#include "algen/fp_poly.hpp"
#include "algen/integer.hpp"
#include "algen/primes.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace algen {

/// Polynomial over Z, coefficients low degree first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long long> coeffs) {
    for (auto v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly monomial(BigInt coeff, unsigned deg) {
    std::vector<BigInt> c(deg + 1);
    c[deg] = std::move(coeff);
    return IntPoly(std::move(c));
  }

  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const BigInt& lead() const { return c_.back(); }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  BigInt eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// x^d - 1 style helper: x^deg + c.
inline IntPoly x_pow_plus(unsigned deg, long long c) { return IntPoly::monomial(1, deg) + IntPoly{c}; }

/// Quotient and remainder over Z. Every leading-coefficient quotient must be
/// exact, so this is division by a divisor whose leading coefficient divides
/// what it meets (always true for monic divisors).
inline std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  std::vector<BigInt> q(r.size() > static_cast<std::size_t>(db) ? r.size() - db : 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    require(r[i] % b.lead() == 0, Errc::DivisionInexact, "leading coefficient does not divide");
    const BigInt f = r[i] / b.lead();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

/// a / b, failing with `code` unless the remainder is zero.
inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b, Errc code = Errc::DivisionInexact) {
  auto [q, r] = divmod(a, b);
  require(r.is_zero(), code, "nonzero remainder in polynomial division");
  return q;
}

/// phi_k(x) = x^{2k-2} - x^k - 2x^{k-1} - x^{k-2} + x + 1, terms collected.
inline IntPoly phi_poly(unsigned k) {
  require(k >= 2, Errc::BadParams, "phi_k needs k >= 2");
  return IntPoly::monomial(1, 2 * k - 2) - IntPoly::monomial(1, k) - IntPoly::monomial(2, k - 1) -
         IntPoly::monomial(1, k - 2) + IntPoly{1, 1};
}

/// f_1 = 0; f_k = x^{3k+1}(x^{k-1}-1)(x^{k-1}+1)(x^k-1)(x^{3k-2}+phi_k) /
/// ((x^2+x+1)(x-1)^2(x+1)).
inline IntPoly f_poly(unsigned k) {
  require(k >= 1, Errc::BadParams, "f_k needs k >= 1");
  if (k == 1) return {};
  const IntPoly num = IntPoly::monomial(1, 3 * k + 1) * x_pow_plus(k - 1, -1) * x_pow_plus(k - 1, 1) *
                      x_pow_plus(k, -1) * (IntPoly::monomial(1, 3 * k - 2) + phi_poly(k));
  const IntPoly den = IntPoly{1, 1, 1} * IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 1};
  return exact_quotient(num, den);
}

/// h_1 = 0; h_k = x^{2k}(x^{k-1}-1)(x^k-1) / ((x-1)(x+1)).
inline IntPoly h_poly(unsigned k) {
  require(k >= 1, Errc::BadParams, "h_k needs k >= 1");
  if (k == 1) return {};
  const IntPoly num = IntPoly::monomial(1, 2 * k) * x_pow_plus(k - 1, -1) * x_pow_plus(k, -1);
  return exact_quotient(num, IntPoly{-1, 0, 1});
}

/// psi_k = (x^{3k-2} + phi_k) divided by x-1, x^2-1, x^3-1 or (x+1)(x^3-1)
/// according to k mod 6. A nonzero remainder raises NotDivisible.
inline IntPoly psi_poly(unsigned k) {
  require(k >= 2, Errc::BadParams, "psi_k needs k >= 2");
  const IntPoly num = IntPoly::monomial(1, 3 * k - 2) + phi_poly(k);
  IntPoly den;
  switch (k % 6) {
    case 0:
    case 4:
      den = IntPoly{-1, 1};
      break;
    case 1:
    case 3:
      den = IntPoly{-1, 0, 1};
      break;
    case 2:
      den = IntPoly{-1, 0, 0, 1};
      break;
    default:
      den = IntPoly{1, 1} * IntPoly{-1, 0, 0, 1};
      break;
  }
  return exact_quotient(num, den, Errc::NotDivisible);
}

struct MinGenReport {
  unsigned n = 0;
  BigInt m;
  unsigned r = 0;
  BigInt lower;  // largest m generated by r - 1 elements (0 when r = 2)
  BigInt upper;  // largest m generated by r elements
};

/// Largest m for which M_n(Z)^m is k-generated: f_k(2) for n = 3, h_k(2) for
/// n = 2 with the k = 2 value fixed at t = 16 (the smallest residue field of
/// Z has two elements).
inline BigInt copy_threshold(unsigned n, unsigned k) {
  require(n == 2 || n == 3, Errc::BadParams, "thresholds are known for n = 2, 3");
  require(k >= 1, Errc::BadParams, "k must be positive");
  if (k == 1) return 0;
  if (n == 2 && k == 2) return 16;
  return n == 3 ? f_poly(k).eval(2) : h_poly(k).eval(2);
}

/// Minimal number of generators of M_n(Z)^m as a Z-algebra.
inline MinGenReport min_generators(unsigned n, const BigInt& m) {
  require(n == 2 || n == 3, Errc::BadParams, "thresholds are known for n = 2, 3");
  require(m >= 1, Errc::BadParams, "m must be positive");
  MinGenReport rep{n, m, 2, 0, copy_threshold(n, 2)};
  while (m > rep.upper) {
    ++rep.r;
    rep.lower = rep.upper;
    rep.upper = copy_threshold(n, rep.r);
  }
  return rep;
}

enum class ModPVerdict { Irreducible, Reducible, Degenerate };

inline std::string to_string(ModPVerdict v) {
  switch (v) {
    case ModPVerdict::Irreducible: return "irreducible";
    case ModPVerdict::Reducible: return "reducible";
    case ModPVerdict::Degenerate: return "degenerate";
  }
  return "?";
}

/// Reduces mod p and runs Ben-Or. Irreducible mod p (without degree drop)
/// implies irreducible over Q; the converse does not hold.
inline ModPVerdict is_irreducible_mod_p(const IntPoly& f, std::uint64_t p) {
  require(is_prime_u64(p), Errc::BadParams, "p must be prime");
  require(f.degree() >= 1, Errc::BadParams, "polynomial must have degree >= 1");
  fp_poly::Poly g;
  for (const auto& c : f.coeffs()) {
    BigInt r = c % p;
    if (r < 0) r += p;
    g.push_back(static_cast<std::uint64_t>(r));
  }
  if (g.back() == 0) return ModPVerdict::Degenerate;
  return fp_poly::is_irreducible(g, p) ? ModPVerdict::Irreducible : ModPVerdict::Reducible;
}

}  // namespace algen
