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

#include "algen/errors.hpp"
#include "algen/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace algen {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

template <class Int, class PowMod>
bool miller_rabin_round(const Int& n, const Int& d, unsigned r, const Int& a, PowMod powm) {
  Int x = powm(a, d, n);
  if (x == Int(1) || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = powm(x, Int(2), n);
    if (x == n - 1) return true;
  }
  return false;
}

inline constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

}  // namespace detail

/// Deterministic for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : detail::kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  auto powm = [](std::uint64_t b, std::uint64_t e, std::uint64_t m) { return detail::powmod_u64(b, e, m); };
  for (std::uint64_t a : detail::kWitnesses) {
    if (!detail::miller_rabin_round<std::uint64_t>(n, d, r, a, powm)) return false;
  }
  return true;
}

enum class Primality { Composite, Prime, ProbablePrime };

/// Miller-Rabin on the first 13 prime bases. That set is a proof of primality
/// below 3.317e24; above it a pass is only "probable".
inline Primality primality(const BigInt& n) {
  if (n < 2) return Primality::Composite;
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return is_prime_u64(static_cast<std::uint64_t>(n)) ? Primality::Prime : Primality::Composite;
  for (std::uint64_t p : detail::kWitnesses)
    if (n % p == 0) return Primality::Composite;
  BigInt d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  auto powm = [](const BigInt& b, const BigInt& e, const BigInt& m) {
    return BigInt(boost::multiprecision::powm(b, e, m));
  };
  for (std::uint64_t a : detail::kWitnesses) {
    if (!detail::miller_rabin_round<BigInt>(n, d, r, BigInt(a), powm)) return Primality::Composite;
  }
  static const BigInt kProofBound("3317044064679887385961981");
  return n < kProofBound ? Primality::Prime : Primality::ProbablePrime;
}

/// Primes <= limit by the sieve of Eratosthenes (limit <= 1e8).
inline std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  require(limit <= 100'000'000, Errc::BadParams, "prime sieve limited to 1e8");
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

/// (p, t) with q = p^t, or nullopt if q is not a prime power.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    unsigned t = 0;
    while (q % p == 0) {
      q /= p;
      ++t;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, t);
  }
  return std::make_pair(q, 1u);
}

namespace detail {

inline std::uint64_t pollard_rho_u64(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

inline void factor_u64_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho_u64(n);
  factor_u64_into(d, out);
  factor_u64_into(n / d, out);
}

}  // namespace detail

/// Distinct prime factors of n >= 1, ascending.
inline std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      f.push_back(p);
      n /= p;
    }
  }
  detail::factor_u64_into(n, f);
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

/// Distinct prime factors of |n| (n != 0): trial division to 1e6, then
/// Pollard rho on 64-bit cofactors and a primality proof on larger ones.
/// A cofactor that can be neither split nor proven prime raises
/// FactorizationIncomplete.
inline std::vector<BigInt> prime_factors(BigInt n) {
  require(n != 0, Errc::BadParams, "cannot factor zero");
  if (n < 0) n = -n;
  std::vector<BigInt> out;
  for (std::uint64_t p = 2; p <= 1'000'000; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > n) break;
    if (n % p == 0) {
      out.emplace_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n != 1) {
    if (n < BigInt(1'000'000) * 1'000'000) {
      out.push_back(n);  // no factor <= 1e6 and n < 1e12
    } else if (n <= std::numeric_limits<std::uint64_t>::max()) {
      for (auto p : prime_factors_u64(static_cast<std::uint64_t>(n))) out.emplace_back(p);
    } else if (primality(n) == Primality::Prime) {
      out.push_back(n);
    } else {
      fail(Errc::FactorizationIncomplete, "unresolved cofactor " + n.str());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace algen
