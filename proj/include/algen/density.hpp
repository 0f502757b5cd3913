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

// Zeta values with certified error, truncated Euler products with explicit
// tail bounds, and the densities of generating tuples for M_2(Z), M_3(Z) and
// Z^n.

#include "algen/errors.hpp"
#include "algen/parallel.hpp"
#include "algen/polys.hpp"
#include "algen/primes.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace algen {

using Real = long double;

struct DensityValue {
  enum class Method { ExactZeta, EulerTruncation };
  Real value = 0;
  Real abs_error_bound = 0;
  std::uint64_t P = 0;  // prime bound of the truncation, 0 when none was used
  Method method = Method::ExactZeta;
};

inline std::string to_string(DensityValue::Method m) {
  return m == DensityValue::Method::ExactZeta ? "exact-zeta" : "euler-truncation";
}

namespace detail {

inline constexpr Real kUlp = std::numeric_limits<Real>::epsilon();
inline constexpr Real kZetaEps = 4e-17L;  // accuracy requested for internal zeta factors

// B_{2j} / (2j)! for j = 1..10.
inline constexpr Real kBernoulliOverFactorial[] = {
    1.0L / 12,
    -1.0L / 720,
    1.0L / 30240,
    -1.0L / 1209600,
    1.0L / 47900160,
    -691.0L / 1307674368000,
    1.0L / 74724249600,
    -3617.0L / 10670622842880000.0L,
    43867.0L / 5109094217170944000.0L,
    -174611.0L / 802857662698291200000.0L,
};

/// Bound on |x y - x' y'| for |x - x'| <= ex, |y - y'| <= ey.
inline Real product_error(Real x, Real ex, Real y, Real ey) {
  return std::fabs(x) * ey + std::fabs(y) * ex + ex * ey;
}

/// Value and error of 1/z given z with error ez (requires ez < z).
inline DensityValue reciprocal(const DensityValue& z) {
  require(z.abs_error_bound < z.value, Errc::BadParams, "reciprocal of an uncertain value");
  DensityValue r = z;
  r.value = 1 / z.value;
  r.abs_error_bound = z.abs_error_bound / (z.value * (z.value - z.abs_error_bound)) + 2 * kUlp * r.value;
  return r;
}

inline DensityValue multiply(const DensityValue& a, const DensityValue& b) {
  DensityValue r;
  r.value = a.value * b.value;
  r.abs_error_bound =
      product_error(a.value, a.abs_error_bound, b.value, b.abs_error_bound) + kUlp * std::fabs(r.value);
  r.P = std::max(a.P, b.P);
  r.method = (a.method == DensityValue::Method::EulerTruncation || b.method == DensityValue::Method::EulerTruncation)
                 ? DensityValue::Method::EulerTruncation
                 : DensityValue::Method::ExactZeta;
  return r;
}

}  // namespace detail

/// zeta(s) for integer s >= 2 by Euler-Maclaurin summation: the sum up to
/// M-1, the integral and boundary terms, and ten Bernoulli corrections. For
/// x^{-s} the remainder is bounded by the first omitted correction, which is
/// doubled here; rounding adds a few ulp per summed term.
inline DensityValue zeta_value(unsigned s, Real eps = 1e-15L) {
  require(s >= 2, Errc::BadParams, "zeta needs s >= 2");
  require(eps > 0 && std::isfinite(eps), Errc::BadParams, "eps must be positive");
  constexpr unsigned J = 9;  // corrections used; index J is the omitted one
  for (std::uint64_t M = 16; M <= (std::uint64_t{1} << 20); M *= 2) {
    const Real m = static_cast<Real>(M);
    Real rising = s;  // s(s+1)...(s+2j-2)
    Real corr = 0;
    for (unsigned j = 0; j < J; ++j) {
      if (j > 0) rising *= static_cast<Real>(s + 2 * j - 1) * static_cast<Real>(s + 2 * j);
      corr += detail::kBernoulliOverFactorial[j] * rising * std::pow(m, -static_cast<Real>(s + 2 * j + 1));
    }
    rising *= static_cast<Real>(s + 2 * J - 1) * static_cast<Real>(s + 2 * J);
    const Real omitted =
        std::fabs(detail::kBernoulliOverFactorial[J]) * rising * std::pow(m, -static_cast<Real>(s + 2 * J + 1));
    Real sum = 0;
    for (std::uint64_t n = M - 1; n >= 1; --n) sum += std::pow(static_cast<Real>(n), -static_cast<Real>(s));
    const Real value = sum + std::pow(m, 1 - static_cast<Real>(s)) / (s - 1) + std::pow(m, -static_cast<Real>(s)) / 2 + corr;
    const Real err = 2 * omitted + 2 * static_cast<Real>(M + J + 4) * detail::kUlp * value;
    if (err <= eps) return {value, err, 0, DensityValue::Method::ExactZeta};
    if (omitted < 8 * detail::kUlp) break;  // rounding dominates; more terms do not help
  }
  fail(Errc::BadParams, "requested zeta accuracy is below working precision");
}

/// Truncated Euler product prod_{p <= P} factor(p). The tail must satisfy
/// |1 - factor(p)| <= C p^{-e} for p > P with e > 1; then
/// |log tail| <= C/(1 - C P^{-e}) * P^{1-e}/(e-1).
struct EulerProductSpec {
  std::function<Real(std::uint64_t)> local_factor;
  std::uint64_t P = 2;
  Real tail_exponent = 2;
  Real tail_constant = 1;
};

inline DensityValue euler_product(const EulerProductSpec& spec, unsigned threads = 1) {
  require(static_cast<bool>(spec.local_factor), Errc::BadParams, "local factor missing");
  require(spec.P >= 2, Errc::BadParams, "prime bound must be at least 2");
  require(spec.tail_exponent > 1, Errc::DivergentTail, "tail exponent must exceed 1");
  require(spec.tail_constant >= 0, Errc::BadParams, "tail constant must be nonnegative");
  const Real P = static_cast<Real>(spec.P);
  const Real x_max = spec.tail_constant * std::pow(P, -spec.tail_exponent);
  require(x_max < 0.5L, Errc::BadParams, "prime bound too small for the stated tail constant");

  const auto primes = primes_up_to(spec.P);
  const std::uint64_t shards = 64;
  const std::size_t chunk = (primes.size() + shards - 1) / shards;
  struct Partial {
    Real prod = 1;
    std::uint64_t inexact = 0;  // factors other than exactly 1
  };
  const Partial acc = sharded_reduce<Partial>(
      shards, threads, Partial{},
      [&](std::uint64_t sh) {
        Partial r;
        for (std::size_t i = sh * chunk; i < std::min(primes.size(), (sh + 1) * chunk); ++i) {
          const Real f = spec.local_factor(primes[i]);
          if (f != 1) ++r.inexact;
          r.prod *= f;
        }
        return r;
      },
      [](Partial a, Partial b) { return Partial{a.prod * b.prod, a.inexact + b.inexact}; });
  const Real prod = acc.prod;

  const Real tail = spec.tail_constant / (1 - x_max) * std::pow(P, 1 - spec.tail_exponent) / (spec.tail_exponent - 1);
  // each factor is trusted to a few ulp; products and shard merges add one each
  const Real rounding =
      acc.inexact == 0 ? 0 : (6 * static_cast<Real>(acc.inexact) + 2 * shards + 4) * detail::kUlp * std::fabs(prod);
  DensityValue v{prod, std::fabs(prod) * std::expm1(tail) + rounding, spec.P, DensityValue::Method::EulerTruncation};
  require(std::isfinite(v.abs_error_bound), Errc::DivergentTail, "tail bound is not finite");
  return v;
}

/// Density of k-tuples generating Z^n: prod_{m=k-n+1}^{k} zeta(m)^{-1},
/// with the zeta(1) factor at k = n read as 0.
inline DensityValue den_Zn(unsigned k, unsigned n) {
  require(n >= 1 && k >= n, Errc::BadParams, "need k >= n >= 1");
  if (k == n) return {0, 0, 0, DensityValue::Method::ExactZeta};
  DensityValue v{1, 0, 0, DensityValue::Method::ExactZeta};
  for (unsigned m = k - n + 1; m <= k; ++m) v = detail::multiply(v, detail::reciprocal(zeta_value(m, detail::kZetaEps)));
  return v;
}

/// Density of generating k-tuples of M_n(Z), n in {2, 3}.
/// n = 2: 1/(zeta(k-1) zeta(k)), and 0 at k = 2.
/// n = 3: 1/(zeta(2k-2) zeta(k)) * prod_p (1 + phi_k(p)/p^{3k-2}), truncated
/// at P with the tail exponent 3k-2-deg(phi_k) and constant sum |coeff|.
inline DensityValue den_matrix(unsigned n, unsigned k, std::uint64_t P = 100000, unsigned threads = 1) {
  require(n == 2 || n == 3, Errc::BadParams, "matrix densities are implemented for n = 2, 3");
  require(k >= 2, Errc::BadParams, "k must be at least 2");
  if (n == 2) {
    if (k == 2) return {0, 0, 0, DensityValue::Method::ExactZeta};
    return detail::multiply(detail::reciprocal(zeta_value(k - 1, detail::kZetaEps)), detail::reciprocal(zeta_value(k, detail::kZetaEps)));
  }
  const IntPoly phi = phi_poly(k);
  std::vector<std::pair<int, Real>> terms;  // (exponent of p, coefficient)
  Real c_sum = 0;
  const int top = static_cast<int>(3 * k - 2);
  for (std::size_t i = 0; i < phi.coeffs().size(); ++i) {
    if (phi.coeffs()[i] == 0) continue;
    const Real c = phi.coeffs()[i].convert_to<Real>();
    terms.emplace_back(static_cast<int>(i) - top, c);
    c_sum += std::fabs(c);
  }
  EulerProductSpec spec;
  spec.P = P;
  spec.tail_exponent = static_cast<Real>(top - phi.degree());
  spec.tail_constant = c_sum;
  spec.local_factor = [terms](std::uint64_t p) {
    Real x = 0;
    for (const auto& [e, c] : terms) x += c * std::pow(static_cast<Real>(p), static_cast<Real>(e));
    return 1 + x;
  };
  const DensityValue zetas =
      detail::multiply(detail::reciprocal(zeta_value(2 * k - 2, detail::kZetaEps)), detail::reciprocal(zeta_value(k, detail::kZetaEps)));
  return detail::multiply(zetas, euler_product(spec, threads));
}

}  // namespace algen
