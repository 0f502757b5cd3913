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

// Box sampling of integer tuples, Monte-Carlo generation densities,
// exhaustive densities of integer polynomial systems, and local zero counts.

#include "algen/errors.hpp"
#include "algen/fp_poly.hpp"
#include "algen/genz.hpp"
#include "algen/integer.hpp"
#include "algen/parallel.hpp"
#include "algen/primes.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace algen {

/// SplitMix64 (Steele, Lea, Flood 2014).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [-n, n] by rejection.
  std::int64_t uniform_symmetric(std::uint64_t n) {
    require(n < (std::uint64_t{1} << 62), Errc::BadParams, "box half-width too large");
    const std::uint64_t range = 2 * n + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return static_cast<std::int64_t>(x % range) - static_cast<std::int64_t>(n);
  }

 private:
  std::uint64_t state_;
};

/// Seed of substream `index`: the first SplitMix64 output of
/// seed + (index + 1) * golden gamma.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL).next();
}

struct BoxModel {
  std::uint64_t N = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
};

struct DensityEstimate {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double estimate = 0;
  double ci95_halfwidth = 0;
  std::uint64_t shard_size = 0;
};

inline ZGenTuple sample_tuple(const AlgebraShape& shape, unsigned k, std::uint64_t N, SplitMix64& rng) {
  require(!shape.over_field(), Errc::ShapeMismatch, "sampling needs a shape over Z");
  ZGenTuple t;
  for (unsigned i = 0; i < k; ++i) {
    AlgElemZ el;
    for (std::size_t c = 0; c < shape.copies(); ++c) {
      ZMat m(shape.blocks()[shape.block_of_copy(c)].n);
      for (auto& e : m.entries) e = rng.uniform_symmetric(N);
      el.push_back(std::move(m));
    }
    t.elements.push_back(std::move(el));
  }
  return t;
}

/// k elements of the algebra with every integer coordinate uniform on
/// [-N, N]; the stream is SplitMix64 seeded with box.seed.
inline ZGenTuple sample_tuple(const AlgebraShape& shape, unsigned k, const BoxModel& box) {
  SplitMix64 rng(box.seed);
  return sample_tuple(shape, k, box.N, rng);
}

inline constexpr std::uint64_t kSamplesPerShard = 1000;

/// Fraction of sampled k-tuples satisfying `pred`. Samples are split into
/// shards of kSamplesPerShard, shard i drawing from substream_seed(seed, i),
/// so the result does not depend on the thread count.
template <class Pred>
DensityEstimate mc_density(const AlgebraShape& shape, unsigned k, const BoxModel& box, unsigned threads, Pred pred) {
  require(k >= 1, Errc::BadParams, "k must be positive");
  const std::uint64_t shards = (box.samples + kSamplesPerShard - 1) / kSamplesPerShard;
  DensityEstimate est;
  est.trials = box.samples;
  est.shard_size = kSamplesPerShard;
  est.hits = sharded_reduce<std::uint64_t>(
      shards, threads, 0,
      [&](std::uint64_t sh) {
        SplitMix64 rng(substream_seed(box.seed, sh));
        const std::uint64_t count = std::min(kSamplesPerShard, box.samples - sh * kSamplesPerShard);
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < count; ++i)
          if (pred(sample_tuple(shape, k, box.N, rng))) ++hits;
        return hits;
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
  if (est.trials > 0) {
    const double p = static_cast<double>(est.hits) / static_cast<double>(est.trials);
    est.estimate = p;
    est.ci95_halfwidth = 1.96 * std::sqrt(p * (1 - p) / static_cast<double>(est.trials));
  }
  return est;
}

/// Monte-Carlo density of generating k-tuples over Z.
inline DensityEstimate mc_density(const AlgebraShape& shape, unsigned k, const BoxModel& box, unsigned threads = 1) {
  return mc_density(shape, k, box, threads,
                    [&shape](const ZGenTuple& t) { return generates_Z(shape, t, false).generates; });
}

/// Integer polynomial in n variables as a list of terms.
struct MTerm {
  std::vector<unsigned> exps;
  BigInt coeff;
};

struct MPoly {
  unsigned nvars = 0;
  std::vector<MTerm> terms;

  static MPoly variable(unsigned nvars, unsigned i, unsigned power = 1) {
    require(i < nvars, Errc::BadParams, "variable index out of range");
    MPoly f{nvars, {}};
    MTerm t{std::vector<unsigned>(nvars, 0), 1};
    t.exps[i] = power;
    f.terms.push_back(std::move(t));
    return f;
  }

  template <class Int>
  Int eval(const std::vector<std::int64_t>& x) const {
    Int r(0);
    for (const auto& t : terms) {
      Int v = from_big<Int>(t.coeff);
      for (unsigned i = 0; i < nvars; ++i)
        for (unsigned e = 0; e < t.exps[i]; ++e) v = v * Int(x[i]);
      r = r + v;
    }
    return r;
  }

  /// Coefficients reduced into [0, p).
  MPoly reduce_mod(std::uint64_t p) const {
    MPoly r{nvars, {}};
    for (const auto& t : terms) r.terms.push_back({t.exps, floor_mod(t.coeff, BigInt(p))});
    return r;
  }
};

namespace detail {

inline unsigned check_system(const std::vector<MPoly>& polys) {
  require(!polys.empty(), Errc::BadParams, "polynomial system is empty");
  const unsigned n = polys.front().nvars;
  require(n >= 1, Errc::BadParams, "polynomials need at least one variable");
  for (const auto& f : polys) {
    require(f.nvars == n, Errc::DimensionMismatch, "polynomials use different numbers of variables");
    for (const auto& t : f.terms) require(t.exps.size() == n, Errc::DimensionMismatch, "exponent vector length");
  }
  return n;
}

inline bool values_coprime(const std::vector<MPoly>& polys, const std::vector<std::int64_t>& x) {
  try {
    std::uint64_t g = 0;
    for (const auto& f : polys) {
      const std::int64_t v = f.eval<Checked64>(x).value();
      const std::uint64_t a = v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
      g = std::gcd(g, a);
      if (g == 1) return true;
    }
    return g == 1;
  } catch (const Overflow&) {
    BigInt g = 0;
    for (const auto& f : polys) {
      g = boost::multiprecision::gcd(g, BigInt(abs(f.eval<BigInt>(x))));
      if (g == 1) return true;
    }
    return g == 1;
  }
}

}  // namespace detail

/// hits / total over the box [-N, N]^n; total is exactly (2N+1)^n.
struct PolyDensity {
  BigInt hits;
  BigInt total;
  double value() const { return hits.convert_to<double>() / total.convert_to<double>(); }
};

/// Exact fraction of integer points x in [-N, N]^n at which the values
/// f_1(x), ..., f_s(x) have gcd 1, i.e. generate the unit ideal of Z.
inline PolyDensity exhaustive_poly_density(const std::vector<MPoly>& polys, std::uint64_t N, unsigned threads = 1) {
  const unsigned n = detail::check_system(polys);
  require(N < (std::uint64_t{1} << 31), Errc::TooLarge, "box half-width too large");
  const std::uint64_t side = 2 * N + 1;
  const BigInt total = ipow(side, n);
  require(total <= enum_cap(), Errc::TooLarge, "box has more points than the enumeration cap");
  const auto N64 = static_cast<std::int64_t>(N);
  const std::uint64_t hits = sharded_reduce<std::uint64_t>(
      side, threads, 0,
      [&](std::uint64_t first) {
        std::vector<std::int64_t> x(n, -N64);
        x[0] = static_cast<std::int64_t>(first) - N64;
        std::uint64_t h = 0;
        for (;;) {
          if (detail::values_coprime(polys, x)) ++h;
          unsigned i = n;
          while (i > 1 && x[i - 1] == N64) x[--i] = -N64;
          if (i <= 1) break;
          ++x[i - 1];
        }
        return h;
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
  return {BigInt(hits), total};
}

/// Number of common zeros of the system in F_p^n. The first n-1 coordinates
/// are enumerated; on each fiber the last coordinate's roots are the distinct
/// roots in F_p of the gcd of the specialised univariate polynomials.
inline BigInt local_zero_count(const std::vector<MPoly>& polys, std::uint64_t p, unsigned n) {
  require(is_prime_u64(p), Errc::NonPrime, "p must be prime");
  require(detail::check_system(polys) == n, Errc::DimensionMismatch, "system has a different number of variables");
  require(ipow(p, n) <= enum_cap(), Errc::TooLarge, "p^n exceeds the enumeration cap");
  std::vector<MPoly> red;
  for (const auto& f : polys) red.push_back(f.reduce_mod(p));
  std::vector<std::vector<std::uint64_t>> pows(n);  // pows[i][e] = x_i^e, refreshed per fiber
  unsigned max_e = 0;
  for (const auto& f : red)
    for (const auto& t : f.terms)
      for (auto e : t.exps) max_e = std::max(max_e, e);
  std::vector<std::uint64_t> prefix(n - 1, 0);
  BigInt count = 0;
  for (;;) {
    for (unsigned i = 0; i + 1 < n; ++i) {
      pows[i].assign(max_e + 1, 1);
      for (unsigned e = 1; e <= max_e; ++e) pows[i][e] = detail::mulmod_u64(pows[i][e - 1], prefix[i], p);
    }
    fp_poly::Poly g;
    bool all_zero = true;
    for (const auto& f : red) {
      fp_poly::Poly u;
      for (const auto& t : f.terms) {
        std::uint64_t c = static_cast<std::uint64_t>(t.coeff);
        for (unsigned i = 0; i + 1 < n; ++i) c = detail::mulmod_u64(c, pows[i][t.exps[i]], p);
        const unsigned e = t.exps[n - 1];
        if (u.size() <= e) u.resize(e + 1, 0);
        u[e] = (u[e] + c) % p;
      }
      fp_poly::trim(u);
      if (u.empty()) continue;
      all_zero = false;
      g = fp_poly::gcd(std::move(g), std::move(u), p);
    }
    count += all_zero ? p : fp_poly::distinct_root_count(g, p);
    unsigned i = 0;
    while (i + 1 < n && prefix[i] == p - 1) prefix[i++] = 0;
    if (i + 1 >= n) break;
    ++prefix[i];
  }
  return count;
}

/// prod_{p <= P} (1 - t_p / p^n) with t_p the local zero count.
inline long double local_density_product(const std::vector<MPoly>& polys, unsigned n, std::uint64_t P) {
  long double prod = 1;
  for (auto p : primes_up_to(P)) {
    const long double t = local_zero_count(polys, p, n).convert_to<long double>();
    prod *= 1 - t / std::pow(static_cast<long double>(p), static_cast<long double>(n));
  }
  return prod;
}

}  // namespace algen
