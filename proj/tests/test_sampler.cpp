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

#include "algen/density.hpp"
#include "algen/sampler.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

using namespace algen;

namespace {

MPoly term_poly(unsigned nvars, std::vector<std::pair<std::vector<unsigned>, long long>> terms) {
  MPoly f{nvars, {}};
  for (auto& [e, c] : terms) f.terms.push_back({e, BigInt(c)});
  return f;
}

// Plain evaluation of f at x modulo p.
std::uint64_t eval_mod(const MPoly& f, const std::vector<std::uint64_t>& x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (const auto& t : f.terms) {
    std::uint64_t v = static_cast<std::uint64_t>(floor_mod(t.coeff, BigInt(p)));
    for (std::size_t i = 0; i < x.size(); ++i)
      for (unsigned e = 0; e < t.exps[i]; ++e) v = v * x[i] % p;
    r = (r + v) % p;
  }
  return r;
}

std::uint64_t brute_zero_count(const std::vector<MPoly>& polys, std::uint64_t p, unsigned n) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= p;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint64_t> x(n);
    std::uint64_t c = code;
    for (auto& v : x) v = c % p, c /= p;
    bool zero = true;
    for (const auto& f : polys) zero = zero && eval_mod(f, x, p) == 0;
    count += zero;
  }
  return count;
}

std::uint64_t coprime_pairs(std::int64_t N) {
  std::uint64_t h = 0;
  for (std::int64_t a = -N; a <= N; ++a)
    for (std::int64_t b = -N; b <= N; ++b) h += std::gcd(a, b) == 1;
  return h;
}

void expect_error(Errc code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code);
  }
}

}  // namespace

TEST(SplitMix, ReferenceOutputs) {
  SplitMix64 g(0);
  EXPECT_EQ(g.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(g.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(g.next(), 0x06C45D188009454FULL);
  EXPECT_NE(substream_seed(42, 0), substream_seed(42, 1));
  EXPECT_NE(substream_seed(42, 0), substream_seed(43, 0));
}

TEST(Sample, ZeroBoxGivesZeroTuple) {
  const auto shape = AlgebraShape::over_integers({{2, 1, 2}, {3, 1, 1}});
  const auto t = sample_tuple(shape, 3, BoxModel{0, 7, 1});
  ASSERT_EQ(t.k(), 3u);
  for (const auto& el : t.elements) {
    ASSERT_EQ(el.size(), 3u);
    EXPECT_EQ(el[0].n, 2u);
    EXPECT_EQ(el[2].n, 3u);
    for (const auto& m : el)
      for (const auto& e : m.entries) EXPECT_EQ(e, 0);
  }
}

TEST(Sample, DeterministicUnderSeed) {
  const auto shape = AlgebraShape::integer_matrix(3);
  const BoxModel box{1000, 123, 1};
  EXPECT_EQ(sample_tuple(shape, 2, box), sample_tuple(shape, 2, box));
  EXPECT_NE(sample_tuple(shape, 2, box), sample_tuple(shape, 2, BoxModel{1000, 124, 1}));
  for (const auto& el : sample_tuple(shape, 2, box).elements)
    for (const auto& e : el[0].entries) EXPECT_LE(abs(e), 1000);
  expect_error(Errc::ShapeMismatch, [] { sample_tuple(AlgebraShape::matrix(make_field(2, 1), 2), 1, BoxModel{1, 1, 1}); });
}

TEST(Sample, UniformOnSmallBox) {
  const auto shape = AlgebraShape::integer_matrix(2);
  SplitMix64 rng(42);
  const int draws = 10000;
  std::vector<std::array<int, 7>> freq(4, std::array<int, 7>{});
  for (int i = 0; i < draws; ++i) {
    const auto t = sample_tuple(shape, 1, 3, rng);
    for (unsigned c = 0; c < 4; ++c) {
      const int v = static_cast<int>(t.elements[0][0].entries[c]);
      ASSERT_GE(v, -3);
      ASSERT_LE(v, 3);
      ++freq[c][v + 3];
    }
  }
  for (const auto& f : freq) {
    double chi2 = 0;
    for (int x : f) {
      EXPECT_NEAR(static_cast<double>(x) / draws, 1.0 / 7, 0.02);
      const double e = draws / 7.0;
      chi2 += (x - e) * (x - e) / e;
    }
    // 6 degrees of freedom, upper 0.1% point
    EXPECT_LT(chi2, 22.46);
  }
}

TEST(Sample, SymmetricRangeIsExact) {
  SplitMix64 rng(5);
  std::vector<int> seen(3, 0);
  for (int i = 0; i < 3000; ++i) ++seen[rng.uniform_symmetric(1) + 1];
  for (int s : seen) EXPECT_GT(s, 800);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(rng.uniform_symmetric(0), 0);
  expect_error(Errc::BadParams, [&] { rng.uniform_symmetric(std::uint64_t{1} << 62); });
}

TEST(MonteCarlo, ConstantPredicates) {
  const auto shape = AlgebraShape::integer_matrix(2);
  const BoxModel box{10, 1, 2500};
  const auto yes = mc_density(shape, 2, box, 1, [](const ZGenTuple&) { return true; });
  EXPECT_EQ(yes.hits, 2500u);
  EXPECT_EQ(yes.trials, 2500u);
  EXPECT_EQ(yes.estimate, 1.0);
  EXPECT_EQ(yes.ci95_halfwidth, 0.0);
  const auto no = mc_density(shape, 2, box, 1, [](const ZGenTuple&) { return false; });
  EXPECT_EQ(no.hits, 0u);
  EXPECT_EQ(no.estimate, 0.0);
  EXPECT_EQ(no.shard_size, kSamplesPerShard);
}

TEST(MonteCarlo, ShardsUseSubstreams) {
  const auto shape = AlgebraShape::integer_matrix(2);
  const BoxModel box{50, 9, 2300};
  std::vector<ZGenTuple> seen;
  mc_density(shape, 1, box, 1, [&](const ZGenTuple& t) {
    seen.push_back(t);
    return true;
  });
  ASSERT_EQ(seen.size(), 2300u);
  std::size_t i = 0;
  for (std::uint64_t sh = 0; sh < 3; ++sh) {
    SplitMix64 rng(substream_seed(9, sh));
    for (std::uint64_t j = 0; j < (sh < 2 ? 1000u : 300u); ++j) EXPECT_EQ(sample_tuple(shape, 1, 50, rng), seen[i++]);
  }
}

TEST(MonteCarlo, AgreesWithCommutatorPredicate) {
  const auto shape = AlgebraShape::integer_matrix(2);
  const BoxModel box{20, 77, 4000};
  const auto a = mc_density(shape, 2, box);
  const auto b = mc_density(shape, 2, box, 1, [](const ZGenTuple& t) {
    return det_commutator_test(t.elements[0][0], t.elements[1][0]);
  });
  EXPECT_EQ(a.hits, b.hits);
}

TEST(MonteCarlo, TwoByTwoThreeElements) {
  const auto shape = AlgebraShape::integer_matrix(2);
  const auto est = mc_density(shape, 3, BoxModel{500, 42, 20000});
  const auto target = den_matrix(2, 3);
  EXPECT_NEAR(est.estimate, static_cast<double>(target.value), est.ci95_halfwidth + 0.01);
  EXPECT_NEAR(est.ci95_halfwidth, 1.96 * std::sqrt(est.estimate * (1 - est.estimate) / 20000), 1e-12);
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResults) {
  const auto shape = AlgebraShape::integer_matrix(2);
  const BoxModel box{100, 3, 5500};
  const auto one = mc_density(shape, 2, box, 1);
  for (unsigned t : {2u, 4u, 7u}) {
    const auto other = mc_density(shape, 2, box, t);
    EXPECT_EQ(other.hits, one.hits);
    EXPECT_EQ(other.estimate, one.estimate);
  }
}

TEST(Exhaustive, SingleVariable) {
  const std::vector<MPoly> t = {MPoly::variable(1, 0)};
  for (std::uint64_t N : {0u, 1u, 5u, 100u}) {
    const auto d = exhaustive_poly_density(t, N);
    EXPECT_EQ(d.total, 2 * N + 1);
    EXPECT_EQ(d.hits, N == 0 ? 0 : 2);
  }
}

TEST(Exhaustive, CoordinatePairs) {
  const std::vector<MPoly> lin = {MPoly::variable(2, 0), MPoly::variable(2, 1)};
  const std::vector<MPoly> sq = {MPoly::variable(2, 0, 2), MPoly::variable(2, 1, 2)};
  for (std::int64_t N : {1, 7, 60}) {
    const auto a = exhaustive_poly_density(lin, N);
    EXPECT_EQ(a.hits, coprime_pairs(N));
    EXPECT_EQ(a.total, BigInt(2 * N + 1) * (2 * N + 1));
    EXPECT_EQ(exhaustive_poly_density(sq, N).hits, a.hits);
  }
  const auto big = exhaustive_poly_density(lin, 1000, 2);
  EXPECT_EQ(big.hits, coprime_pairs(1000));
  EXPECT_NEAR(big.value(), 6 / (M_PI * M_PI), 1e-3);
}

TEST(Exhaustive, MatchesDirectGcd) {
  // f = 3x^2 + y - 1, g = x*y + 4
  const std::vector<MPoly> sys = {term_poly(2, {{{2, 0}, 3}, {{0, 1}, 1}, {{0, 0}, -1}}),
                                  term_poly(2, {{{1, 1}, 1}, {{0, 0}, 4}})};
  const std::int64_t N = 25;
  std::uint64_t h = 0;
  for (std::int64_t x = -N; x <= N; ++x)
    for (std::int64_t y = -N; y <= N; ++y) h += std::gcd(3 * x * x + y - 1, x * y + 4) == 1;
  EXPECT_EQ(exhaustive_poly_density(sys, N).hits, h);
  EXPECT_EQ(exhaustive_poly_density(sys, N, 3).hits, h);
}

TEST(Exhaustive, LargeValuesUseBigIntegers) {
  // x^9 * 10^12 overflows 64 bits once |x| >= 4
  const std::vector<MPoly> sys = {term_poly(2, {{{9, 0}, 1000000000000LL}}), term_poly(2, {{{0, 1}, 1}, {{0, 0}, 1}})};
  const std::int64_t N = 6;
  std::uint64_t h = 0;
  for (std::int64_t x = -N; x <= N; ++x)
    for (std::int64_t y = -N; y <= N; ++y) {
      const BigInt a = BigInt(1000000000000LL) * ipow(BigInt(x < 0 ? -x : x), 9);
      h += boost::multiprecision::gcd(a, BigInt(y + 1 < 0 ? -(y + 1) : y + 1)) == 1;
    }
  EXPECT_EQ(exhaustive_poly_density(sys, N).hits, h);
}

TEST(Exhaustive, Errors) {
  const std::vector<MPoly> three = {MPoly::variable(3, 0), MPoly::variable(3, 1), MPoly::variable(3, 2)};
  expect_error(Errc::TooLarge, [&] { exhaustive_poly_density(three, 1000); });
  expect_error(Errc::BadParams, [] { exhaustive_poly_density({}, 3); });
  expect_error(Errc::DimensionMismatch, [] { exhaustive_poly_density({MPoly::variable(1, 0), MPoly::variable(2, 0)}, 3); });
}

TEST(Local, Examples) {
  const std::vector<MPoly> coords = {MPoly::variable(2, 0), MPoly::variable(2, 1)};
  for (auto p : primes_up_to(60)) EXPECT_EQ(local_zero_count(coords, p, 2), 1);
  EXPECT_EQ(local_zero_count({term_poly(2, {{{2, 0}, 1}, {{0, 2}, 1}})}, 3, 2), 1);
  EXPECT_EQ(local_zero_count({term_poly(1, {{{2}, 1}, {{1}, -1}})}, 2, 1), 2);
  // x^2 + y^2 mod 5 vanishes on the two lines y = 2x, y = 3x
  EXPECT_EQ(local_zero_count({term_poly(2, {{{2, 0}, 1}, {{0, 2}, 1}})}, 5, 2), 9);
  for (unsigned n = 1; n <= 4; ++n) {
    std::vector<MPoly> xs;
    for (unsigned i = 0; i < n; ++i) xs.push_back(MPoly::variable(n, i));
    for (std::uint64_t p : {2u, 3u, 7u}) EXPECT_EQ(local_zero_count(xs, p, n), 1);
  }
  expect_error(Errc::NonPrime, [&] { local_zero_count(coords, 4, 2); });
  expect_error(Errc::DimensionMismatch, [&] { local_zero_count(coords, 3, 3); });
}

TEST(Local, MatchesBruteEnumeration) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coef(-6, 6), expo(0, 3), count(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned n = 1 + trial % 3;
    std::vector<MPoly> sys;
    const int s = 1 + trial % 2;
    for (int j = 0; j < s; ++j) {
      MPoly f{n, {}};
      for (int t = count(rng); t > 0; --t) {
        std::vector<unsigned> e(n);
        for (auto& x : e) x = expo(rng);
        f.terms.push_back({e, BigInt(coef(rng))});
      }
      sys.push_back(f);
    }
    for (std::uint64_t p : {2u, 3u, 5u, 11u, 13u}) EXPECT_EQ(local_zero_count(sys, p, n), brute_zero_count(sys, p, n));
  }
}

TEST(Local, ProductApproachesExhaustiveDensity) {
  const std::vector<MPoly> lin = {MPoly::variable(2, 0), MPoly::variable(2, 1)};
  const long double prod = local_density_product(lin, 2, 2000);
  EXPECT_NEAR(static_cast<double>(prod), 6 / (M_PI * M_PI), 1e-3);
  EXPECT_NEAR(exhaustive_poly_density(lin, 300).value(), static_cast<double>(prod), 0.01);
}
