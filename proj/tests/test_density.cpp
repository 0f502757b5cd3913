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
#include "algen/genff.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace algen;

namespace {

const Real kPi = std::acos(-1.0L);

// Bracket for zeta(s): partial sum to M plus integral bounds on the tail,
// int_{M+1}^inf <= sum_{n>M} n^-s <= int_M^inf.
struct Bracket {
  Real lo, hi;
};

Bracket zeta_bracket(unsigned s, std::uint64_t M) {
  Real sum = 0;
  for (std::uint64_t n = M; n >= 1; --n) sum += std::pow(static_cast<Real>(n), -static_cast<Real>(s));
  const Real lo = std::pow(static_cast<Real>(M + 1), 1 - static_cast<Real>(s)) / (s - 1);
  const Real hi = std::pow(static_cast<Real>(M), 1 - static_cast<Real>(s)) / (s - 1);
  return {sum + lo, sum + hi};
}

std::vector<std::uint64_t> sieve(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
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

TEST(Zeta, EvenClosedForms) {
  for (Real eps : {1e-6L, 1e-10L, 1e-15L}) {
    const auto z2 = zeta_value(2, eps);
    EXPECT_LE(std::fabs(z2.value - kPi * kPi / 6), eps);
    EXPECT_LE(z2.abs_error_bound, eps);
    const auto z4 = zeta_value(4, eps);
    EXPECT_LE(std::fabs(z4.value - std::pow(kPi, 4) / 90), eps);
  }
  EXPECT_LE(std::fabs(zeta_value(6).value - std::pow(kPi, 6) / 945), 1e-15L);
  EXPECT_LE(std::fabs(zeta_value(8).value - std::pow(kPi, 8) / 9450), 1e-15L);
  EXPECT_EQ(zeta_value(2).method, DensityValue::Method::ExactZeta);
}

TEST(Zeta, ThreeAgainstCertifiedPartialSum) {
  const auto b = zeta_bracket(3, 100000);
  ASSERT_LT(b.hi - b.lo, 1e-14L);
  const auto z = zeta_value(3, 1e-12L);
  EXPECT_GE(z.value, b.lo - 1e-9L);
  EXPECT_LE(z.value, b.hi + 1e-9L);
  // and the reported bound is honest against the bracket
  EXPECT_GE(z.value + z.abs_error_bound, b.lo - 1e-15L);
  EXPECT_LE(z.value - z.abs_error_bound, b.hi + 1e-15L);
}

TEST(Zeta, ErrorBoundsAreHonest) {
  for (unsigned s = 2; s <= 12; ++s) {
    const auto b = zeta_bracket(s, 100000);
    for (Real eps : {1e-8L, 1e-13L}) {
      const auto z = zeta_value(s, eps);
      EXPECT_LE(z.abs_error_bound, eps);
      EXPECT_LE(z.value - z.abs_error_bound, b.hi + 1e-15L) << s;
      EXPECT_GE(z.value + z.abs_error_bound, b.lo - 1e-15L) << s;
    }
  }
}

TEST(Zeta, BadParams) {
  expect_error(Errc::BadParams, [] { zeta_value(1); });
  expect_error(Errc::BadParams, [] { zeta_value(0); });
  expect_error(Errc::BadParams, [] { zeta_value(2, 0); });
  expect_error(Errc::BadParams, [] { zeta_value(2, -1); });
  expect_error(Errc::BadParams, [] { zeta_value(2, 1e-30L); });
}

TEST(DenZn, Examples) {
  const auto a = den_Zn(2, 1);
  EXPECT_NEAR(static_cast<double>(a.value), static_cast<double>(6 / (kPi * kPi)), 1e-15);
  EXPECT_EQ(den_Zn(1, 1).value, 0);
  EXPECT_EQ(den_Zn(4, 4).value, 0);
  EXPECT_EQ(den_Zn(4, 4).abs_error_bound, 0);
  const auto z2 = zeta_bracket(2, 1000000), z3 = zeta_bracket(3, 100000);
  const auto b = den_Zn(3, 2);
  EXPECT_LE(b.value, 1 / (z2.lo * z3.lo) + b.abs_error_bound);
  EXPECT_GE(b.value, 1 / (z2.hi * z3.hi) - b.abs_error_bound);
  EXPECT_NEAR(static_cast<double>(den_Zn(5, 3).value),
              static_cast<double>(1 / (zeta_value(3).value * zeta_value(4).value * zeta_value(5).value)), 1e-14);
  expect_error(Errc::BadParams, [] { den_Zn(1, 2); });
  expect_error(Errc::BadParams, [] { den_Zn(0, 0); });
}

TEST(DenZn, IncreasesWithK) {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned k = n; k < 12; ++k) {
      const auto a = den_Zn(k, n), b = den_Zn(k + 1, n);
      EXPECT_LT(a.value, b.value);
      EXPECT_GE(a.value, 0);
      EXPECT_LE(b.value, 1);
    }
}

TEST(DenMatrix, TwoByTwo) {
  EXPECT_EQ(den_matrix(2, 2).value, 0);
  for (unsigned k = 3; k <= 8; ++k) {
    const auto v = den_matrix(2, k);
    const Real ref = 1 / (zeta_value(k - 1).value * zeta_value(k).value);
    EXPECT_LE(std::fabs(v.value - ref), 1e-14L);
    EXPECT_LE(v.abs_error_bound, 1e-14L);
  }
  EXPECT_NEAR(static_cast<double>(den_matrix(2, 3).value), 0.5057, 1e-4);
}

TEST(DenMatrix, ThreeByThreeAtTwo) {
  const auto v = den_matrix(3, 2);
  const Real z2 = kPi * kPi / 6;
  const Real ref = 1 / (z2 * z2 * zeta_value(3).value);
  EXPECT_LE(std::fabs(v.value - ref), 1e-8L);
  EXPECT_LE(std::fabs(v.value - ref), v.abs_error_bound + 1e-15L);
  EXPECT_NEAR(static_cast<double>(v.value), 0.3074, 1e-4);
  EXPECT_EQ(v.method, DensityValue::Method::EulerTruncation);
  EXPECT_EQ(v.P, 100000u);
}

TEST(DenMatrix, ThreeByThreeMatchesProductOverSquares) {
  // 1/(zeta(2)zeta(3)zeta(4)) prod_p (1 + p^-2 + p^-3 - p^-5), primes to 10^7;
  // the omitted tail is below sum_{n > 10^7} 2 n^-2 < 2e-7
  Real prod = 1;
  for (auto p : sieve(10000000)) {
    const Real x = 1.0L / static_cast<Real>(p);
    prod *= 1 + x * x + x * x * x - x * x * x * x * x;
  }
  const Real ref = prod / (kPi * kPi / 6 * zeta_value(3).value * std::pow(kPi, 4) / 90);
  const auto v = den_matrix(3, 3);
  EXPECT_LE(std::fabs(v.value - ref), 1e-6L);
  EXPECT_LE(std::fabs(v.value - ref), v.abs_error_bound + 2e-7L);
}

TEST(DenMatrix, ThreadCountDoesNotChangeResults) {
  for (unsigned k : {2u, 3u, 5u}) {
    const auto a = den_matrix(3, k, 50000, 1), b = den_matrix(3, k, 50000, 4);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.abs_error_bound, b.abs_error_bound);
  }
}

TEST(DenMatrix, BadParams) {
  expect_error(Errc::BadParams, [] { den_matrix(4, 3); });
  expect_error(Errc::BadParams, [] { den_matrix(3, 1); });
  expect_error(Errc::BadParams, [] { den_matrix(2, 1); });
}

TEST(DenMatrix, BelowTwoByTwoAndInUnitInterval) {
  for (unsigned k = 2; k <= 10; ++k) {
    const auto v = den_matrix(3, k);
    EXPECT_GT(v.value, 0);
    EXPECT_LT(v.value, 1);
    EXPECT_LT(v.abs_error_bound, 1e-6L);
  }
  for (unsigned k = 3; k <= 10; ++k) EXPECT_LT(den_matrix(3, k).value, den_matrix(3, k + 1).value);
}

TEST(EulerProduct, TrivialFactor) {
  EulerProductSpec spec;
  spec.local_factor = [](std::uint64_t) { return 1.0L; };
  spec.P = 1000;
  spec.tail_constant = 0;
  const auto v = euler_product(spec);
  EXPECT_EQ(v.value, 1);
  EXPECT_EQ(v.abs_error_bound, 0);
  EXPECT_EQ(v.P, 1000u);
}

TEST(EulerProduct, InverseZetaTwo) {
  EulerProductSpec spec;
  spec.local_factor = [](std::uint64_t p) { return 1 - 1.0L / (static_cast<Real>(p) * static_cast<Real>(p)); };
  spec.P = 100000;
  spec.tail_exponent = 2;
  spec.tail_constant = 1;
  const auto v = euler_product(spec);
  const Real ref = 6 / (kPi * kPi);
  EXPECT_LE(std::fabs(v.value - ref), 1e-4L);
  EXPECT_LE(std::fabs(v.value - ref), v.abs_error_bound);
  EXPECT_EQ(v.method, DensityValue::Method::EulerTruncation);
}

TEST(EulerProduct, MatchesTwoByTwoClosedForm) {
  // g_{k,2}(p) / p^{4k} = (1 - p^{1-k})(1 - p^{-k}), so |1 - factor| <= 2 p^{1-k}
  for (unsigned k : {3u, 4u, 5u}) {
    EulerProductSpec spec;
    spec.local_factor = [k](std::uint64_t p) {
      return g_closed_form(k, 2, p).convert_to<Real>() / std::pow(static_cast<Real>(p), static_cast<Real>(4 * k));
    };
    spec.P = 100000;
    spec.tail_exponent = k - 1;
    spec.tail_constant = 2;
    const auto v = euler_product(spec);
    const auto c = den_matrix(2, k);
    EXPECT_LE(std::fabs(v.value - c.value), v.abs_error_bound + c.abs_error_bound) << k;
    EXPECT_LE(v.abs_error_bound, 1e-4L);
  }
}

TEST(EulerProduct, MonotoneTruncation) {
  EulerProductSpec spec;
  spec.local_factor = [](std::uint64_t p) {
    const Real x = 1.0L / static_cast<Real>(p);
    return (1 - x * x) * (1 - x * x * x);
  };
  spec.tail_exponent = 2;
  spec.tail_constant = 2;
  DensityValue prev{};
  bool first = true;
  for (std::uint64_t P : {10u, 100u, 1000u, 10000u, 100000u}) {
    spec.P = P;
    const auto v = euler_product(spec);
    if (!first) {
      EXPECT_LE(std::fabs(v.value - prev.value), prev.abs_error_bound) << P;
      EXPECT_LT(v.abs_error_bound, prev.abs_error_bound);
    }
    prev = v;
    first = false;
  }
  for (unsigned k = 2; k <= 5; ++k) {
    DensityValue last{};
    bool have = false;
    for (std::uint64_t P : {100u, 1000u, 10000u, 100000u}) {
      const auto v = den_matrix(3, k, P);
      if (have) {
        EXPECT_LE(std::fabs(v.value - last.value), last.abs_error_bound) << k << " " << P;
      }
      last = v;
      have = true;
    }
  }
}

TEST(EulerProduct, ThreadCountDoesNotChangeResults) {
  EulerProductSpec spec;
  spec.local_factor = [](std::uint64_t p) { return 1 - 1.0L / std::pow(static_cast<Real>(p), 1.5L); };
  spec.P = 30000;
  spec.tail_exponent = 1.5L;
  spec.tail_constant = 1;
  const auto a = euler_product(spec, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    const auto b = euler_product(spec, t);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.abs_error_bound, b.abs_error_bound);
  }
}

TEST(EulerProduct, Errors) {
  EulerProductSpec spec;
  spec.local_factor = [](std::uint64_t) { return 1.0L; };
  spec.tail_exponent = 1;
  expect_error(Errc::DivergentTail, [&] { euler_product(spec); });
  spec.tail_exponent = 0.5L;
  expect_error(Errc::DivergentTail, [&] { euler_product(spec); });
  spec.tail_exponent = 2;
  spec.P = 1;
  expect_error(Errc::BadParams, [&] { euler_product(spec); });
  spec.P = 100;
  spec.local_factor = nullptr;
  expect_error(Errc::BadParams, [&] { euler_product(spec); });
}
