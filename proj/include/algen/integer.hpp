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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

namespace algen {

using BigInt = boost::multiprecision::cpp_int;

/// Raised by Checked64 when a result leaves the int64 range. Callers that
/// use Checked64 as a fast path catch it and redo the work with BigInt.
struct Overflow : std::overflow_error {
  Overflow() : std::overflow_error("int64 overflow") {}
};

/// int64 with trapping arithmetic.
class Checked64 {
 public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT(implicit)

  constexpr std::int64_t value() const noexcept { return v_; }
  explicit operator BigInt() const { return BigInt(v_); }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (b.v_ == -1 && a.v_ == std::numeric_limits<std::int64_t>::min()) throw Overflow();
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const { return Checked64(0) - *this; }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }

  friend constexpr bool operator==(Checked64, Checked64) = default;
  friend constexpr auto operator<=>(Checked64, Checked64) = default;

 private:
  std::int64_t v_ = 0;
};

inline BigInt to_big(const BigInt& v) { return v; }
inline BigInt to_big(Checked64 v) { return BigInt(v.value()); }

template <class Int>
Int from_big(const BigInt& v);

template <>
inline BigInt from_big<BigInt>(const BigInt& v) {
  return v;
}

template <>
inline Checked64 from_big<Checked64>(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Overflow();
  return Checked64(static_cast<std::int64_t>(v));
}

template <class Int>
bool is_zero(const Int& a) {
  return a == Int(0);
}

template <class Int>
int sign(const Int& a) {
  return a < Int(0) ? -1 : (a == Int(0) ? 0 : 1);
}

template <class Int>
Int abs_value(const Int& a) {
  return a < Int(0) ? Int(-a) : a;
}

/// Least non-negative residue of a modulo m (m > 0).
template <class Int>
Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < Int(0)) r = r + m;
  return r;
}

/// Floor division for m > 0.
template <class Int>
Int floor_div(const Int& a, const Int& m) {
  Int q = a / m;
  if ((a % m) < Int(0)) q = q - Int(1);
  return q;
}

/// Returns (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
template <class Int>
std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
  Int x0(1), y0(0), x1(0), y1(1);
  while (!is_zero(b)) {
    const Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < Int(0)) return {Int(-a), Int(-x0), Int(-y0)};
  return {a, x0, y0};
}

inline BigInt ipow(BigInt base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline BigInt ipow(std::uint64_t base, unsigned exp) { return ipow(BigInt(base), exp); }

/// Smallest integer >= sqrt(v), v >= 0.
inline BigInt isqrt_ceil(const BigInt& v) {
  BigInt r = boost::multiprecision::sqrt(v);
  if (r * r < v) ++r;
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt parse_bigint(const std::string& s) {
  if (s.empty()) fail(Errc::BadParams, "empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(Errc::BadParams, "bad integer: " + s);
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') fail(Errc::BadParams, "bad integer: " + s);
  return BigInt(s);
}

}  // namespace algen
