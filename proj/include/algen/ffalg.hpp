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

// Finite fields F_{p^s} and dense linear algebra over them.

#include "algen/errors.hpp"
#include "algen/fp_poly.hpp"
#include "algen/integer.hpp"
#include "algen/primes.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace algen {

/// An element of F_{p^s}, encoded as code = sum c_i p^i over its coefficient
/// vector (c_0, ..., c_{s-1}) in the polynomial basis. Codes order elements
/// canonically; 0 and 1 have codes 0 and 1.
struct FqElem {
  std::uint64_t code = 0;

  friend constexpr bool operator==(FqElem, FqElem) = default;
  friend constexpr auto operator<=>(FqElem, FqElem) = default;
};

/// Arithmetic context for F_q, q = p^s. Immutable and cheap to copy.
class FieldCtx {
 public:
  static constexpr std::uint64_t kTableLimit = 256;

  /// Builds F_{p^s} with the irreducible monic modulus of least code.
  static FieldCtx make(std::uint64_t p, unsigned s) {
    require(s >= 1, Errc::BadDegree, "extension degree must be >= 1");
    require(is_prime_u64(p), Errc::NonPrime, std::to_string(p) + " is not prime");
    const BigInt q = ipow(BigInt(p), s);
    require(q <= std::numeric_limits<std::uint64_t>::max(), Errc::BadParams, "field order exceeds 2^64");
    FieldCtx ctx;
    ctx.p_ = p;
    ctx.s_ = s;
    ctx.q_ = static_cast<std::uint64_t>(q);
    if (s > 1) {
      const std::uint64_t count = ctx.q_;
      for (std::uint64_t c = 0; c < count; ++c) {
        fp_poly::Poly f(s + 1, 0);
        std::uint64_t v = c;
        for (unsigned i = 0; i < s; ++i) {
          f[i] = v % p;
          v /= p;
        }
        f[s] = 1;
        if (fp_poly::is_irreducible(f, p)) {
          ctx.modulus_ = std::move(f);
          break;
        }
      }
    }
    if (ctx.q_ <= kTableLimit) ctx.build_tables();
    return ctx;
  }

  std::uint64_t p() const noexcept { return p_; }
  unsigned s() const noexcept { return s_; }
  std::uint64_t q() const noexcept { return q_; }
  /// Monic modulus, lowest coefficient first; empty for prime fields.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  FqElem zero() const noexcept { return {0}; }
  FqElem one() const noexcept { return {1}; }

  /// Image of an integer under Z -> F_p -> F_q.
  template <class Int>
  FqElem from_int(const Int& v) const {
    return {static_cast<std::uint64_t>(floor_mod(to_big(v), BigInt(p_)))};
  }
  FqElem from_int(std::int64_t v) const {
    const auto pm = static_cast<std::int64_t>(p_);
    std::int64_t r = v % pm;
    if (r < 0) r += pm;
    return {static_cast<std::uint64_t>(r)};
  }

  FqElem from_coeffs(std::span<const std::uint64_t> c) const {
    require(c.size() == s_, Errc::DimensionMismatch, "coefficient vector length must equal s");
    std::uint64_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      require(c[i] < p_, Errc::BadParams, "coefficient out of range");
      code = code * p_ + c[i];
    }
    return {code};
  }

  std::vector<std::uint64_t> coeffs(FqElem a) const {
    std::vector<std::uint64_t> c(s_);
    for (unsigned i = 0; i < s_; ++i) {
      c[i] = a.code % p_;
      a.code /= p_;
    }
    return c;
  }

  bool contains(FqElem a) const noexcept { return a.code < q_; }

  FqElem add(FqElem a, FqElem b) const {
    if (tables_) return {tables_->add[a.code * q_ + b.code]};
    if (s_ == 1) {
      std::uint64_t r = a.code + b.code;
      if (r < a.code || r >= p_) r -= p_;
      return {r};
    }
    auto x = coeffs(a), y = coeffs(b);
    for (unsigned i = 0; i < s_; ++i) x[i] = (x[i] + y[i]) % p_;
    return from_coeffs(x);
  }

  FqElem neg(FqElem a) const {
    if (tables_) return {tables_->neg[a.code]};
    if (s_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
    auto x = coeffs(a);
    for (auto& c : x) c = c ? p_ - c : 0;
    return from_coeffs(x);
  }

  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

  FqElem mul(FqElem a, FqElem b) const {
    if (tables_) return {tables_->mul[a.code * q_ + b.code]};
    if (s_ == 1) return {detail::mulmod_u64(a.code, b.code, p_)};
    auto x = coeffs(a), y = coeffs(b);
    fp_poly::trim(x);
    fp_poly::trim(y);
    auto r = fp_poly::mod(fp_poly::mul(x, y, p_), modulus_, p_);
    r.resize(s_, 0);
    return from_coeffs(r);
  }

  FqElem pow(FqElem a, BigInt e) const {
    FqElem r = one();
    while (e > 0) {
      if ((e & 1) != 0) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  FqElem inv(FqElem a) const {
    require(a.code != 0, Errc::DivisionByZero, "inverse of zero");
    if (tables_) return {tables_->inv[a.code]};
    return pow(a, BigInt(q_) - 2);
  }

  /// x -> x^(p^j).
  FqElem frobenius(FqElem a, unsigned j) const {
    for (unsigned i = 0; i < j % s_; ++i) a = pow(a, BigInt(p_));
    return a;
  }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p_ == b.p_ && a.s_ == b.s_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint16_t> add, mul, neg, inv;
  };

  void build_tables() {
    auto t = std::make_shared<Tables>();
    t->add.resize(q_ * q_);
    t->mul.resize(q_ * q_);
    t->neg.resize(q_);
    t->inv.resize(q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a) {
      t->neg[a] = static_cast<std::uint16_t>(neg({a}).code);
      for (std::uint64_t b = 0; b < q_; ++b) {
        t->add[a * q_ + b] = static_cast<std::uint16_t>(add({a}, {b}).code);
        const auto m = mul({a}, {b}).code;
        t->mul[a * q_ + b] = static_cast<std::uint16_t>(m);
        if (m == 1) t->inv[a] = static_cast<std::uint16_t>(b);
      }
    }
    tables_ = std::move(t);
  }

  std::uint64_t p_ = 2;
  unsigned s_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint64_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

inline FieldCtx make_field(std::uint64_t p, unsigned s) { return FieldCtx::make(p, s); }

/// Element of multiplicative order q - 1 with the smallest code.
inline FqElem multiplicative_generator(const FieldCtx& ctx) {
  const std::uint64_t order = ctx.q() - 1;
  if (order == 1) return ctx.one();
  const auto factors = prime_factors_u64(order);
  for (std::uint64_t c = 2; c < ctx.q(); ++c) {
    const FqElem g{c};
    bool ok = true;
    for (auto r : factors) {
      if (ctx.pow(g, BigInt(order / r)) == ctx.one()) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(Errc::InternalMismatch, "no multiplicative generator found");
}

/// Dense n x n matrix, row-major.
struct FqMat {
  unsigned n = 0;
  std::vector<FqElem> entries;

  FqMat() = default;
  explicit FqMat(unsigned size) : n(size), entries(std::size_t{size} * size) {}

  FqElem& at(unsigned r, unsigned c) { return entries[std::size_t{r} * n + c]; }
  FqElem at(unsigned r, unsigned c) const { return entries[std::size_t{r} * n + c]; }

  friend bool operator==(const FqMat&, const FqMat&) = default;
  friend auto operator<=>(const FqMat& a, const FqMat& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.entries <=> b.entries;
  }
};

namespace mat {

inline FqMat identity(const FieldCtx& ctx, unsigned n) {
  FqMat m(n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = ctx.one();
  return m;
}

inline FqMat scalar(const FieldCtx&, unsigned n, FqElem c) {
  FqMat m(n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

/// E_{rc} with 1-based indices as in matrix-unit notation.
inline FqMat unit(const FieldCtx& ctx, unsigned n, unsigned r, unsigned c) {
  FqMat m(n);
  m.at(r - 1, c - 1) = ctx.one();
  return m;
}

inline FqMat add(const FieldCtx& ctx, const FqMat& a, const FqMat& b) {
  require(a.n == b.n, Errc::DimensionMismatch, "matrix sizes differ");
  FqMat r(a.n);
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = ctx.add(a.entries[i], b.entries[i]);
  return r;
}

inline FqMat sub(const FieldCtx& ctx, const FqMat& a, const FqMat& b) {
  require(a.n == b.n, Errc::DimensionMismatch, "matrix sizes differ");
  FqMat r(a.n);
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = ctx.sub(a.entries[i], b.entries[i]);
  return r;
}

inline void mul_into(const FieldCtx& ctx, const FqMat& a, const FqMat& b, FqMat& out) {
  const unsigned n = a.n;
  out.n = n;
  out.entries.assign(std::size_t{n} * n, ctx.zero());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned l = 0; l < n; ++l) {
      const FqElem x = a.at(i, l);
      if (x.code == 0) continue;
      for (unsigned j = 0; j < n; ++j) out.at(i, j) = ctx.add(out.at(i, j), ctx.mul(x, b.at(l, j)));
    }
}

inline FqMat mul(const FieldCtx& ctx, const FqMat& a, const FqMat& b) {
  require(a.n == b.n, Errc::DimensionMismatch, "matrix sizes differ");
  FqMat r;
  mul_into(ctx, a, b, r);
  return r;
}

inline FqMat scale(const FieldCtx& ctx, FqElem c, const FqMat& a) {
  FqMat r(a.n);
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = ctx.mul(c, a.entries[i]);
  return r;
}

inline FqMat transpose(const FqMat& a) {
  FqMat r(a.n);
  for (unsigned i = 0; i < a.n; ++i)
    for (unsigned j = 0; j < a.n; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

inline FqMat frobenius(const FieldCtx& ctx, const FqMat& a, unsigned j) {
  FqMat r(a.n);
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = ctx.frobenius(a.entries[i], j);
  return r;
}

inline FqElem det(const FieldCtx& ctx, FqMat a) {
  const unsigned n = a.n;
  FqElem d = ctx.one();
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && a.at(piv, c).code == 0) ++piv;
    if (piv == n) return ctx.zero();
    if (piv != c) {
      for (unsigned j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      d = ctx.neg(d);
    }
    const FqElem pv = a.at(c, c);
    d = ctx.mul(d, pv);
    const FqElem pinv = ctx.inv(pv);
    for (unsigned r = c + 1; r < n; ++r) {
      const FqElem f = ctx.mul(a.at(r, c), pinv);
      if (f.code == 0) continue;
      for (unsigned j = c; j < n; ++j) a.at(r, j) = ctx.sub(a.at(r, j), ctx.mul(f, a.at(c, j)));
    }
  }
  return d;
}

inline bool is_invertible(const FieldCtx& ctx, const FqMat& a) { return det(ctx, a).code != 0; }

inline FqMat inverse(const FieldCtx& ctx, const FqMat& a) {
  const unsigned n = a.n;
  FqMat m = a, r = identity(ctx, n);
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && m.at(piv, c).code == 0) ++piv;
    require(piv < n, Errc::DivisionByZero, "singular matrix");
    for (unsigned j = 0; j < n; ++j) {
      std::swap(m.at(piv, j), m.at(c, j));
      std::swap(r.at(piv, j), r.at(c, j));
    }
    const FqElem pinv = ctx.inv(m.at(c, c));
    for (unsigned j = 0; j < n; ++j) {
      m.at(c, j) = ctx.mul(m.at(c, j), pinv);
      r.at(c, j) = ctx.mul(r.at(c, j), pinv);
    }
    for (unsigned row = 0; row < n; ++row) {
      if (row == c) continue;
      const FqElem f = m.at(row, c);
      if (f.code == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        m.at(row, j) = ctx.sub(m.at(row, j), ctx.mul(f, m.at(c, j)));
        r.at(row, j) = ctx.sub(r.at(row, j), ctx.mul(f, r.at(c, j)));
      }
    }
  }
  return r;
}

/// g * a * g^{-1}.
inline FqMat conjugate(const FieldCtx& ctx, const FqMat& g, const FqMat& a) {
  return mul(ctx, mul(ctx, g, a), inverse(ctx, g));
}

}  // namespace mat

/// Incremental row echelon form over a field. insert() reports whether the
/// vector was independent of the rows already held.
class Echelon {
 public:
  Echelon(FieldCtx ctx, std::size_t dim) : ctx_(std::move(ctx)), dim_(dim), pivot_row_(dim, -1) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == dim_; }

  bool insert(std::vector<FqElem> v) {
    require(v.size() == dim_, Errc::DimensionMismatch, "vector length differs from ambient dimension");
    reduce(v);
    std::size_t lead = 0;
    while (lead < dim_ && v[lead].code == 0) ++lead;
    if (lead == dim_) return false;
    const FqElem inv = ctx_.inv(v[lead]);
    for (std::size_t j = lead; j < dim_; ++j) v[j] = ctx_.mul(v[j], inv);
    pivot_row_[lead] = static_cast<int>(rows_.size());
    pivots_.push_back(lead);
    rows_.push_back(std::move(v));
    return true;
  }

  /// Reduces v against the held rows in place; v is in the span iff it becomes zero.
  void reduce(std::vector<FqElem>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t c = pivots_[i];
      const FqElem f = v[c];
      if (f.code == 0) continue;
      const auto& row = rows_[i];
      for (std::size_t j = c; j < dim_; ++j)
        if (row[j].code) v[j] = ctx_.sub(v[j], ctx_.mul(f, row[j]));
    }
  }

  bool contains(std::vector<FqElem> v) const {
    reduce(v);
    for (auto e : v)
      if (e.code) return false;
    return true;
  }

 private:
  FieldCtx ctx_;
  std::size_t dim_;
  std::vector<std::vector<FqElem>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<int> pivot_row_;
};

/// Rank of the span of equal-length vectors over ctx.
inline std::size_t span_dimension(const FieldCtx& ctx, const std::vector<std::vector<FqElem>>& vectors,
                                  std::optional<std::size_t> dim = std::nullopt) {
  const std::size_t d = dim ? *dim : (vectors.empty() ? 0 : vectors.front().size());
  Echelon e(ctx, d);
  for (const auto& v : vectors) {
    require(v.size() == d, Errc::DimensionMismatch, "vectors have different lengths");
    e.insert(v);
  }
  return e.rank();
}

struct GroupOrders {
  BigInt gl;
  BigInt pgl;
};

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i) and |PGL_n(F_q)| = |GL_n| / (q - 1).
inline GroupOrders group_orders(unsigned n, std::uint64_t q) {
  require(n >= 1, Errc::BadParams, "n must be >= 1");
  require(prime_power(q).has_value(), Errc::BadParams, std::to_string(q) + " is not a prime power");
  const BigInt qn = ipow(BigInt(q), n);
  BigInt gl = 1;
  for (unsigned i = 0; i < n; ++i) gl *= qn - ipow(BigInt(q), i);
  return {gl, gl / (q - 1)};
}

namespace detail {

/// Basis of the null space of the rows x cols system.
inline std::vector<std::vector<FqElem>> null_space(const FieldCtx& ctx, std::vector<std::vector<FqElem>> rows,
                                                   std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].code == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const FqElem inv = ctx.inv(rows[r][c]);
    for (auto& x : rows[r]) x = ctx.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].code == 0) continue;
      const FqElem f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = ctx.sub(rows[i][j], ctx.mul(f, rows[r][j]));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<FqElem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FqElem> v(cols, ctx.zero());
    v[free] = ctx.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = ctx.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Is there an invertible g with t2[i] * g = g * t1[i] for all i?
inline std::optional<bool> conjugate_by_intertwiner(const FieldCtx& ctx, const std::vector<FqMat>& t1,
                                                    const std::vector<FqMat>& t2, std::uint64_t cap) {
  const unsigned n = t1.empty() ? (t2.empty() ? 0 : t2[0].n) : t1[0].n;
  const std::size_t cols = std::size_t{n} * n;
  std::vector<std::vector<FqElem>> eqs;
  for (std::size_t i = 0; i < t1.size(); ++i) {
    const FqMat& x = t1[i];
    const FqMat& y = t2[i];
    for (unsigned r = 0; r < n; ++r)
      for (unsigned c = 0; c < n; ++c) {
        std::vector<FqElem> row(cols, ctx.zero());
        // (y g)_{rc} - (g x)_{rc}
        for (unsigned l = 0; l < n; ++l) {
          auto& a = row[std::size_t{l} * n + c];
          a = ctx.add(a, y.at(r, l));
          auto& b = row[std::size_t{r} * n + l];
          b = ctx.sub(b, x.at(l, c));
        }
        eqs.push_back(std::move(row));
      }
  }
  const auto basis = null_space(ctx, std::move(eqs), cols);
  const std::size_t d = basis.size();
  if (d == 0) return false;
  BigInt states = ipow(BigInt(ctx.q()), static_cast<unsigned>(d));
  if (states > cap) return std::nullopt;
  const auto total = static_cast<std::uint64_t>(states);
  std::vector<std::uint64_t> digits(d, 0);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t j = 0; j < d; ++j) {
      digits[j] = v % ctx.q();
      v /= ctx.q();
    }
    FqMat g(n);
    for (std::size_t j = 0; j < d; ++j) {
      if (!digits[j]) continue;
      for (std::size_t e = 0; e < cols; ++e)
        g.entries[e] = ctx.add(g.entries[e], ctx.mul(FqElem{digits[j]}, basis[j][e]));
    }
    if (mat::is_invertible(ctx, g)) return true;
  }
  return false;
}

/// Exhaustive sweep over GL_n(ctx).
inline bool conjugate_by_group_sweep(const FieldCtx& ctx, const std::vector<FqMat>& t1, const std::vector<FqMat>& t2) {
  const unsigned n = t1[0].n;
  const std::size_t cells = std::size_t{n} * n;
  const BigInt total_big = ipow(BigInt(ctx.q()), static_cast<unsigned>(cells));
  const auto total = static_cast<std::uint64_t>(total_big);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    FqMat g(n);
    std::uint64_t v = idx;
    for (std::size_t e = 0; e < cells; ++e) {
      g.entries[e] = FqElem{v % ctx.q()};
      v /= ctx.q();
    }
    if (!mat::is_invertible(ctx, g)) continue;
    bool all = true;
    for (std::size_t i = 0; i < t1.size() && all; ++i)
      all = mat::mul(ctx, t2[i], g) == mat::mul(ctx, g, t1[i]);
    if (all) return true;
  }
  return false;
}

}  // namespace detail

struct ConjugacyOptions {
  bool include_galois = false;
  /// F_q = F_{p^base_degree} is the field the Galois group fixes.
  unsigned base_degree = 1;
  std::uint64_t cap = 10'000;
};

/// True iff some automorphism x -> g sigma(x) g^{-1}, g in GL_n(ctx) and sigma a
/// power of the Frobenius over F_{p^base_degree} (identity unless
/// include_galois), maps t1 to t2 coordinatewise. Solves the linear intertwiner
/// system g sigma(t1_i) = t2_i g and searches its solution space for an
/// invertible element; falls back to sweeping GL_n when the solution space is
/// larger than the cap. TooLarge if both exceed the cap.
inline bool are_conjugate_tuples(const FieldCtx& ctx, const std::vector<FqMat>& t1, const std::vector<FqMat>& t2,
                                 const ConjugacyOptions& opt = {}) {
  require(t1.size() == t2.size(), Errc::DimensionMismatch, "tuples differ in length");
  if (t1.empty()) return true;
  const unsigned n = t1[0].n;
  require(n >= 1 && n <= 8, Errc::BadParams, "matrix size must be in 1..8");
  for (std::size_t i = 0; i < t1.size(); ++i)
    require(t1[i].n == n && t2[i].n == n, Errc::DimensionMismatch, "matrix sizes differ");
  require(opt.base_degree >= 1 && ctx.s() % opt.base_degree == 0, Errc::BadParams,
          "base degree must divide the extension degree");
  const unsigned galois = opt.include_galois ? ctx.s() / opt.base_degree : 1;
  const BigInt gl = group_orders(n, ctx.q()).gl;
  for (unsigned j = 0; j < galois; ++j) {
    std::vector<FqMat> src;
    src.reserve(t1.size());
    for (const auto& m : t1) src.push_back(j == 0 ? m : mat::frobenius(ctx, m, j * opt.base_degree));
    if (auto r = detail::conjugate_by_intertwiner(ctx, src, t2, opt.cap)) {
      if (*r) return true;
      continue;
    }
    require(gl <= opt.cap, Errc::TooLarge, "conjugacy search exceeds cap (|GL| = " + gl.str() + ")");
    if (detail::conjugate_by_group_sweep(ctx, src, t2)) return true;
  }
  return false;
}

}  // namespace algen
