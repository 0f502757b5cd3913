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

// Generation of finite products of matrix algebras over finite fields:
// closure test, exhaustive counts, closed-form counts and the structural
// test via maximal subalgebras.

#include "algen/errors.hpp"
#include "algen/ffalg.hpp"
#include "algen/integer.hpp"
#include "algen/parallel.hpp"
#include "algen/primes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace algen {

/// One factor M_n(F_{q^s})^m of a product algebra (s = 1 on the integer side).
struct Block {
  unsigned n = 1;
  unsigned s = 1;
  unsigned m = 1;

  friend bool operator==(const Block&, const Block&) = default;
};

/// The ambient algebra prod_i M_{n_i}(F_{q^{s_i}})^{m_i} over F_q, or
/// prod_i M_{n_i}(Z)^{m_i} when no base field is attached.
class AlgebraShape {
 public:
  static AlgebraShape over_field(const FieldCtx& base, std::vector<Block> blocks) {
    AlgebraShape sh(std::move(blocks));
    sh.base_ = base;
    const unsigned t = base.s();
    for (const auto& b : sh.blocks_) {
      FieldCtx ext = b.s == 1 ? base : make_field(base.p(), t * b.s);
      FqElem theta = ext.zero();
      if (t > 1) theta = b.s == 1 ? FqElem{base.p()} : embed_base_generator(base, ext);
      sh.fields_.push_back(std::move(ext));
      sh.theta_.push_back(theta);
    }
    return sh;
  }

  static AlgebraShape over_integers(std::vector<Block> blocks) {
    for (const auto& b : blocks) require(b.s == 1, Errc::ShapeMismatch, "integer shapes have s = 1");
    return AlgebraShape(std::move(blocks));
  }

  /// M_n(F_q) or M_n(Z)^m, the common cases.
  static AlgebraShape matrix(const FieldCtx& base, unsigned n, unsigned s = 1, unsigned m = 1) {
    return over_field(base, {{n, s, m}});
  }
  static AlgebraShape integer_matrix(unsigned n, unsigned m = 1) { return over_integers({{n, 1, m}}); }

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  bool over_field() const noexcept { return base_.has_value(); }
  const FieldCtx& base() const {
    require(base_.has_value(), Errc::ShapeMismatch, "shape has no base field");
    return *base_;
  }
  /// Free rank over the base ring: sum m_i s_i n_i^2.
  std::size_t rank() const noexcept { return rank_; }
  /// Number of matrices making up one algebra element.
  std::size_t copies() const noexcept { return copy_block_.size(); }
  std::size_t block_of_copy(std::size_t c) const { return copy_block_[c]; }
  const FieldCtx& block_field(std::size_t b) const { return fields_.at(b); }
  /// Image of the polynomial generator of F_q inside the field of block b.
  FqElem base_generator_in_block(std::size_t b) const { return theta_.at(b); }

 private:
  explicit AlgebraShape(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    require(!blocks_.empty(), Errc::ShapeMismatch, "shape needs at least one block");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      const auto& b = blocks_[i];
      require(b.n >= 1 && b.s >= 1 && b.m >= 1, Errc::ShapeMismatch, "block parameters must be >= 1");
      for (std::size_t j = 0; j < i; ++j)
        require(!(blocks_[j].n == b.n && blocks_[j].s == b.s), Errc::ShapeMismatch,
                "blocks with equal (n, s) must be merged into one multiplicity");
      rank_ += std::size_t{b.m} * b.s * b.n * b.n;
      for (unsigned c = 0; c < b.m; ++c) copy_block_.push_back(i);
    }
  }

  static FqElem embed_base_generator(const FieldCtx& base, const FieldCtx& ext) {
    // Roots of the base modulus lie in the unique subfield of order q.
    const FqElem g = multiplicative_generator(ext);
    const FqElem h = ext.pow(g, BigInt((ext.q() - 1) / (base.q() - 1)));
    const auto& mu = base.modulus();
    std::optional<FqElem> best;
    FqElem x = ext.one();
    for (std::uint64_t j = 0; j + 1 < base.q(); ++j, x = ext.mul(x, h)) {
      FqElem acc = ext.zero();
      for (std::size_t i = mu.size(); i-- > 0;) acc = ext.add(ext.mul(acc, x), FqElem{mu[i]});
      if (acc.code == 0 && (!best || x < *best)) best = x;
    }
    require(best.has_value(), Errc::InternalMismatch, "base field does not embed");
    return *best;
  }

  std::vector<Block> blocks_;
  std::optional<FieldCtx> base_;
  std::vector<FieldCtx> fields_;
  std::vector<FqElem> theta_;
  std::vector<std::size_t> copy_block_;
  std::size_t rank_ = 0;
};

/// A k-tuple of algebra elements; each element is one matrix per block copy.
template <class Mat>
struct BasicGenTuple {
  std::vector<std::vector<Mat>> elements;

  std::size_t k() const noexcept { return elements.size(); }
  friend bool operator==(const BasicGenTuple&, const BasicGenTuple&) = default;
};

using AlgElem = std::vector<FqMat>;
using GenTuple = BasicGenTuple<FqMat>;

namespace detail {

inline void check_tuple(const AlgebraShape& shape, const GenTuple& t) {
  require(shape.over_field(), Errc::ShapeMismatch, "shape is not over a finite field");
  for (const auto& el : t.elements) {
    require(el.size() == shape.copies(), Errc::ShapeMismatch, "element has wrong number of matrices");
    for (std::size_t c = 0; c < el.size(); ++c) {
      const std::size_t b = shape.block_of_copy(c);
      require(el[c].n == shape.blocks()[b].n && el[c].entries.size() == std::size_t{el[c].n} * el[c].n,
              Errc::ShapeMismatch, "matrix size does not match its block");
      for (auto e : el[c].entries)
        require(shape.block_field(b).contains(e), Errc::ShapeMismatch, "entry outside the block field");
    }
  }
}

inline AlgElem identity_element(const AlgebraShape& shape) {
  AlgElem e;
  for (std::size_t c = 0; c < shape.copies(); ++c) {
    const std::size_t b = shape.block_of_copy(c);
    e.push_back(mat::identity(shape.block_field(b), shape.blocks()[b].n));
  }
  return e;
}

/// Coordinates of an element over the prime field, entry by entry.
inline void flatten_fp(const AlgebraShape& shape, const AlgElem& x, std::vector<FqElem>& out) {
  out.clear();
  const std::uint64_t p = shape.base().p();
  for (std::size_t c = 0; c < x.size(); ++c) {
    const unsigned u = shape.block_field(shape.block_of_copy(c)).s();
    for (auto e : x[c].entries) {
      std::uint64_t v = e.code;
      for (unsigned i = 0; i < u; ++i) {
        out.push_back(FqElem{v % p});
        v /= p;
      }
    }
  }
}

}  // namespace detail

/// Dimension over F_q of the unital F_q-subalgebra generated by t, computed by
/// breadth-first closure of {1} under left multiplication by the generators.
inline std::size_t generated_dimension(const AlgebraShape& shape, const GenTuple& t) {
  detail::check_tuple(shape, t);
  const FieldCtx& base = shape.base();
  const FieldCtx prime = base.s() == 1 && base.p() == base.q() ? base : make_field(base.p(), 1);
  const std::size_t dim_p = base.s() * shape.rank();

  // Over F_p the F_q-span of monomials is their F_p-span together with theta * monomials.
  std::vector<AlgElem> gens = t.elements;
  if (base.s() > 1) {
    AlgElem theta;
    for (std::size_t c = 0; c < shape.copies(); ++c) {
      const std::size_t b = shape.block_of_copy(c);
      theta.push_back(mat::scalar(shape.block_field(b), shape.blocks()[b].n, shape.base_generator_in_block(b)));
    }
    gens.push_back(std::move(theta));
  }

  Echelon ech(prime, dim_p);
  std::vector<FqElem> coords;
  std::vector<AlgElem> queue;
  AlgElem one = detail::identity_element(shape);
  detail::flatten_fp(shape, one, coords);
  ech.insert(coords);
  queue.push_back(std::move(one));
  AlgElem prod(shape.copies());
  for (std::size_t head = 0; head < queue.size() && !ech.full(); ++head) {
    for (const auto& g : gens) {
      for (std::size_t c = 0; c < shape.copies(); ++c)
        mat::mul_into(shape.block_field(shape.block_of_copy(c)), g[c], queue[head][c], prod[c]);
      detail::flatten_fp(shape, prod, coords);
      if (ech.insert(coords)) {
        queue.push_back(prod);
        if (ech.full()) break;
      }
    }
  }
  return ech.rank() / base.s();
}

/// Whether t generates the whole algebra as a unital F_q-algebra.
inline bool generates(const AlgebraShape& shape, const GenTuple& t) {
  return generated_dimension(shape, t) == shape.rank();
}

/// Generation of M_n(F_{q^s})^m from its m coordinate tuples: each must
/// generate M_n(F_{q^s}) and no two may be related by an F_q-automorphism.
inline bool generates_power(const FieldCtx& base, unsigned n, unsigned s,
                            const std::vector<std::vector<FqMat>>& coordinate_tuples,
                            std::uint64_t conjugacy_cap = 10'000) {
  require(!coordinate_tuples.empty(), Errc::BadParams, "need m >= 1 coordinate tuples");
  const auto shape = AlgebraShape::matrix(base, n, s, 1);
  const FieldCtx& field = shape.block_field(0);
  for (const auto& ct : coordinate_tuples) {
    GenTuple t;
    for (const auto& a : ct) t.elements.push_back({a});
    if (!generates(shape, t)) return false;
  }
  const ConjugacyOptions opt{s > 1, base.s(), conjugacy_cap};
  for (std::size_t i = 0; i < coordinate_tuples.size(); ++i)
    for (std::size_t j = i + 1; j < coordinate_tuples.size(); ++j)
      if (are_conjugate_tuples(field, coordinate_tuples[j], coordinate_tuples[i], opt)) return false;
  return true;
}

struct CountParams {
  unsigned k = 2;
  unsigned n = 2;
  std::uint64_t q = 2;
  unsigned s = 1;
  unsigned m = 1;
};

struct CountReport {
  enum class Method { Brute, Formula };
  Method method = Method::Formula;
  BigInt value;
  CountParams params;
};

inline const char* to_string(CountReport::Method m) {
  return m == CountReport::Method::Brute ? "brute" : "formula";
}

namespace detail {

inline FieldCtx field_of_order(std::uint64_t q) {
  const auto pp = prime_power(q);
  require(pp.has_value(), Errc::BadParams, std::to_string(q) + " is not a prime power");
  return make_field(pp->first, pp->second);
}

}  // namespace detail

/// Exhaustive count of generating k-tuples of (M_n(F_{q^s}))^m as an
/// F_q-algebra. The state space (q^s)^(k m n^2) must not exceed `cap`.
inline CountReport brute_count(const CountParams& prm, unsigned threads = 1, std::uint64_t cap = enum_cap()) {
  require(prm.n >= 1 && prm.n <= 8, Errc::BadParams, "n must be in 1..8");
  require(prm.s >= 1 && prm.m >= 1, Errc::BadParams, "s and m must be >= 1");
  const FieldCtx base = detail::field_of_order(prm.q);
  const auto shape = AlgebraShape::matrix(base, prm.n, prm.s, 1);
  const FieldCtx& field = shape.block_field(0);
  const std::uint64_t radix = field.q();
  const std::size_t cells = std::size_t{prm.n} * prm.n;
  const std::size_t positions = std::size_t{prm.k} * prm.m * cells;
  const BigInt states_big = ipow(BigInt(radix), static_cast<unsigned>(positions));
  require(states_big <= cap, Errc::TooLarge, "enumeration of " + states_big.str() + " states exceeds cap");
  const auto states = static_cast<std::uint64_t>(states_big);

  const std::uint64_t shards = std::min<std::uint64_t>(states, 256);
  auto body = [&](std::uint64_t shard) -> BigInt {
    const std::uint64_t lo = states / shards * shard + std::min(shard, states % shards);
    const std::uint64_t hi = lo + states / shards + (shard < states % shards ? 1 : 0);
    std::vector<std::uint64_t> digits(positions, 0);
    std::uint64_t v = lo;
    for (std::size_t i = 0; i < positions; ++i) {
      digits[i] = v % radix;
      v /= radix;
    }
    std::uint64_t hits = 0;
    GenTuple t;
    t.elements.assign(prm.k, AlgElem(1, FqMat(prm.n)));
    std::vector<std::vector<FqMat>> coords(prm.m, std::vector<FqMat>(prm.k, FqMat(prm.n)));
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      // positions are ordered (element, copy, cell)
      std::size_t pos = 0;
      for (unsigned e = 0; e < prm.k; ++e)
        for (unsigned c = 0; c < prm.m; ++c)
          for (std::size_t x = 0; x < cells; ++x, ++pos) coords[c][e].entries[x] = FqElem{digits[pos]};
      bool ok;
      if (prm.m == 1) {
        for (unsigned e = 0; e < prm.k; ++e) t.elements[e][0] = coords[0][e];
        ok = generates(shape, t);
      } else {
        ok = generates_power(base, prm.n, prm.s, coords);
      }
      if (ok) ++hits;
      for (std::size_t i = 0; i < positions; ++i) {
        if (++digits[i] < radix) break;
        digits[i] = 0;
      }
    }
    return BigInt(hits);
  };
  BigInt total = sharded_reduce<BigInt>(shards, threads, BigInt(0), body, [](BigInt a, BigInt b) { return a + b; });
  return {CountReport::Method::Brute, total, prm};
}

/// g_{m,n}(q) for n in {2, 3} from the closed forms.
inline BigInt g_closed_form(unsigned m, unsigned n, std::uint64_t q) {
  require(m >= 1, Errc::BadParams, "m must be >= 1");
  require(prime_power(q).has_value(), Errc::BadParams, std::to_string(q) + " is not a prime power");
  require(n == 2 || n == 3, Errc::UnsupportedSize, "closed forms exist only for n = 2, 3");
  if (m == 1) return 0;  // factor q^{m-1} - 1 vanishes
  const BigInt Q(q);
  auto P = [&](unsigned e) { return ipow(Q, e); };
  if (n == 2) return P(2 * m + 1) * (P(m - 1) - 1) * (P(m) - 1);
  return P(3 * m + 4) * (P(m - 1) - 1) * (P(m - 1) + 1) * (P(m) - 1) *
         (P(3 * m - 2) + P(2 * m - 2) - P(m) - 2 * P(m - 1) - P(m - 2) + Q + 1);
}

namespace detail {

inline BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  require(b != 0 && a % b == 0, Errc::InternalMismatch, std::string("inexact division in ") + what);
  return a / b;
}

/// The orbit-count closed forms stated directly (as opposed to g / |PGL|).
inline BigInt gen_closed_direct(unsigned m, unsigned n, std::uint64_t q) {
  const BigInt Q(q);
  auto P = [&](unsigned e) { return ipow(Q, e); };
  if (n == 2) return exact_div(P(2 * m - 1) * (P(m) - 1) * (P(m) - Q), Q * Q - 1, "gen_{m,2}");
  const BigInt num = P(3 * m - 3) * (P(m) - 1) * (P(m) - Q) * (P(m) + Q) *
                     (P(3 * m) - P(m + 2) + P(2 * m) - 2 * P(m + 1) - P(m) + P(3) + P(2));
  return exact_div(num, (Q - 1) * (Q - 1) * (Q + 1) * (Q * Q + Q + 1), "gen_{m,3}");
}

inline BigInt gen_closed_q2(unsigned m, unsigned n) {
  auto P = [](unsigned e) { return ipow(BigInt(2), e); };
  if (n == 2) return exact_div(P(2 * m - 1) * (P(m) - 2) * (P(m) - 1), BigInt(3), "gen_m(M_2(Z))");
  return exact_div((P(m) - 2) * (P(m) - 1) * (P(m) + 2) * (P(3 * m) + P(2 * m) - P(m + 3) - P(m) + 12) * P(3 * m - 3),
                   BigInt(21), "gen_m(M_3(Z))");
}

}  // namespace detail

/// gen_{m,n}(q) = g_{m,n}(q) / |PGL_n(F_q)|, cross-checked against the
/// direct orbit-count formulas (and their q = 2 specialisations).
inline BigInt gen_count(unsigned m, unsigned n, std::uint64_t q) {
  const BigInt g = g_closed_form(m, n, q);
  const BigInt pgl = group_orders(n, q).pgl;
  require(g % pgl == 0, Errc::InternalMismatch, "|PGL| does not divide g");
  const BigInt r = g / pgl;
  require(r == detail::gen_closed_direct(m, n, q), Errc::InternalMismatch, "orbit-count formula mismatch");
  if (q == 2) require(r == detail::gen_closed_q2(m, n), Errc::InternalMismatch, "q = 2 formula mismatch");
  return r;
}

/// |Gen_k((M_n(F_{q^s}))^m, F_q)| = prod_{i<m} (g - i s |PGL_n(F_{q^s})|), with
/// g from the closed form when s = 1 and n in {2, 3}, else by enumeration.
inline BigInt count_gen_power_formula(const CountParams& prm, unsigned threads = 1) {
  require(prm.m >= 1 && prm.s >= 1, Errc::BadParams, "m and s must be >= 1");
  BigInt g;
  if (prm.s == 1 && (prm.n == 2 || prm.n == 3)) {
    g = g_closed_form(prm.k, prm.n, prm.q);
  } else {
    try {
      g = brute_count({prm.k, prm.n, prm.q, prm.s, 1}, threads).value;
    } catch (const Error& e) {
      if (e.code() == Errc::TooLarge) fail(Errc::UnsupportedSize, "no source for g at these parameters");
      throw;
    }
  }
  const BigInt Qs = ipow(BigInt(prm.q), prm.s);
  require(Qs <= std::numeric_limits<std::uint64_t>::max(), Errc::BadParams, "q^s too large");
  const BigInt orbit = BigInt(prm.s) * group_orders(prm.n, static_cast<std::uint64_t>(Qs)).pgl;
  BigInt prod = 1;
  for (unsigned i = 0; i < prm.m; ++i) {
    const BigInt f = g - BigInt(i) * orbit;
    if (f <= 0) return 0;
    prod *= f;
  }
  return prod;
}

/// Number of m-tuples spanning F_q^n: prod_{i<n} (q^m - q^i).
inline BigInt alpha(unsigned m, unsigned n, std::uint64_t q) {
  BigInt r = 1;
  const BigInt qm = ipow(BigInt(q), m);
  for (unsigned i = 0; i < n; ++i) r *= qm - ipow(BigInt(q), i);
  return r;
}

/// q^{m n^2} - ceil(2^{(n+6)/2}) q^{n^2 m - (m-1)(n-1)}; may be negative.
inline BigInt lower_bound(unsigned m, unsigned n, std::uint64_t q) {
  require(m >= 1 && n >= 1, Errc::BadParams, "m, n must be >= 1");
  const BigInt c = isqrt_ceil(ipow(BigInt(2), n + 6));
  const unsigned top = m * n * n;
  return ipow(BigInt(q), top) - c * ipow(BigInt(q), top - (m - 1) * (n - 1));
}

struct TwoGenerators {
  FieldCtx field;  // F_{q^s}
  FqMat a;
  FqMat b;
};

/// (u E_11, E_1n + sum_i E_{i+1,i}) over F_{q^s}, u a multiplicative generator;
/// verified to generate M_n(F_{q^s}) as an F_q-algebra before returning.
inline TwoGenerators two_generators_ext(unsigned n, std::uint64_t q, unsigned s) {
  require(n >= 1 && n <= 8 && s >= 1, Errc::BadParams, "need 1 <= n <= 8 and s >= 1");
  const FieldCtx base = detail::field_of_order(q);
  const auto shape = AlgebraShape::matrix(base, n, s, 1);
  const FieldCtx& f = shape.block_field(0);
  const FqElem u = multiplicative_generator(f);
  FqMat a(n), b(n);
  a.at(0, 0) = u;
  b.at(0, n - 1) = f.add(b.at(0, n - 1), f.one());
  for (unsigned i = 1; i < n; ++i) b.at(i, i - 1) = f.add(b.at(i, i - 1), f.one());
  GenTuple t{{{a}, {b}}};
  require(generates(shape, t), Errc::CertificationFailed, "constructed pair does not generate");
  return {f, std::move(a), std::move(b)};
}

namespace detail {

/// All nonzero vectors of F_q^n normalised so the first nonzero entry is 1.
inline std::vector<std::vector<FqElem>> projective_points(const FieldCtx& ctx, unsigned n) {
  std::vector<std::vector<FqElem>> pts;
  const auto total = static_cast<std::uint64_t>(ipow(BigInt(ctx.q()), n));
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::vector<FqElem> v(n);
    std::uint64_t x = idx;
    for (unsigned i = 0; i < n; ++i) {
      v[i] = FqElem{x % ctx.q()};
      x /= ctx.q();
    }
    unsigned lead = 0;
    while (v[lead].code == 0) ++lead;
    if (v[lead] == ctx.one()) pts.push_back(std::move(v));
  }
  return pts;
}

inline bool has_common_eigenline(const FieldCtx& ctx, const std::vector<FqMat>& t,
                                 const std::vector<std::vector<FqElem>>& lines) {
  const unsigned n = t.empty() ? 0 : t[0].n;
  for (const auto& v : lines) {
    bool invariant = true;
    for (const auto& a : t) {
      std::vector<FqElem> av(n, ctx.zero());
      for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) av[r] = ctx.add(av[r], ctx.mul(a.at(r, c), v[c]));
      // av is parallel to v iff all 2x2 minors of [v | av] vanish
      for (unsigned i = 0; i < n && invariant; ++i)
        for (unsigned j = i + 1; j < n && invariant; ++j)
          invariant = ctx.sub(ctx.mul(v[i], av[j]), ctx.mul(v[j], av[i])).code == 0;
      if (!invariant) break;
    }
    if (invariant) return true;
  }
  return false;
}

}  // namespace detail

/// Generation of M_n(F_q), n in {2, 3}, decided from the maximal subalgebras:
/// true iff the tuple has no common invariant line, no common invariant
/// hyperplane (a common line of the transposes) and two non-commuting members.
inline bool generates_structural(const FieldCtx& ctx, const std::vector<FqMat>& t, unsigned n) {
  require(n == 2 || n == 3, Errc::UnsupportedSize, "structural test covers n = 2, 3 only");
  for (const auto& a : t) require(a.n == n, Errc::ShapeMismatch, "matrix size differs from n");
  bool commutative = true;
  for (std::size_t i = 0; i < t.size() && commutative; ++i)
    for (std::size_t j = i + 1; j < t.size() && commutative; ++j)
      commutative = mat::mul(ctx, t[i], t[j]) == mat::mul(ctx, t[j], t[i]);
  if (commutative) return false;
  const auto lines = detail::projective_points(ctx, n);
  if (detail::has_common_eigenline(ctx, t, lines)) return false;
  std::vector<FqMat> tr;
  for (const auto& a : t) tr.push_back(mat::transpose(a));
  return !detail::has_common_eigenline(ctx, tr, lines);
}

/// Number of F_q-subalgebras of M_n(F_q) isomorphic to M_{n/s}(F_{q^s}):
/// s^{-1} prod_{1 <= i < n, s does not divide i} (q^n - q^i).
inline BigInt count_field_type_subalgebras(unsigned n, unsigned s, std::uint64_t q) {
  require(s >= 2 && is_prime_u64(s) && n % s == 0, Errc::BadParams, "s must be a prime divisor of n");
  require(prime_power(q).has_value(), Errc::BadParams, std::to_string(q) + " is not a prime power");
  const BigInt qn = ipow(BigInt(q), n);
  BigInt prod = 1;
  for (unsigned i = 1; i < n; ++i)
    if (i % s) prod *= qn - ipow(BigInt(q), i);
  require(prod % s == 0, Errc::InternalMismatch, "count not divisible by s");
  return prod / s;
}

}  // namespace algen
