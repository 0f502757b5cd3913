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

// Generation over Z: lattice closure in Hermite normal form, index and bad
// primes, the 2x2 commutator criterion, Z^n module generation via Smith
// normal form, and the {0,1}-matrix constructions.

#include "algen/errors.hpp"
#include "algen/ffalg.hpp"
#include "algen/genff.hpp"
#include "algen/integer.hpp"
#include "algen/parallel.hpp"
#include "algen/primes.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace algen {

/// n x n integer matrix, row-major.
template <class Int>
struct IntMat {
  unsigned n = 0;
  std::vector<Int> entries;

  IntMat() = default;
  explicit IntMat(unsigned size) : n(size), entries(std::size_t{size} * size, Int(0)) {}
  IntMat(unsigned size, std::vector<Int> e) : n(size), entries(std::move(e)) {
    require(entries.size() == std::size_t{n} * n, Errc::DimensionMismatch, "entries must have n^2 values");
  }

  Int& at(unsigned r, unsigned c) { return entries[std::size_t{r} * n + c]; }
  const Int& at(unsigned r, unsigned c) const { return entries[std::size_t{r} * n + c]; }

  friend bool operator==(const IntMat&, const IntMat&) = default;
};

using ZMat = IntMat<BigInt>;
using ZGenTuple = BasicGenTuple<ZMat>;
using AlgElemZ = std::vector<ZMat>;

inline ZMat zmat(unsigned n, std::initializer_list<long long> vals) {
  std::vector<BigInt> e;
  for (auto v : vals) e.emplace_back(v);
  return ZMat(n, std::move(e));
}

namespace zmat_ops {

template <class Int>
IntMat<Int> identity(unsigned n) {
  IntMat<Int> m(n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = Int(1);
  return m;
}

template <class Int>
IntMat<Int> mul(const IntMat<Int>& a, const IntMat<Int>& b) {
  require(a.n == b.n, Errc::DimensionMismatch, "matrix sizes differ");
  IntMat<Int> r(a.n);
  for (unsigned i = 0; i < a.n; ++i)
    for (unsigned l = 0; l < a.n; ++l) {
      if (is_zero(a.at(i, l))) continue;
      for (unsigned j = 0; j < a.n; ++j) r.at(i, j) = r.at(i, j) + a.at(i, l) * b.at(l, j);
    }
  return r;
}

template <class Int>
IntMat<Int> sub(const IntMat<Int>& a, const IntMat<Int>& b) {
  IntMat<Int> r(a.n);
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = a.entries[i] - b.entries[i];
  return r;
}

template <class Int>
Int trace(const IntMat<Int>& a) {
  Int t(0);
  for (unsigned i = 0; i < a.n; ++i) t = t + a.at(i, i);
  return t;
}

inline BigInt det2(const ZMat& a) {
  require(a.n == 2, Errc::UnsupportedSize, "expected a 2x2 matrix");
  return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
}

template <class To, class From>
IntMat<To> convert(const IntMat<From>& m) {
  IntMat<To> r(m.n);
  for (std::size_t i = 0; i < m.entries.size(); ++i) r.entries[i] = from_big<To>(to_big(m.entries[i]));
  return r;
}

/// Entrywise reduction into F_p (p prime, ctx prime field).
inline FqMat reduce_mod(const FieldCtx& ctx, const ZMat& m) {
  FqMat r(m.n);
  for (std::size_t i = 0; i < m.entries.size(); ++i) r.entries[i] = ctx.from_int(m.entries[i]);
  return r;
}

}  // namespace zmat_ops

/// A sublattice of Z^D held as its canonical Hermite normal form: rows with
/// strictly increasing pivot columns, positive pivots, and every entry above a
/// pivot reduced into [0, pivot).
template <class Int>
class Lattice {
 public:
  explicit Lattice(std::size_t dim = 0) : dim_(dim), row_at_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rank_; }
  bool full_rank() const noexcept { return rank_ == dim_; }

  /// Product of the pivots when the rank is full; 0 otherwise.
  BigInt index() const {
    if (!full_rank()) return 0;
    BigInt d = 1;
    for (std::size_t j = 0; j < dim_; ++j) d *= to_big(row_at_[j][j]);
    return d;
  }

  /// HNF rows in pivot order.
  std::vector<std::vector<Int>> basis() const {
    std::vector<std::vector<Int>> b;
    for (const auto& r : row_at_)
      if (!r.empty()) b.push_back(r);
    return b;
  }

  /// Adds v to the generating set; returns whether the lattice grew.
  bool insert(std::vector<Int> v) {
    require(v.size() == dim_, Errc::DimensionMismatch, "vector length differs from lattice dimension");
    std::optional<Int> modulus;
    if (full_rank()) modulus = from_big<Int>(index());
    if (modulus)
      for (auto& x : v) x = floor_mod(x, *modulus);
    bool changed = false;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(v[j])) continue;
      auto& row = row_at_[j];
      if (row.empty()) {
        if (v[j] < Int(0))
          for (auto& x : v) x = -x;
        row = std::move(v);
        ++rank_;
        changed = true;
        break;
      }
      const Int piv = row[j];
      const Int a = v[j];
      if (is_zero(Int(a % piv))) {
        const Int f = a / piv;
        for (std::size_t c = j; c < dim_; ++c) v[c] = v[c] - f * row[c];
      } else {
        auto [g, x, y] = ext_gcd(piv, a);
        const Int rp = a / g, vp = piv / g;
        for (std::size_t c = j; c < dim_; ++c) {
          const Int nr = x * row[c] + y * v[c];
          v[c] = rp * row[c] - vp * v[c];
          row[c] = nr;
        }
        changed = true;
      }
      if (modulus)
        for (std::size_t c = j + 1; c < dim_; ++c) v[c] = floor_mod(v[c], *modulus);
    }
    if (changed) normalize();
    return changed;
  }

  /// Exact membership: back-substitution against the triangular basis.
  bool contains(std::vector<Int> v) const {
    require(v.size() == dim_, Errc::DimensionMismatch, "vector length differs from lattice dimension");
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(v[j])) continue;
      const auto& row = row_at_[j];
      if (row.empty() || !is_zero(Int(v[j] % row[j]))) return false;
      const Int f = v[j] / row[j];
      for (std::size_t c = j; c < dim_; ++c) v[c] = v[c] - f * row[c];
    }
    return true;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.row_at_ == b.row_at_;
  }

 private:
  void normalize() {
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto& pr = row_at_[j];
      if (pr.empty()) continue;
      const Int piv = pr[j];
      for (std::size_t h = 0; h < j; ++h) {
        auto& row = row_at_[h];
        if (row.empty()) continue;
        const Int f = floor_div(row[j], piv);
        if (is_zero(f)) continue;
        for (std::size_t c = j; c < dim_; ++c) row[c] = row[c] - f * pr[c];
      }
    }
  }

  std::size_t dim_;
  std::size_t rank_ = 0;
  std::vector<std::vector<Int>> row_at_;  // indexed by pivot column; empty = no pivot
};

template <class Int>
Lattice<BigInt> to_big_lattice(const Lattice<Int>& l) {
  Lattice<BigInt> out(l.dim());
  for (const auto& r : l.basis()) {
    std::vector<BigInt> b;
    for (const auto& x : r) b.push_back(to_big(x));
    out.insert(std::move(b));
  }
  return out;
}

/// Canonical HNF of the row span of `rows`.
inline Lattice<BigInt> hnf(const std::vector<std::vector<BigInt>>& rows, std::optional<std::size_t> dim = std::nullopt) {
  const std::size_t d = dim ? *dim : (rows.empty() ? 0 : rows.front().size());
  Lattice<BigInt> l(d);
  for (const auto& r : rows) l.insert(r);
  return l;
}

namespace detail {

inline void check_ztuple(const AlgebraShape& shape, const ZGenTuple& t) {
  require(!shape.over_field(), Errc::ShapeMismatch, "shape is not over Z");
  for (const auto& el : t.elements) {
    require(el.size() == shape.copies(), Errc::ShapeMismatch, "element has wrong number of matrices");
    for (std::size_t c = 0; c < el.size(); ++c)
      require(el[c].n == shape.blocks()[shape.block_of_copy(c)].n &&
                  el[c].entries.size() == std::size_t{el[c].n} * el[c].n,
              Errc::ShapeMismatch, "matrix size does not match its block");
  }
}

/// Left multiplication of a flattened algebra element by g.
template <class Int>
void left_multiply(const std::vector<IntMat<Int>>& g, const std::vector<Int>& v, std::vector<Int>& out) {
  out.assign(v.size(), Int(0));
  std::size_t off = 0;
  for (const auto& gm : g) {
    const unsigned n = gm.n;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned l = 0; l < n; ++l) {
        const Int& x = gm.at(i, l);
        if (is_zero(x)) continue;
        for (unsigned j = 0; j < n; ++j) {
          const Int& y = v[off + std::size_t{l} * n + j];
          if (!is_zero(y)) out[off + std::size_t{i} * n + j] = out[off + std::size_t{i} * n + j] + x * y;
        }
      }
    off += std::size_t{n} * n;
  }
}

template <class Int>
Lattice<Int> closure_lattice_impl(const AlgebraShape& shape, const std::vector<std::vector<IntMat<Int>>>& gens) {
  Lattice<Int> lat(shape.rank());
  std::vector<Int> one;
  for (std::size_t c = 0; c < shape.copies(); ++c) {
    const unsigned n = shape.blocks()[shape.block_of_copy(c)].n;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) one.push_back(Int(i == j ? 1 : 0));
  }
  lat.insert(std::move(one));
  std::vector<Int> prod;
  for (bool changed = true; changed;) {
    changed = false;
    const auto basis = lat.basis();
    for (const auto& b : basis)
      for (const auto& g : gens) {
        left_multiply(g, b, prod);
        if (lat.insert(prod)) changed = true;
      }
  }
  return lat;
}

}  // namespace detail

/// HNF of the Z-span of all monomials in t (including 1). Iterates "insert
/// generator * basis row" until a full round leaves the basis unchanged.
/// Runs in checked 64-bit arithmetic and redoes the work in BigInt on overflow.
inline Lattice<BigInt> closure_lattice(const AlgebraShape& shape, const ZGenTuple& t) {
  detail::check_ztuple(shape, t);
  try {
    std::vector<std::vector<IntMat<Checked64>>> gens;
    for (const auto& el : t.elements) {
      std::vector<IntMat<Checked64>> e;
      for (const auto& m : el) e.push_back(zmat_ops::convert<Checked64>(m));
      gens.push_back(std::move(e));
    }
    return to_big_lattice(detail::closure_lattice_impl(shape, gens));
  } catch (const Overflow&) {
    return detail::closure_lattice_impl(shape, t.elements);
  }
}

struct ZGenReport {
  bool generates = false;
  BigInt index;                  // 0 when the closure is rank-deficient
  std::vector<BigInt> bad_primes;  // primes dividing a nonzero index
};

/// Generation of a Z-algebra: the closure lattice must be all of Z^D (index
/// 1). Bad primes are the prime factors of the index; factorisation can be
/// skipped when only the verdict is needed.
inline ZGenReport generates_Z(const AlgebraShape& shape, const ZGenTuple& t, bool factor_index = true) {
  const auto lat = closure_lattice(shape, t);
  ZGenReport r;
  r.index = lat.index();
  r.generates = r.index == 1;
  if (factor_index && r.index > 1) r.bad_primes = prime_factors(r.index);
  return r;
}

/// Two matrices generate M_2(Z) iff det(AB - BA) = +-1.
inline bool det_commutator_test(const ZMat& a, const ZMat& b) {
  require(a.n == 2 && b.n == 2, Errc::UnsupportedSize, "commutator test is for 2x2 matrices");
  const BigInt d = zmat_ops::det2(zmat_ops::sub(zmat_ops::mul(a, b), zmat_ops::mul(b, a)));
  return d == 1 || d == -1;
}

/// Invariant factors (nonzero diagonal of the Smith normal form) of an
/// integer matrix given by rows.
inline std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // pick the smallest nonzero entry of the trailing submatrix as pivot
    auto find_pivot = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (!best || abs(a[i][j]) < abs(a[best->first][best->second]))) best = {i, j};
      return best;
    };
    auto piv = find_pivot();
    if (!piv) break;
    for (;;) {
      std::swap(a[t], a[piv->first]);
      for (auto& r : a) std::swap(r[t], r[piv->second]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const BigInt f = a[i][t] / a[t][t];
        if (f != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const BigInt f = a[t][j] / a[t][t];
        if (f != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) {
        // the pivot must divide the rest of the trailing block
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              bad_row = i;
              break;
            }
        if (!bad_row) break;
        for (std::size_t j = t; j < cols; ++j) a[t][j] += a[*bad_row][j];
      }
      piv = find_pivot();
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

/// Whether the vectors generate Z^n as a module: n invariant factors, all 1.
inline bool generates_Zn_module(const std::vector<std::vector<BigInt>>& vectors, std::size_t n) {
  for (const auto& v : vectors) require(v.size() == n, Errc::DimensionMismatch, "vectors must have length n");
  if (n == 0) return true;
  const auto inv = smith_invariants(vectors);
  return inv.size() == n && std::all_of(inv.begin(), inv.end(), [](const BigInt& d) { return d == 1; });
}

/// (tr X, det X, tr Y, det Y, tr XY) for 2x2 matrices.
inline std::array<BigInt, 5> conj_invariant(const ZMat& x, const ZMat& y) {
  require(x.n == 2 && y.n == 2, Errc::UnsupportedSize, "conjugacy invariant is for 2x2 matrices");
  return {zmat_ops::trace(x), zmat_ops::det2(x), zmat_ops::trace(y), zmat_ops::det2(y),
          zmat_ops::trace(zmat_ops::mul(x, y))};
}

namespace detail {

/// {0,1} matrix from the low n^2 bits of `bits`, most significant bit first
/// in row-major order, so numeric order is lexicographic order of entries.
inline ZMat zero_one_matrix(unsigned n, std::uint32_t bits) {
  ZMat m(n);
  const unsigned cells = n * n;
  for (unsigned i = 0; i < cells; ++i) m.entries[i] = (bits >> (cells - 1 - i)) & 1u;
  return m;
}

inline FqMat zero_one_matrix_f2(unsigned n, std::uint32_t bits) {
  FqMat m(n);
  const unsigned cells = n * n;
  for (unsigned i = 0; i < cells; ++i) m.entries[i] = FqElem{(bits >> (cells - 1 - i)) & 1u};
  return m;
}

inline std::uint32_t bits_of(const FqMat& m) {
  std::uint32_t b = 0;
  for (auto e : m.entries) b = (b << 1) | static_cast<std::uint32_t>(e.code);
  return b;
}

}  // namespace detail

struct M2Z16Construction {
  ZGenTuple tuple;                                         // (x, y) in (M_2(Z)^16)^2
  std::vector<std::pair<std::uint32_t, std::uint32_t>> representatives;  // orbit minima, ascending
  std::uint64_t generating_pairs_mod2 = 0;
  ZGenReport certificate;
};

/// Two generators of M_2(Z)^16 assembled from one {0,1} pair per orbit of
/// Aut(M_2(F_2)) = PGL_2(F_2) on the generating pairs of M_2(F_2); each orbit
/// contributes its lexicographically smallest pair. Certified over Z.
inline M2Z16Construction construct_M2Z16() {
  const FieldCtx f2 = make_field(2, 1);
  const auto shape2 = AlgebraShape::matrix(f2, 2);
  std::vector<FqMat> group;
  for (std::uint32_t g = 0; g < 16; ++g) {
    auto m = detail::zero_one_matrix_f2(2, g);
    if (mat::is_invertible(f2, m)) group.push_back(std::move(m));
  }
  M2Z16Construction out;
  std::vector<bool> seen(1u << 8, false);
  for (std::uint32_t code = 0; code < (1u << 8); ++code) {
    const std::uint32_t ab = code >> 4, bb = code & 15u;
    const FqMat a = detail::zero_one_matrix_f2(2, ab), b = detail::zero_one_matrix_f2(2, bb);
    if (!generates(shape2, GenTuple{{{a}, {b}}})) continue;
    ++out.generating_pairs_mod2;
    if (seen[code]) continue;
    out.representatives.emplace_back(ab, bb);
    for (const auto& g : group) {
      const auto ga = detail::bits_of(mat::conjugate(f2, g, a));
      const auto gb = detail::bits_of(mat::conjugate(f2, g, b));
      seen[(ga << 4) | gb] = true;
    }
  }
  std::vector<ZMat> x, y;
  for (const auto& [ab, bb] : out.representatives) {
    x.push_back(detail::zero_one_matrix(2, ab));
    y.push_back(detail::zero_one_matrix(2, bb));
  }
  out.tuple.elements = {std::move(x), std::move(y)};
  const auto shape = AlgebraShape::integer_matrix(2, static_cast<unsigned>(out.representatives.size()));
  out.certificate = generates_Z(shape, out.tuple);
  require(out.certificate.generates, Errc::CertificationFailed,
          "assembled pair has index " + out.certificate.index.str());
  return out;
}

struct CensusFailure {
  ZMat a;
  ZMat b;
  BigInt index;
};

struct CensusResult {
  BigInt gen_mod2;
  BigInt fail_over_Z;
  std::vector<CensusFailure> failures;  // in enumeration order
};

/// Over all pairs of n x n {0,1} matrices: how many generate M_n(F_2), and how
/// many of those fail to generate M_n(Z).
inline CensusResult zero_one_census(unsigned n, unsigned threads = 1) {
  require(n == 2 || n == 3, Errc::UnsupportedSize, "census covers n = 2, 3");
  const FieldCtx f2 = make_field(2, 1);
  const auto shape2 = AlgebraShape::matrix(f2, n);
  const auto shapez = AlgebraShape::integer_matrix(n);
  const unsigned cells = n * n;
  const std::uint64_t total = std::uint64_t{1} << (2 * cells);
  const std::uint64_t shards = 64;
  auto body = [&](std::uint64_t shard) {
    CensusResult r;
    const std::uint64_t span = total / shards;
    for (std::uint64_t code = shard * span; code < (shard + 1) * span; ++code) {
      const auto ab = static_cast<std::uint32_t>(code >> cells);
      const auto bb = static_cast<std::uint32_t>(code & ((1u << cells) - 1));
      if (!generates(shape2, GenTuple{{{detail::zero_one_matrix_f2(n, ab)}, {detail::zero_one_matrix_f2(n, bb)}}}))
        continue;
      r.gen_mod2 += 1;
      ZMat a = detail::zero_one_matrix(n, ab), b = detail::zero_one_matrix(n, bb);
      const auto lat = closure_lattice(shapez, ZGenTuple{{{a}, {b}}});
      const BigInt idx = lat.index();
      if (idx != 1) {
        r.fail_over_Z += 1;
        r.failures.push_back({std::move(a), std::move(b), idx});
      }
    }
    return r;
  };
  return sharded_reduce<CensusResult>(shards, threads, CensusResult{}, body, [](CensusResult acc, CensusResult x) {
    acc.gen_mod2 += x.gen_mod2;
    acc.fail_over_Z += x.fail_over_Z;
    for (auto& f : x.failures) acc.failures.push_back(std::move(f));
    return acc;
  });
}

}  // namespace algen
