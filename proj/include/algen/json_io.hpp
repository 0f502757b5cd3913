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

// JSON encodings of matrices, tuples, shapes and polynomials.
//
//   matrix      {"n": 2, "entries": [a11, a12, a21, a22]}   row-major
//   tuple       {"k": 2, "shape": [{"n": 2, "s": 1, "m": 16}],
//                "field": {"q": 4},                          field tuples only
//                "elements": [[matrix per copy], ...]}
//   IntPoly     [c0, c1, ...]                                low degree first
//   MPoly       {"2,0": 1, "0,2": 1}                         exponent vector keys
//
// Integers are JSON numbers when |x| <= 2^53 and decimal strings otherwise;
// both forms are accepted on input. Field entries are element codes or
// coefficient arrays over F_p (low degree first).

#include "algen/errors.hpp"
#include "algen/ffalg.hpp"
#include "algen/genff.hpp"
#include "algen/genz.hpp"
#include "algen/integer.hpp"
#include "algen/polys.hpp"
#include "algen/sampler.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace algen::json_io {

using Json = nlohmann::ordered_json;

inline Json big(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  if (abs(v) <= limit) return Json(static_cast<long long>(v));
  return Json(v.str());
}

inline Json big_string(const BigInt& v) { return Json(v.str()); }

/// Rounds to 15 significant digits so the shortest printed form is stable.
inline Json real(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", v);
  return Json(std::strtod(buf, nullptr));
}

inline BigInt parse_big(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_number_unsigned()) return BigInt(j.get<unsigned long long>());
  if (j.is_string()) {
    try {
      return parse_bigint(j.get<std::string>());
    } catch (const Error&) {
    }
  }
  fail(Errc::InvalidJSON, "expected an integer or a decimal string, got " + j.dump());
}

inline const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(Errc::InvalidJSON, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline unsigned parse_unsigned(const Json& j, const char* what) {
  const BigInt v = parse_big(j);
  require(v >= 0 && v <= 1000000, Errc::InvalidJSON, std::string(what) + " out of range");
  return static_cast<unsigned>(v);
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::InvalidJSON, e.what());
  }
}

// ---- matrices ----

inline Json to_json(const ZMat& m) {
  Json e = Json::array();
  for (const auto& x : m.entries) e.push_back(big(x));
  return Json{{"n", m.n}, {"entries", std::move(e)}};
}

inline ZMat zmat_from_json(const Json& j) {
  const unsigned n = parse_unsigned(field_of(j, "n"), "n");
  const Json& e = field_of(j, "entries");
  require(e.is_array() && e.size() == std::size_t{n} * n, Errc::InvalidJSON, "matrix needs n^2 entries");
  ZMat m(n);
  for (std::size_t i = 0; i < e.size(); ++i) m.entries[i] = parse_big(e[i]);
  return m;
}

inline Json to_json(const FieldCtx& f, const FqMat& m) {
  Json e = Json::array();
  for (const auto& x : m.entries) {
    if (f.s() == 1) {
      e.push_back(x.code);
    } else {
      Json c = Json::array();
      for (auto v : f.coeffs(x)) c.push_back(v);
      e.push_back(std::move(c));
    }
  }
  return Json{{"n", m.n}, {"entries", std::move(e)}};
}

inline FqElem fq_from_json(const FieldCtx& f, const Json& j) {
  if (j.is_array()) {
    require(j.size() <= f.s(), Errc::InvalidJSON, "too many coefficients for the field");
    std::vector<std::uint64_t> c(f.s(), 0);
    for (std::size_t i = 0; i < j.size(); ++i) {
      const BigInt v = parse_big(j[i]);
      require(v >= 0 && v < f.p(), Errc::InvalidJSON, "coefficient outside [0, p)");
      c[i] = static_cast<std::uint64_t>(v);
    }
    return f.from_coeffs(c);
  }
  const BigInt v = parse_big(j);
  require(v >= 0 && v < f.q(), Errc::InvalidJSON, "field element code outside [0, q)");
  return FqElem{static_cast<std::uint64_t>(v)};
}

inline FqMat fqmat_from_json(const FieldCtx& f, const Json& j) {
  const unsigned n = parse_unsigned(field_of(j, "n"), "n");
  const Json& e = field_of(j, "entries");
  require(e.is_array() && e.size() == std::size_t{n} * n, Errc::InvalidJSON, "matrix needs n^2 entries");
  FqMat m(n);
  for (std::size_t i = 0; i < e.size(); ++i) m.entries[i] = fq_from_json(f, e[i]);
  return m;
}

// ---- shapes and tuples ----

inline Json to_json(const std::vector<Block>& blocks) {
  Json a = Json::array();
  for (const auto& b : blocks) a.push_back(Json{{"n", b.n}, {"s", b.s}, {"m", b.m}});
  return a;
}

struct ParsedTuple {
  AlgebraShape shape;
  std::variant<ZGenTuple, GenTuple> tuple;
};

inline std::vector<Block> blocks_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), Errc::InvalidJSON, "shape must be a nonempty array");
  std::vector<Block> blocks;
  for (const auto& b : j) {
    Block blk;
    blk.n = parse_unsigned(field_of(b, "n"), "n");
    blk.s = b.contains("s") ? parse_unsigned(b.at("s"), "s") : 1;
    blk.m = b.contains("m") ? parse_unsigned(b.at("m"), "m") : 1;
    blocks.push_back(blk);
  }
  return blocks;
}

/// Blocks read off the first element: runs of equal matrix size, s = 1.
inline std::vector<Block> infer_blocks(const Json& element) {
  require(element.is_array() && !element.empty(), Errc::InvalidJSON, "element must be a nonempty array of matrices");
  std::vector<Block> blocks;
  for (const auto& m : element) {
    const unsigned n = parse_unsigned(field_of(m, "n"), "n");
    if (!blocks.empty() && blocks.back().n == n)
      ++blocks.back().m;
    else
      blocks.push_back({n, 1, 1});
  }
  return blocks;
}

inline ParsedTuple tuple_from_json(const Json& j) {
  const Json& els = field_of(j, "elements");
  require(els.is_array() && !els.empty(), Errc::InvalidJSON, "elements must be a nonempty array");
  if (j.contains("k")) require(parse_big(j.at("k")) == els.size(), Errc::InvalidJSON, "k differs from the element count");
  const std::vector<Block> blocks = j.contains("shape") ? blocks_from_json(j.at("shape")) : infer_blocks(els[0]);
  if (j.contains("field")) {
    const Json& fj = j.at("field");
    std::uint64_t q;
    if (fj.is_object() && fj.contains("q")) {
      q = static_cast<std::uint64_t>(parse_big(fj.at("q")));
    } else {
      const BigInt p = parse_big(field_of(fj, "p"));
      const unsigned s = fj.contains("s") ? parse_unsigned(fj.at("s"), "s") : 1;
      q = static_cast<std::uint64_t>(ipow(p, s));
    }
    ParsedTuple out{AlgebraShape::over_field(detail::field_of_order(q), blocks), GenTuple{}};
    GenTuple t;
    for (const auto& el : els) {
      require(el.is_array() && el.size() == out.shape.copies(), Errc::ShapeMismatch, "element has wrong number of matrices");
      AlgElem e;
      for (std::size_t c = 0; c < el.size(); ++c)
        e.push_back(fqmat_from_json(out.shape.block_field(out.shape.block_of_copy(c)), el[c]));
      t.elements.push_back(std::move(e));
    }
    out.tuple = std::move(t);
    return out;
  }
  ParsedTuple out{AlgebraShape::over_integers(blocks), ZGenTuple{}};
  ZGenTuple t;
  for (const auto& el : els) {
    require(el.is_array() && el.size() == out.shape.copies(), Errc::ShapeMismatch, "element has wrong number of matrices");
    AlgElemZ e;
    for (const auto& m : el) e.push_back(zmat_from_json(m));
    t.elements.push_back(std::move(e));
  }
  out.tuple = std::move(t);
  return out;
}

inline Json to_json(const AlgebraShape& shape, const ZGenTuple& t) {
  Json els = Json::array();
  for (const auto& el : t.elements) {
    Json e = Json::array();
    for (const auto& m : el) e.push_back(to_json(m));
    els.push_back(std::move(e));
  }
  return Json{{"k", t.k()}, {"shape", to_json(shape.blocks())}, {"elements", std::move(els)}};
}

inline Json to_json(const AlgebraShape& shape, const GenTuple& t) {
  Json els = Json::array();
  for (const auto& el : t.elements) {
    Json e = Json::array();
    for (std::size_t c = 0; c < el.size(); ++c) e.push_back(to_json(shape.block_field(shape.block_of_copy(c)), el[c]));
    els.push_back(std::move(e));
  }
  return Json{{"k", t.k()},
              {"field", Json{{"q", shape.base().q()}}},
              {"shape", to_json(shape.blocks())},
              {"elements", std::move(els)}};
}

inline Json to_json(const ZGenReport& r) {
  Json primes = Json::array();
  for (const auto& p : r.bad_primes) primes.push_back(big(p));
  return Json{{"generates", r.generates}, {"index", big_string(r.index)}, {"bad_primes", std::move(primes)}};
}

// ---- polynomials ----

inline Json to_json(const IntPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(big(c));
  return a;
}

inline IntPoly intpoly_from_json(const Json& j) {
  require(j.is_array(), Errc::InvalidJSON, "polynomial must be a coefficient array");
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(parse_big(x));
  return IntPoly(std::move(c));
}

inline MPoly mpoly_from_json(const Json& j) {
  require(j.is_object(), Errc::InvalidJSON, "polynomial must be an object of exponent keys");
  MPoly f;
  bool first = true;
  for (const auto& [key, coeff] : j.items()) {
    MTerm t;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      require(!part.empty() && part.find_first_not_of("0123456789 ") == std::string::npos, Errc::InvalidJSON,
              "bad exponent key \"" + key + "\"");
      t.exps.push_back(static_cast<unsigned>(std::stoul(part)));
    }
    require(!t.exps.empty(), Errc::InvalidJSON, "empty exponent key");
    if (first) f.nvars = static_cast<unsigned>(t.exps.size());
    require(t.exps.size() == f.nvars, Errc::InvalidJSON, "exponent keys of different lengths");
    first = false;
    t.coeff = parse_big(coeff);
    if (t.coeff != 0) f.terms.push_back(std::move(t));
  }
  require(!first, Errc::InvalidJSON, "polynomial has no terms; give the zero polynomial as {\"0,...,0\": 0}");
  return f;
}

inline std::vector<MPoly> system_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), Errc::InvalidJSON, "expected a nonempty list of polynomials");
  std::vector<MPoly> out;
  for (const auto& f : j) out.push_back(mpoly_from_json(f));
  for (const auto& f : out) require(f.nvars == out.front().nvars, Errc::InvalidJSON, "polynomials use different variable counts");
  return out;
}

}  // namespace algen::json_io
