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

// Command-line dispatch. run() parses argv-style arguments, executes one
// subcommand and writes a single JSON document; the returned exit code is
// 0 on success, 2 on invalid input, 3 when a size cap or factorisation limit
// is hit, 1 on any other failure.

#include "algen/density.hpp"
#include "algen/errors.hpp"
#include "algen/genff.hpp"
#include "algen/genz.hpp"
#include "algen/json_io.hpp"
#include "algen/polys.hpp"
#include "algen/sampler.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace algen::cli {

using json_io::Json;

inline int exit_code(Errc c) {
  switch (c) {
    case Errc::TooLarge:
    case Errc::FactorizationIncomplete:
      return 3;
    case Errc::InternalMismatch:
    case Errc::CertificationFailed:
    case Errc::DivisionInexact:
    case Errc::NotDivisible:
      return 1;
    default:
      return 2;
  }
}

/// Text of `src`: "-" reads stdin, "@path" reads a file, anything else is
/// taken literally.
inline std::string read_source(const std::string& src) {
  if (src == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  if (!src.empty() && src[0] == '@') {
    std::ifstream in(src.substr(1));
    require(in.good(), Errc::BadParams, "cannot open " + src.substr(1));
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  return src;
}

struct Options {
  unsigned k = 2, n = 2, s = 1, m = 1, threads = 1;
  std::uint64_t q = 2, N = 0, P = 100000, samples = 0, seed = 42, prime = 0, local_P = 0, irred_p = 0;
  long double eps = 1e-15L;
  bool brute = false, formula = false, verify = false, no_factor = false, failures = false;
  std::string kind, polys, input, eval, m_text;
};

inline void merge(Json& out, const Json& extra) {
  for (const auto& [key, val] : extra.items()) out[key] = val;
}

inline Json run_count(const Options& o) {
  const CountParams prm{o.k, o.n, o.q, o.s, o.m};
  const std::string mode = o.brute ? "brute" : (o.verify ? "verify" : "formula");
  Json out{{"command", "count"},
           {"config", {{"k", o.k}, {"n", o.n}, {"q", o.q}, {"s", o.s}, {"m", o.m}, {"mode", mode}, {"threads", o.threads}}}};
  auto formula = [&]() {
    if (o.s == 1 && o.m == 1 && (o.n == 2 || o.n == 3)) return g_closed_form(o.k, o.n, o.q);
    return count_gen_power_formula(prm, o.threads);
  };
  BigInt value;
  if (o.brute) {
    value = brute_count(prm, o.threads).value;
  } else if (o.verify) {
    value = brute_count(prm, o.threads).value;
    const BigInt f = formula();
    require(f == value, Errc::InternalMismatch, "brute force " + value.str() + " differs from formula " + f.str());
  } else {
    value = formula();
  }
  out["value"] = json_io::big_string(value);
  out["method"] = mode == "verify" ? "brute+formula" : mode;
  if (o.s == 1 && o.m == 1 && (o.n == 2 || o.n == 3)) out["gen"] = json_io::big_string(gen_count(o.k, o.n, o.q));
  return out;
}

inline Json density_json(const DensityValue& v) {
  return Json{{"value", json_io::real(v.value)},
              {"error_bound", json_io::real(v.abs_error_bound)},
              {"P", v.P},
              {"method", to_string(v.method)}};
}

inline Json run_density(const Options& o) {
  Json cfg{{"kind", o.kind}};
  DensityValue v;
  if (o.kind == "zeta") {
    cfg["s"] = o.s;
    cfg["eps"] = json_io::real(o.eps);
    v = zeta_value(o.s, o.eps);
  } else if (o.kind == "zn") {
    cfg["k"] = o.k;
    cfg["n"] = o.n;
    v = den_Zn(o.k, o.n);
  } else {
    cfg["n"] = o.n;
    cfg["k"] = o.k;
    cfg["P"] = o.P;
    v = den_matrix(o.n, o.k, o.P, o.threads);
  }
  Json out{{"command", "density"}, {"config", std::move(cfg)}};
  merge(out, density_json(v));
  return out;
}

inline Json run_mc(const Options& o) {
  const auto shape = AlgebraShape::integer_matrix(o.n, o.m);
  const BoxModel box{o.N, o.seed, o.samples};
  const auto est = mc_density(shape, o.k, box, o.threads);
  return Json{{"command", "mc"},
              {"config", {{"n", o.n}, {"m", o.m}, {"k", o.k}, {"N", o.N}, {"samples", o.samples}, {"seed", o.seed}, {"threads", o.threads}}},
              {"hits", est.hits},
              {"trials", est.trials},
              {"estimate", json_io::real(est.estimate)},
              {"ci95_halfwidth", json_io::real(est.ci95_halfwidth)},
              {"shard_size", est.shard_size}};
}

inline Json run_exhaustive(const Options& o) {
  const Json polys_json = json_io::parse_text(read_source(o.polys));
  const auto system = json_io::system_from_json(polys_json);
  const unsigned nv = system.front().nvars;
  require(o.N > 0 || o.prime > 0 || o.local_P > 0, Errc::BadParams, "give at least one of --N, --prime, --local-P");
  Json cfg{{"polys", polys_json}, {"variables", nv}};
  Json out{{"command", "exhaustive"}};
  Json res;
  if (o.N > 0) {
    cfg["N"] = o.N;
    const auto d = exhaustive_poly_density(system, o.N, o.threads);
    res["hits"] = json_io::big_string(d.hits);
    res["total"] = json_io::big_string(d.total);
    res["value"] = json_io::real(d.value());
  }
  if (o.prime > 0) {
    cfg["prime"] = o.prime;
    res["local_zero_count"] = json_io::big_string(local_zero_count(system, o.prime, nv));
  }
  if (o.local_P > 0) {
    cfg["local_P"] = o.local_P;
    res["local_product"] = json_io::real(local_density_product(system, nv, o.local_P));
  }
  cfg["threads"] = o.threads;
  out["config"] = std::move(cfg);
  merge(out, res);
  return out;
}

inline Json run_checkgen(const Options& o) {
  require(!o.input.empty(), Errc::BadParams, "give the tuple with --input (JSON text, @file or -)");
  const Json in = json_io::parse_text(read_source(o.input));
  const auto parsed = json_io::tuple_from_json(in);
  Json out{{"command", "checkgen"}, {"config", {{"factor", !o.no_factor}}}};
  out["shape"] = json_io::to_json(parsed.shape.blocks());
  if (const auto* zt = std::get_if<ZGenTuple>(&parsed.tuple)) {
    merge(out, json_io::to_json(generates_Z(parsed.shape, *zt, !o.no_factor)));
  } else {
    const auto& ft = std::get<GenTuple>(parsed.tuple);
    const std::size_t dim = generated_dimension(parsed.shape, ft);
    const std::size_t rank = parsed.shape.rank();
    out["field"] = Json{{"q", parsed.shape.base().q()}};
    out["generates"] = dim == rank;
    out["dimension"] = dim;
    out["rank"] = rank;
    out["index"] = json_io::big_string(ipow(BigInt(parsed.shape.base().q()), static_cast<unsigned>(rank - dim)));
  }
  return out;
}

inline Json run_construct(const Options& o) {
  if (o.kind == "m2z16") {
    const auto c = construct_M2Z16();
    const auto shape = AlgebraShape::integer_matrix(2, static_cast<unsigned>(c.representatives.size()));
    Json out{{"command", "construct"}, {"config", {{"kind", "m2z16"}}}};
    merge(out, json_io::to_json(shape, c.tuple));
    out["generating_pairs_mod2"] = c.generating_pairs_mod2;
    out["orbits"] = c.representatives.size();
    out["certificate"] = json_io::to_json(c.certificate);
    return out;
  }
  const auto tg = two_generators_ext(o.n, o.q, o.s);
  const auto shape = AlgebraShape::matrix(detail::field_of_order(o.q), o.n, o.s);
  Json out{{"command", "construct"}, {"config", {{"kind", "twogen"}, {"n", o.n}, {"q", o.q}, {"s", o.s}}}};
  merge(out, json_io::to_json(shape, GenTuple{{{tg.a}, {tg.b}}}));
  out["certificate"] = Json{{"generates", true}, {"index", "1"}};
  return out;
}

inline Json run_census(const Options& o) {
  const auto r = zero_one_census(o.n, o.threads);
  Json out{{"command", "census"},
           {"config", {{"n", o.n}, {"threads", o.threads}, {"failures", o.failures}}},
           {"gen_mod2", json_io::big_string(r.gen_mod2)},
           {"fail_over_Z", json_io::big_string(r.fail_over_Z)}};
  if (o.failures) {
    Json f = Json::array();
    for (const auto& x : r.failures)
      f.push_back(Json{{"A", json_io::to_json(x.a)}, {"B", json_io::to_json(x.b)}, {"index", json_io::big_string(x.index)}});
    out["failures"] = std::move(f);
  }
  return out;
}

inline Json run_thresholds(const Options& o) {
  const BigInt m = parse_bigint(o.m_text);
  const auto rep = min_generators(o.n, m);
  return Json{{"command", "thresholds"},
              {"config", {{"n", o.n}, {"m", m.str()}}},
              {"r", rep.r},
              {"lower", json_io::big_string(rep.lower)},
              {"upper", json_io::big_string(rep.upper)}};
}

inline Json run_poly(const Options& o) {
  IntPoly f;
  if (o.kind == "f") f = f_poly(o.k);
  else if (o.kind == "h") f = h_poly(o.k);
  else if (o.kind == "phi") f = phi_poly(o.k);
  else f = psi_poly(o.k);
  Json cfg{{"family", o.kind}, {"k", o.k}};
  Json out{{"command", "poly"}};
  Json res{{"degree", f.degree()}, {"coeffs", json_io::to_json(f)}};
  if (!o.eval.empty()) {
    const BigInt x = parse_bigint(o.eval);
    cfg["eval"] = x.str();
    res["value"] = json_io::big_string(f.eval(x));
  }
  if (o.irred_p > 0) {
    cfg["irred_p"] = o.irred_p;
    res["mod_p"] = to_string(is_irreducible_mod_p(f, o.irred_p));
  }
  out["config"] = std::move(cfg);
  merge(out, res);
  return out;
}

inline Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", code}, {"message", message}};
}

/// Runs one command; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"algen: generation of matrix algebras over finite fields and Z"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "number of generating k-tuples of M_n(F_{q^s})^m");
  count->add_option("--k", o.k)->required();
  count->add_option("--n", o.n)->required();
  count->add_option("--q", o.q)->required();
  count->add_option("--s", o.s);
  count->add_option("--m", o.m);
  count->add_option("--threads", o.threads);
  auto* fb = count->add_flag("--brute", o.brute, "exhaustive enumeration");
  auto* ff = count->add_flag("--formula", o.formula, "closed form (default)");
  auto* fv = count->add_flag("--verify", o.verify, "run both and compare");
  fb->excludes(ff)->excludes(fv);
  ff->excludes(fv);

  auto* density = app.add_subcommand("density", "zeta values and generation densities");
  density->add_option("kind", o.kind)->required()->check(CLI::IsMember({"zeta", "zn", "matrix"}));
  density->add_option("--s", o.s);
  density->add_option("--eps", o.eps);
  density->add_option("--k", o.k);
  density->add_option("--n", o.n);
  density->add_option("--P", o.P);
  density->add_option("--threads", o.threads);

  auto* mc = app.add_subcommand("mc", "Monte-Carlo density of generating k-tuples of M_n(Z)^m");
  mc->add_option("--n", o.n);
  mc->add_option("--m", o.m);
  mc->add_option("--k", o.k)->required();
  mc->add_option("--N", o.N)->required();
  mc->add_option("--samples", o.samples)->required();
  mc->add_option("--seed", o.seed);
  mc->add_option("--threads", o.threads);

  auto* exh = app.add_subcommand("exhaustive", "box density of a polynomial system and local zero counts");
  exh->add_option("--polys", o.polys, "JSON list, @file or -")->required();
  exh->add_option("--N", o.N);
  exh->add_option("--prime", o.prime);
  exh->add_option("--local-P", o.local_P);
  exh->add_option("--threads", o.threads);

  auto* check = app.add_subcommand("checkgen", "certify generation of a tuple given as JSON");
  check->add_option("--input", o.input, "JSON text, @file or -")->required();
  check->add_flag("--no-factor", o.no_factor, "skip factoring the index");

  auto* cons = app.add_subcommand("construct", "explicit generating pairs");
  cons->add_option("kind", o.kind)->required()->check(CLI::IsMember({"m2z16", "twogen"}));
  cons->add_option("--n", o.n);
  cons->add_option("--q", o.q);
  cons->add_option("--s", o.s);

  auto* census = app.add_subcommand("census", "pairs of {0,1} matrices generating mod 2 and over Z");
  census->add_option("--n", o.n)->required();
  census->add_option("--threads", o.threads);
  census->add_flag("--failures", o.failures, "list the pairs failing over Z");

  auto* thr = app.add_subcommand("thresholds", "minimal number of generators of M_n(Z)^m");
  thr->add_option("--n", o.n)->required();
  thr->add_option("--m", o.m_text)->required();

  auto* poly = app.add_subcommand("poly", "polynomial families f, h, phi, psi");
  poly->add_option("family", o.kind)->required()->check(CLI::IsMember({"f", "h", "phi", "psi"}));
  poly->add_option("--k", o.k)->required();
  poly->add_option("--eval", o.eval);
  poly->add_option("--irred-p", o.irred_p);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    const bool unknown = dynamic_cast<const CLI::ExtrasError*>(&e) != nullptr ||
                         (dynamic_cast<const CLI::RequiredError*>(&e) != nullptr && app.get_subcommands().empty());
    out << error_json(unknown ? "UnknownCommand" : "BadParams", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    require(o.threads >= 1, Errc::BadParams, "threads must be >= 1");
    Json result;
    if (count->parsed()) result = run_count(o);
    else if (density->parsed()) result = run_density(o);
    else if (mc->parsed()) result = run_mc(o);
    else if (exh->parsed()) result = run_exhaustive(o);
    else if (check->parsed()) result = run_checkgen(o);
    else if (cons->parsed()) result = run_construct(o);
    else if (census->parsed()) result = run_census(o);
    else if (thr->parsed()) result = run_thresholds(o);
    else result = run_poly(o);
    out << result.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    out << error_json(std::string(to_string(e.code())), e.what()).dump(2) << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    out << error_json("InternalError", e.what()).dump(2) << "\n";
    return 1;
  }
}

}  // namespace algen::cli
