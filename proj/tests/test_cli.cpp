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

#include "algen/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace algen;
using algen::json_io::Json;

namespace {

struct Result {
  int code;
  std::string text;
  Json json;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  Result r{code, out.str(), Json()};
  if (!r.text.empty() && r.text[0] == '{') r.json = Json::parse(r.text);
  return r;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    setenv(name, value, 1);
  }
  ~ScopedEnv() {
    if (old_.empty())
      unsetenv(name_);
    else
      setenv(name_, old_.c_str(), 1);
  }

 private:
  const char* name_;
  std::string old_;
};

}  // namespace

TEST(Cli, CountExamples) {
  const auto a = call({"count", "--k", "2", "--n", "3", "--q", "2", "--brute"});
  ASSERT_EQ(a.code, 0) << a.text;
  EXPECT_EQ(a.json["value"], "129024");
  EXPECT_EQ(a.json["gen"], "768");
  EXPECT_EQ(a.json["method"], "brute");
  EXPECT_EQ(a.json["command"], "count");
  EXPECT_EQ(a.json["config"]["n"], 3);

  const auto f = call({"count", "--k", "2", "--n", "2", "--q", "3"});
  EXPECT_EQ(f.json["value"], "3888");
  EXPECT_EQ(f.json["method"], "formula");

  const auto v = call({"count", "--k", "3", "--n", "2", "--q", "2", "--verify"});
  ASSERT_EQ(v.code, 0);
  EXPECT_EQ(v.json["value"], "2688");
  EXPECT_EQ(v.json["gen"], "448");

  const auto pw = call({"count", "--k", "2", "--n", "2", "--q", "2", "--m", "2", "--brute"});
  EXPECT_EQ(pw.json["value"], "8640");
  const auto pf = call({"count", "--k", "2", "--n", "2", "--q", "2", "--m", "2"});
  EXPECT_EQ(pf.json["value"], "8640");
  EXPECT_EQ(call({"count", "--k", "2", "--n", "2", "--q", "2", "--m", "17"}).json["value"], "0");
}

TEST(Cli, CountErrors) {
  const auto both = call({"count", "--k", "2", "--n", "2", "--q", "2", "--brute", "--formula"});
  EXPECT_EQ(both.code, 2);
  EXPECT_EQ(both.json["error"], "BadParams");
  const auto q6 = call({"count", "--k", "2", "--n", "2", "--q", "6"});
  EXPECT_EQ(q6.code, 2);
  EXPECT_EQ(q6.json["error"], "BadParams");
  const auto n4 = call({"count", "--k", "2", "--n", "4", "--q", "2"});
  EXPECT_EQ(n4.code, 2);
  EXPECT_EQ(n4.json["error"], "UnsupportedSize");
  const auto big = call({"count", "--k", "4", "--n", "3", "--q", "2", "--brute"});
  EXPECT_EQ(big.code, 3);
  EXPECT_EQ(big.json["error"], "TooLarge");
  const auto zero_threads = call({"count", "--k", "2", "--n", "2", "--q", "2", "--threads", "0"});
  EXPECT_EQ(zero_threads.code, 2);
}

TEST(Cli, EnumerationCapFromEnvironment) {
  ScopedEnv env("ALGEN_ENUM_CAP", "100");
  const auto r = call({"count", "--k", "2", "--n", "2", "--q", "2", "--brute"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.json["error"], "TooLarge");
}

TEST(Cli, Thresholds) {
  const auto a = call({"thresholds", "--n", "3", "--m", "769"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.json["r"], 3);
  EXPECT_EQ(a.json["lower"], "768");
  EXPECT_EQ(call({"thresholds", "--n", "3", "--m", "768"}).json["r"], 2);
  EXPECT_EQ(call({"thresholds", "--n", "2", "--m", "16"}).json["r"], 2);
  EXPECT_EQ(call({"thresholds", "--n", "2", "--m", "17"}).json["r"], 3);
  const auto big = call({"thresholds", "--n", "2", "--m", "100000000000000000000000000000"});
  ASSERT_EQ(big.code, 0);
  EXPECT_EQ(big.json["config"]["m"], "100000000000000000000000000000");
  EXPECT_EQ(call({"thresholds", "--n", "2", "--m", "abc"}).code, 2);
  EXPECT_EQ(call({"thresholds", "--n", "5", "--m", "3"}).code, 2);
}

TEST(Cli, CheckgenOverIntegers) {
  const auto id = call({"checkgen", "--input", R"({"k": 1, "elements": [[{"n": 2, "entries": [1, 0, 0, 1]}]]})"});
  ASSERT_EQ(id.code, 0) << id.text;
  EXPECT_EQ(id.json["generates"], false);
  EXPECT_EQ(id.json["index"], "0");

  const auto rem = call({"checkgen", "--input",
                         R"({"k": 2, "elements": [[{"n": 3, "entries": [0,0,0,0,0,0,0,1,1]}],
                                                  [{"n": 3, "entries": [0,0,1,1,0,1,0,0,1]}]]})"});
  ASSERT_EQ(rem.code, 0) << rem.text;
  EXPECT_EQ(rem.json["index"], "9");
  EXPECT_EQ(rem.json["bad_primes"], Json::array({3}));

  const auto nf = call({"checkgen", "--no-factor", "--input",
                        R"({"elements": [[{"n": 2, "entries": [0, "2", 0, 0]}], [{"n": 2, "entries": [0, 0, 1, 0]}]]})"});
  EXPECT_EQ(nf.json["index"], "4");
  EXPECT_EQ(nf.json["bad_primes"], Json::array());

  const auto huge = call({"checkgen", "--input",
                          R"({"elements": [[{"n": 2, "entries": [0, "1099511627776", 0, 0]}], [{"n": 2, "entries": [0, 0, 1, 0]}]]})"});
  EXPECT_EQ(huge.json["index"], "1208925819614629174706176");
  EXPECT_EQ(huge.json["bad_primes"], Json::array({2}));
}

TEST(Cli, CheckgenOverFields) {
  const auto f2 = call({"checkgen", "--input",
                        R"({"field": {"q": 2}, "elements": [[{"n": 2, "entries": [0, 1, 0, 0]}], [{"n": 2, "entries": [0, 0, 1, 0]}]]})"});
  ASSERT_EQ(f2.code, 0) << f2.text;
  EXPECT_EQ(f2.json["generates"], true);
  EXPECT_EQ(f2.json["dimension"], 4);
  EXPECT_EQ(f2.json["index"], "1");
  const auto diag = call({"checkgen", "--input",
                          R"({"field": {"p": 3}, "elements": [[{"n": 2, "entries": [1, 0, 0, 2]}], [{"n": 2, "entries": [0, 0, 0, 1]}]]})"});
  EXPECT_EQ(diag.json["generates"], false);
  EXPECT_EQ(diag.json["dimension"], 2);
  EXPECT_EQ(diag.json["index"], "9");
  const auto f4 = call({"checkgen", "--input",
                        R"({"field": {"p": 2, "s": 2}, "elements": [[{"n": 1, "entries": [[0, 1]]}]]})"});
  ASSERT_EQ(f4.code, 0) << f4.text;
  EXPECT_EQ(f4.json["generates"], true);
}

TEST(Cli, CheckgenErrors) {
  const auto bad = call({"checkgen", "--input", "{not json"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.json["error"], "InvalidJSON");
  const auto missing = call({"checkgen", "--input", R"({"k": 1})"});
  EXPECT_EQ(missing.json["error"], "InvalidJSON");
  const auto mism = call({"checkgen", "--input", R"({"k": 3, "elements": [[{"n": 1, "entries": [1]}]]})"});
  EXPECT_EQ(mism.json["error"], "InvalidJSON");
  const auto shape = call({"checkgen", "--input",
                           R"({"shape": [{"n": 2, "m": 2}], "elements": [[{"n": 2, "entries": [1, 0, 0, 1]}]]})"});
  EXPECT_EQ(shape.code, 2);
  EXPECT_EQ(shape.json["error"], "ShapeMismatch");
  const auto nofile = call({"checkgen", "--input", "@/nonexistent/tuple.json"});
  EXPECT_EQ(nofile.code, 2);
}

TEST(Cli, ConstructRoundTrip) {
  const auto c = call({"construct", "m2z16"});
  ASSERT_EQ(c.code, 0) << c.text;
  EXPECT_EQ(c.json["orbits"], 16);
  EXPECT_EQ(c.json["generating_pairs_mod2"], 96);
  EXPECT_EQ(c.json["certificate"]["index"], "1");
  const auto back = call({"checkgen", "--input", c.text});
  ASSERT_EQ(back.code, 0) << back.text;
  EXPECT_EQ(back.json["generates"], true);
  EXPECT_EQ(back.json["index"], "1");

  const std::string path = ::testing::TempDir() + "algen_twogen.json";
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"construct", "twogen", "--n", "3", "--q", "2"},
           {"construct", "twogen", "--n", "2", "--q", "2", "--s", "2"},
           {"construct", "twogen", "--n", "2", "--q", "9"}}) {
    const auto t = call(args);
    ASSERT_EQ(t.code, 0) << t.text;
    {
      std::ofstream f(path);
      f << t.text;
    }
    const auto chk = call({"checkgen", "--input", "@" + path});
    ASSERT_EQ(chk.code, 0) << chk.text;
    EXPECT_EQ(chk.json["generates"], true);
    EXPECT_EQ(chk.json["index"], "1");
  }
  std::remove(path.c_str());
}

TEST(Cli, Census) {
  const auto r = call({"census", "--n", "2", "--failures"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json["gen_mod2"], "96");
  EXPECT_EQ(r.json["fail_over_Z"], "0");
  EXPECT_EQ(r.json["failures"], Json::array());
  EXPECT_EQ(call({"census", "--n", "4"}).code, 2);
}

TEST(Cli, Density) {
  const auto z = call({"density", "zeta", "--s", "2"});
  ASSERT_EQ(z.code, 0) << z.text;
  EXPECT_NEAR(z.json["value"].get<double>(), 1.6449340668482264, 1e-14);
  EXPECT_EQ(z.json["method"], "exact-zeta");
  const auto m = call({"density", "matrix", "--n", "3", "--k", "2", "--P", "20000"});
  EXPECT_NEAR(m.json["value"].get<double>(), 0.3074, 1e-4);
  EXPECT_EQ(m.json["method"], "euler-truncation");
  EXPECT_EQ(m.json["P"], 20000);
  EXPECT_GT(m.json["error_bound"].get<double>(), 0);
  const auto zn = call({"density", "zn", "--k", "2", "--n", "2"});
  EXPECT_EQ(zn.json["value"], 0.0);
  EXPECT_EQ(call({"density", "zn", "--k", "1", "--n", "2"}).code, 2);
  EXPECT_EQ(call({"density", "bogus"}).code, 2);
}

TEST(Cli, MonteCarloReproducible) {
  const std::vector<std::string> args = {"mc", "--n", "2", "--k", "2", "--N", "50", "--samples", "3000", "--seed", "7"};
  const auto a = call(args), b = call(args);
  ASSERT_EQ(a.code, 0) << a.text;
  EXPECT_EQ(a.text, b.text);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  auto c = call(threaded);
  EXPECT_EQ(c.json["hits"], a.json["hits"]);
  EXPECT_EQ(c.json["estimate"], a.json["estimate"]);
  EXPECT_EQ(a.json["config"]["seed"], 7);
  EXPECT_EQ(a.json["trials"], 3000);
}

TEST(Cli, Exhaustive) {
  const auto r = call({"exhaustive", "--polys", R"([{"1,0": 1}, {"0,1": 1}])", "--N", "10", "--prime", "5", "--local-P", "100"});
  ASSERT_EQ(r.code, 0) << r.text;
  EXPECT_EQ(r.json["total"], "441");
  EXPECT_EQ(r.json["local_zero_count"], "1");
  EXPECT_NEAR(r.json["local_product"].get<double>(), 0.6079, 0.01);
  const auto big = call({"exhaustive", "--polys", R"([{"1,0,0": 1}])", "--N", "100000"});
  EXPECT_EQ(big.code, 3);
  EXPECT_EQ(call({"exhaustive", "--polys", R"([{"1,0": 1}])"}).code, 2);
  EXPECT_EQ(call({"exhaustive", "--polys", R"([{"x": 1}])", "--N", "3"}).json["error"], "InvalidJSON");
}

TEST(Cli, Poly) {
  const auto r = call({"poly", "psi", "--k", "12", "--eval", "2", "--irred-p", "3"});
  ASSERT_EQ(r.code, 0) << r.text;
  EXPECT_EQ(r.json["degree"], 33);
  EXPECT_EQ(r.json["coeffs"][0], -1);
  EXPECT_EQ(r.json["value"], psi_poly(12).eval(2).str());
  EXPECT_EQ(call({"poly", "f", "--k", "2", "--eval", "2"}).json["value"], "768");
  EXPECT_EQ(call({"poly", "h", "--k", "2", "--eval", "2"}).json["value"], "16");
  EXPECT_EQ(call({"poly", "phi", "--k", "3", "--irred-p", "2"}).json["mod_p"], "irreducible");
  EXPECT_EQ(call({"poly", "phi", "--k", "1"}).code, 2);
}

TEST(Cli, DispatchErrors) {
  const auto u = call({"frobnicate"});
  EXPECT_EQ(u.code, 2);
  EXPECT_EQ(u.json["error"], "UnknownCommand");
  const auto none = call({});
  EXPECT_EQ(none.code, 2);
  EXPECT_EQ(none.json["error"], "UnknownCommand");
  const auto missing = call({"count", "--k", "2"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.json["error"], "BadParams");
  const auto help = call({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.text.find("census"), std::string::npos);
}
