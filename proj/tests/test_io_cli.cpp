// Copyright 2026 The qmzv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "qmzv/cli.hpp"
#include "qmzv/text_io.hpp"

using namespace qmzv;

namespace {

GradedPoly P(const Word& w) { return GradedPoly(w); }

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  CliRun r;
  r.code = run_cli(args, out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("word and polynomial text rendering", "[io]") {
  CHECK(word_str(Word::unit(Alphabet::B)) == "1");
  CHECK(word_str(word_b({2, 0})) == "b2.b0");
  CHECK(word_str(word_x({0, 1})) == "x0.x1");
  CHECK(word_str(word_y({3})) == "y3");
  CHECK(word_str(word_b({12})) == "b12");

  const GradedPoly prod = quasi_shuffle(word_b({1}), word_b({1}), DiamondRule::Balanced);
  CHECK(poly_str(prod) == "2*b1.b1 + b2");

  GradedPoly mixed(Alphabet::B);
  mixed.add_term(Word::unit(Alphabet::B), Rational(1, 2));
  mixed.add_term(word_b({1}), Rational(-1));
  CHECK(poly_str(mixed) == "1/2 - b1");
  CHECK(poly_str(GradedPoly::zero(Alphabet::B)) == "0");

  CHECK(tensor_str(delta_dec(word_b({1, 2}))) == "1 (x) b1.b2 + b1 (x) b2 + b1.b2 (x) 1");

  CHECK(poly_t_str(reg_t_inverse(P(word_b({0, 0, 1})))) == "1/2*b1*T^2 - b1.b0*T + b1.b0.b0");
  CHECK(poly_t_str(PolyWithT{}) == "0");
}

TEST_CASE("formal value and q-series rendering", "[io]") {
  CHECK(zf_symbol_str(word_x({0, 1, 0, 0, 1})) == "z[0,1;0,0,1]");
  CHECK(zf_symbol_str(word_x({0, 1})) == "z[0,1]");
  CHECK(zf_str(zf_value({2, 3})) == "z[0,1;0,0,1]");
  CHECK(zf_str(ZfElement(Rational(-3, 4))) == "-3/4");
  CHECK(zf_str(ZfElement(Rational(1)) + Rational(2) * zf_value({2})) == "1 + 2*z[0,1]");
  CHECK(zf_str(ZfElement()) == "0");

  CHECK(qseries_str(bi_eisenstein_depth1(2, 0, 3)) == "-1/24 + q + 3*q^2 + 4*q^3 + O(q^4)");
  CHECK(qseries_str(QSeries(2)) == "O(q^3)");
  CHECK(qseries_str(QSeries::constant(Rational(1), 0)) == "1 + O(q^1)");

  CHECK(series_str(RationalSeries::unit(Alphabet::X, 2)) == "1 + O(weight 3)");
  RationalSeries s(Alphabet::X, 2);
  s.set_coeff(word_x({0, 1}), Rational(-1, 2));
  CHECK(series_str(s) == "-1/2*x0.x1 + O(weight 3)");
}

TEST_CASE("word parsing", "[io]") {
  CHECK(parse_word("b2 b0") == word_b({2, 0}));
  CHECK(parse_word("b2.b0") == word_b({2, 0}));
  CHECK(parse_word("x0.x1") == word_x({0, 1}));
  CHECK(parse_word("y3") == word_y({3}));
  CHECK(parse_word("b12") == word_b({12}));

  // parse is a left inverse of printing on nonempty words
  for (const Word& w : {word_b({1, 0, 3}), word_x({1, 1, 0}), word_y({2, 5})})
    CHECK(parse_word(word_str(w)) == w);

  CHECK_THROWS_WITH(parse_word("b1 x0"), Catch::Matchers::ContainsSubstring("x0"));
  CHECK_THROWS_WITH(parse_word("q9"), Catch::Matchers::ContainsSubstring("q9"));
  CHECK_THROWS_WITH(parse_word("b"), Catch::Matchers::ContainsSubstring("'b'"));
  CHECK_THROWS_WITH(parse_word("b1x"), Catch::Matchers::ContainsSubstring("b1x"));
  CHECK_THROWS_AS(parse_word("   "), std::invalid_argument);
  // x only has letters 0 and 1
  CHECK_THROWS_AS(parse_word("x2"), std::invalid_argument);
  // y starts at 1
  CHECK_THROWS_AS(parse_word("y0"), std::invalid_argument);
}

TEST_CASE("json round trips", "[io]") {
  for (const Word& w : {word_b({2, 0, 1}), word_x({0, 1}), word_y({4}), Word::unit(Alphabet::B)})
    CHECK(word_from_json(word_to_json(w)) == w);

  const GradedPoly prod = quasi_shuffle(word_b({2}), word_b({1, 0}), DiamondRule::Balanced);
  CHECK(poly_from_json(poly_to_json(prod)) == prod);
  const Json pj = poly_to_json(prod);
  CHECK(pj.at("terms").at(0).at("coeff").is_string());

  const QSeries f = qzeta_sz({2, 1}, 10);
  CHECK(qseries_from_json(qseries_to_json(f)) == f);
  Json bad = qseries_to_json(f);
  bad["order"] = 3;
  CHECK_THROWS_AS(qseries_from_json(bad), std::invalid_argument);

  const ZfElement z = ZfElement(Rational(5, 7)) + Rational(-2) * zf_value({2, 3});
  CHECK(zf_from_json(zf_to_json(z)) == z);

  RationalSeries s(Alphabet::X, 2);
  s.set_coeff(Word::unit(Alphabet::X), Rational(1));
  s.set_coeff(word_x({0}), Rational(1, 3));
  s.set_coeff(word_x({0, 1}), Rational(-2));
  CHECK(series_from_json(series_to_json(s)) == s);

  const SchemeReport rep = check_dm(RationalSeries::unit(Alphabet::X, 2));
  CHECK(scheme_report_from_json(scheme_report_to_json(rep)) == rep);
}

TEST_CASE("cli product command matches the documented example", "[cli]") {
  const CliRun r = cli({"product", "--rule", "balanced", "b1", "b1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2*b1.b1 + b2\n");

  const CliRun sz = cli({"product", "--rule", "sz", "b0", "b0"});
  CHECK(sz.code == 0);
  CHECK(sz.out == "b0 + 2*b0.b0\n");
}

TEST_CASE("cli project-p prints the exact image and reduces on demand", "[cli]") {
  const CliRun exact = cli({"project-p", "b2 b3", "--weight", "6"});
  CHECK(exact.code == 0);
  CHECK(exact.out == "z[0,1;0,0,1]\n");

  const CliRun reduced = cli({"project-p", "b2 b3", "--weight", "6", "--reduce"});
  CHECK(reduced.code == 0);
  CHECK(reduced.out == "z[0,1;1;0,1]\n");

  // both sides of the rewrite are the same class
  const CliRun eq = cli({"zf-equal", "b2 b3", "x0 x1 x1 x0 x1"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "true\n");
}

TEST_CASE("cli zf-equal distinguishes values and sets the exit code", "[cli]") {
  const CliRun euler = cli({"zf-equal", "x0 x0 x1", "x0 x1 x1"});
  CHECK(euler.code == 0);
  CHECK(euler.out == "true\n");

  const CliRun uneq = cli({"zf-equal", "x0 x1", "x0 x0 x1"});
  CHECK(uneq.code == 1);
  CHECK(uneq.out == "false\n");
}

TEST_CASE("cli word-algebra outputs", "[cli]") {
  CHECK(cli({"tau", "b2 b1"}).out == "b1.b1.b0\n");
  CHECK(cli({"antipode", "b2"}).out == "b1.b1 - b2\n");
  CHECK(cli({"coproduct", "b3", "--rule", "balanced"}).out ==
        "1 (x) b3 + b1 (x) b2 + b2 (x) b1 + b3 (x) 1\n");
  CHECK(cli({"coproduct", "b1 b2"}).out == "1 (x) b1.b2 + b1 (x) b2 + b1.b2 (x) 1\n");
  CHECK(cli({"reg", "b0 b1"}).out == "-b1.b0\n");
  CHECK(cli({"reg", "x1 x0 x1", "--kind", "shuffle"}).out == "-2*x0.x1.x1\n");
  CHECK(cli({"reg", "y1 y2", "--kind", "stuffle"}).out == "-y2.y1 - y3\n");
  CHECK(cli({"reg", "b0 b0 b1", "--kind", "t-inverse"}).out ==
        "1/2*b1*T^2 - b1.b0*T + b1.b0.b0\n");
  CHECK(cli({"gf-reduce", "b1 b1"}).out == "b1.b1\n");
  CHECK(cli({"gf-dim", "--weight", "4"}).out == "7\n");
}

TEST_CASE("cli relation-space listings", "[cli]") {
  const CliRun gf = cli({"rel-space", "--weight", "2"});
  CHECK(gf.code == 0);
  CHECK(gf.out.substr(0, 6) == "dim 3\n");

  const CliRun zf = cli({"rel-space", "--weight", "4", "--algebra", "zf"});
  CHECK(zf.code == 0);
  CHECK(zf.out.substr(0, 4) == "dim ");

  const CliRun lin = cli({"lin-dm0", "--weight", "3"});
  CHECK(lin.code == 0);
  CHECK(lin.out.substr(0, 6) == "dim 1\n");
}

TEST_CASE("cli json output parses back to the same object", "[cli]") {
  const CliRun pr = cli({"product", "--rule", "balanced", "b2", "b1 b0", "--format", "json"});
  REQUIRE(pr.code == 0);
  const GradedPoly expect = quasi_shuffle(word_b({2}), word_b({1, 0}), DiamondRule::Balanced);
  CHECK(poly_from_json(Json::parse(pr.out)) == expect);

  const CliRun qs = cli({"qseries", "--kind", "zeta", "--index", "2,1", "--order", "12",
                         "--format", "json"});
  REQUIRE(qs.code == 0);
  CHECK(qseries_from_json(Json::parse(qs.out)) == qzeta_sz({2, 1}, 12));

  const CliRun ws = cli({"tau", "b2 b1", "--format", "json"});
  REQUIRE(ws.code == 0);
  CHECK(word_from_json(Json::parse(ws.out)) == word_b({1, 1, 0}));
}

TEST_CASE("cli scheme commands read series from files and stdin", "[cli]") {
  const std::string unit_series =
      R"({"alphabet":"x","bound":2,"terms":[{"word":[],"coeff":"1"}]})";
  const CliRun ok = cli({"check-dm", "-"}, unit_series);
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);

  const std::string bad_series =
      R"({"alphabet":"x","bound":2,"terms":[{"word":[],"coeff":"1"},{"word":[0],"coeff":"1"}]})";
  const CliRun bad = cli({"check-dm", "-"}, bad_series);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("linear-vanishing: FAIL at x0") != std::string::npos);

  const CliRun bm = cli({"check-bm", "-"},
                        R"({"alphabet":"b","bound":2,"terms":[{"word":[],"coeff":"1"}]})");
  CHECK(bm.code == 0);

  const CliRun embedded = cli({"theta", "-"}, unit_series);
  CHECK(embedded.code == 0);
  CHECK(embedded.out == "1 + O(weight 3)\n");
}

TEST_CASE("cli q-series checks succeed and freeze output", "[cli]") {
  CHECK(cli({"qseries", "--kind", "zeta", "--index", "2", "--order", "6"}).out ==
        "q^2 + 2*q^3 + 4*q^4 + 4*q^5 + 8*q^6 + O(q^7)\n");
  CHECK(cli({"qseries", "--kind", "eisenstein", "--k", "2", "--m", "0", "--order", "3"}).out ==
        "-1/24 + q + 3*q^2 + 4*q^3 + O(q^4)\n");

  CHECK(cli({"qcheck", "--check", "stuffle", "--a", "1", "--b", "2", "--order", "30"}).code == 0);
  CHECK(cli({"qcheck", "--check", "tau", "--k", "2,1", "--m", "1,0", "--order", "25"}).code == 0);
  CHECK(cli({"qcheck", "--check", "binomial", "--k", "2", "--m", "1", "--order", "20"}).code == 0);
  CHECK(cli({"qcheck", "--check", "derivative", "--k", "4", "--m", "2", "--order", "25"}).code ==
        0);

  std::ostringstream array;
  array << "[" << qseries_to_json(qzeta_sz({2}, 10)).dump() << ","
        << qseries_to_json(qzeta_sz({1, 0}, 10)).dump() << "]";
  const CliRun span = cli({"span-dim", "-"}, array.str());
  CHECK(span.code == 0);
  CHECK(span.out == "1\n");
}

TEST_CASE("cli verify runs a single suite", "[cli]") {
  const CliRun euler = cli({"verify", "--suite", "euler"});
  CHECK(euler.code == 0);
  CHECK(euler.out.find("PASS  euler") != std::string::npos);
  CHECK(euler.out.find("zf_equal(zeta_f(3), zeta_f(2,1), 3) = true") != std::string::npos);

  const CliRun json = cli({"verify", "--suite", "balanced-product", "--format", "json"});
  CHECK(json.code == 0);
  const Json j = Json::parse(json.out);
  CHECK(j.at("ok").get<bool>());
  CHECK(j.at("suites").at(0).at("name").get<std::string>() == "balanced-product");
}

TEST_CASE("cli usage errors exit with code 2", "[cli]") {
  const CliRun bad_word = cli({"product", "--rule", "balanced", "b1", "q9"});
  CHECK(bad_word.code == 2);
  CHECK(bad_word.err.find("q9") != std::string::npos);

  CHECK(cli({"product", "--rule", "nope", "b1", "b1"}).code == 2);
  CHECK(cli({"verify", "--suite", "nosuch"}).code == 2);
  CHECK(cli({"tau", "b0 b1"}).code == 2);           // tau rejects a leading b0
  CHECK(cli({"antipode", "x0"}).code == 2);         // wrong alphabet
  CHECK(cli({"check-dm", "/nonexistent.json"}).code == 2);
  CHECK(cli({"nosuchcommand"}).code == 2);
  CHECK(cli({}).code == 2);                         // a subcommand is required
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"qseries", "--kind", "zeta", "--index", "0,1"}).code == 2);  // non-admissible head
}
