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

#include <random>

#include "qmzv/schemes.hpp"

using namespace qmzv;

namespace {

using ZfSeries = TruncatedSeries<ZfElement>;

ZfContext& zctx() {
  static ZfContext c;
  return c;
}

GfContext& gctx() {
  static GfContext c;
  return c;
}

// Coefficient equality modulo the extended-double-shuffle relations.
struct ZfEq {
  bool operator()(const ZfElement& a, const ZfElement& b) const {
    return zctx().equal(a, b, std::max(a.max_weight(), b.max_weight()));
  }
};

// Generating series of the shuffle-regularized evaluation: the coefficient
// of each X-word w is zeta_sh_f(w), an element of the formal value algebra.
ZfSeries zeta_sh_series(int bound) {
  ZfSeries phi(Alphabet::X, bound);
  phi.set_coeff(Word::unit(Alphabet::X), ZfElement(Rational(1)));
  for (int w = 1; w <= bound; ++w)
    for (const Word& u : enumerate_words(Alphabet::X, w)) phi.set_coeff(u, zeta_sh_f(u));
  return phi;
}

RationalSeries letter_series(int letter, int bound) {
  RationalSeries s(Alphabet::X, bound);
  s.set_coeff(word_x({letter}), Rational(1));
  return s;
}

RationalSeries bracket(const RationalSeries& a, const RationalSeries& b) { return a * b - b * a; }

// A rational Lie series combined from nested concatenation brackets of x_0
// and x_1 up to weight 4, with the given coefficients.
RationalSeries lie_series(const std::vector<Rational>& c, int bound) {
  const RationalSeries x0 = letter_series(0, bound);
  const RationalSeries x1 = letter_series(1, bound);
  const RationalSeries b01 = bracket(x0, x1);
  const std::vector<RationalSeries> basis = {
      x0,
      x1,
      b01,
      bracket(x0, b01),
      bracket(x1, b01),
      bracket(x0, bracket(x0, b01)),
      bracket(x1, bracket(x0, b01)),
      bracket(x1, bracket(x1, b01)),
  };
  RationalSeries out(Alphabet::X, bound);
  for (size_t i = 0; i < basis.size() && i < c.size(); ++i) out += basis[i].scaled(c[i]);
  return out;
}

Rational small_rational(std::mt19937& rng) {
  const int num = static_cast<int>(rng() % 7) - 3;
  const int den = 1 + static_cast<int>(rng() % 3);
  return Rational(num, den);
}

}  // namespace

TEST_CASE("phi_star on explicit series", "[schemes]") {
  SECTION("the unit maps to the unit") {
    const auto ps = phi_star(RationalSeries::unit(Alphabet::X, 3));
    CHECK(ps == TruncatedSeries<Rational>::unit(Alphabet::Y, 3));
  }

  SECTION("weight-2 coefficients") {
    RationalSeries phi(Alphabet::X, 2);
    phi.set_coeff(Word::unit(Alphabet::X), Rational(1));
    phi.set_coeff(word_x({1}), Rational(2));
    phi.set_coeff(word_x({0, 1}), Rational(3));
    phi.set_coeff(word_x({1, 1}), Rational(5));
    phi.set_coeff(word_x({1, 0}), Rational(7));
    phi.set_coeff(word_x({0, 0}), Rational(11));
    const auto ps = phi_star(phi);
    CHECK(ps.coeff(Word::unit(Alphabet::Y)) == Rational(1));
    CHECK(ps.coeff(word_y({1})) == Rational(2));
    CHECK(ps.coeff(word_y({2})) == Rational(3));
    // The correction knocks off half of the y_2 coefficient:
    CHECK(ps.coeff(word_y({1, 1})) == Rational(5) - Rational(3, 2));
    CHECK(ps.terms().size() == 4);
  }

  SECTION("weight-3 coefficients including the cubic correction") {
    RationalSeries phi(Alphabet::X, 3);
    phi.set_coeff(Word::unit(Alphabet::X), Rational(1));
    phi.set_coeff(word_x({0, 1}), Rational(3));
    phi.set_coeff(word_x({0, 0, 1}), Rational(5));
    const auto ps = phi_star(phi);
    RationalSeries expected(Alphabet::Y, 3);
    expected.set_coeff(Word::unit(Alphabet::Y), Rational(1));
    expected.set_coeff(word_y({2}), Rational(3));
    expected.set_coeff(word_y({3}), Rational(5));
    expected.set_coeff(word_y({1, 1}), Rational(-3, 2));
    expected.set_coeff(word_y({1, 1, 1}), Rational(5, 3));
    CHECK(ps == expected);
  }

  SECTION("on the formal generating series it produces zeta_st_f") {
    const ZfSeries phi = zeta_sh_series(3);
    const ZfSeries ps = phi_star(phi);
    for (int w = 0; w <= 3; ++w)
      for (const Word& v : enumerate_words(Alphabet::Y, w)) CHECK(ps.coeff(v) == zeta_st_f(v));
    // Spot check: the double y_1 coefficient is -zeta(2)/2.
    CHECK(ps.coeff(word_y({1, 1})) ==
          Rational(-1, 2) * ZfElement::symbol(word_x({0, 1})));
  }
}

TEST_CASE("check_dm on rational series", "[schemes]") {
  SECTION("the unit series is a member with lambda = 0") {
    const auto rep = check_dm(RationalSeries::unit(Alphabet::X, 4),
                              std::optional<Rational>(Rational(0)));
    CHECK(rep.ok());
    CHECK(rep.bound == 4);
    REQUIRE(rep.conditions.size() == 4);
    for (const auto& c : rep.conditions) {
      CHECK(c.checked);
      CHECK(c.ok);
    }
  }

  SECTION("a nonzero linear coefficient is caught with its witness") {
    RationalSeries phi = RationalSeries::unit(Alphabet::X, 3);
    phi.set_coeff(word_x({0}), Rational(1));
    const auto rep = check_dm(phi, std::optional<Rational>());
    CHECK_FALSE(rep.ok());
    const auto& lin = rep.condition("linear-vanishing");
    CHECK_FALSE(lin.ok);
    REQUIRE(lin.witness.size() == 1);
    CHECK(lin.witness[0] == word_x({0}));
    CHECK_FALSE(rep.condition("normalization").checked);
  }

  SECTION("a shuffle defect is caught with the failing pair") {
    RationalSeries phi = RationalSeries::unit(Alphabet::X, 3);
    phi.set_coeff(word_x({0, 1}), Rational(1));
    const auto rep = check_dm(phi, std::optional<Rational>());
    CHECK(rep.condition("linear-vanishing").ok);
    const auto& sh = rep.condition("shuffle-grouplike");
    CHECK_FALSE(sh.ok);
    REQUIRE(sh.witness.size() == 2);
    CHECK(sh.witness[0] == word_x({0}));
    CHECK(sh.witness[1] == word_x({1}));
    CHECK_FALSE(rep.ok());
  }

  SECTION("exp of a multiple of [x_0, x_1] is a member at bound 3") {
    const Rational c(7, 3);
    const RationalSeries phi = exp_conc(bracket(letter_series(0, 3), letter_series(1, 3)).scaled(c));
    const auto rep = check_dm(phi, std::optional<Rational>(c));
    CHECK(rep.ok());
  }

  SECTION("the same exponential fails at bound 4") {
    const Rational c(7, 3);
    const RationalSeries phi = exp_conc(bracket(letter_series(0, 4), letter_series(1, 4)).scaled(c));
    const auto rep = check_dm(phi, std::optional<Rational>(c));
    CHECK(rep.condition("linear-vanishing").ok);
    CHECK(rep.condition("shuffle-grouplike").ok);
    const auto& st = rep.condition("star-stuffle-grouplike");
    CHECK_FALSE(st.ok);
    REQUIRE(st.witness.size() == 2);
    CHECK(st.witness[0] == word_y({1}));
    CHECK(st.witness[1] == word_y({1, 2}));
  }
}

TEST_CASE("check_dm on the formal generating series", "[schemes]") {
  const ZfSeries phi = zeta_sh_series(4);
  const ZfElement lam = zf_value({2});
  const auto rep = check_dm(phi, std::optional<ZfElement>(lam), ZfEq{});
  CHECK(rep.ok());
  for (const auto& c : rep.conditions) CHECK(c.checked);

  // Weight-4 consequence of membership: the x_0^3 x_1 coefficient is
  // (2/5) lambda^2 modulo relations.
  CHECK(zctx().equal(phi.coeff(word_x({0, 0, 0, 1})), Rational(2, 5) * (lam * lam), 4));
}

TEST_CASE("check_bm on rational series", "[schemes]") {
  SECTION("the unit series is a member") {
    const auto rep = check_bm(RationalSeries::unit(Alphabet::B, 3));
    CHECK(rep.ok());
    CHECK_FALSE(rep.condition("normalization").checked);
  }

  SECTION("exp of a multiple of b_1 is a member with zero normalization") {
    RationalSeries arg(Alphabet::B, 5);
    arg.set_coeff(word_b({1}), Rational(5, 7));
    const std::array<Rational, 3> zeros = {Rational(0), Rational(0), Rational(0)};
    const auto rep = check_bm(exp_conc(arg), std::optional<std::array<Rational, 3>>(zeros));
    CHECK(rep.ok());
    CHECK(rep.condition("normalization").checked);
  }

  SECTION("a nonzero b_0 coefficient is caught") {
    RationalSeries phi = RationalSeries::unit(Alphabet::B, 2);
    phi.set_coeff(word_b({0}), Rational(1));
    const auto rep = check_bm(phi);
    const auto& van = rep.condition("b0-vanishing");
    CHECK_FALSE(van.ok);
    REQUIRE(van.witness.size() == 1);
    CHECK(van.witness[0] == word_b({0}));
  }

  SECTION("adding b_2 alone breaks both the product and the symmetry") {
    RationalSeries phi = RationalSeries::unit(Alphabet::B, 3);
    phi.set_coeff(word_b({2}), Rational(1));
    const auto rep = check_bm(phi);
    const auto& gl = rep.condition("balanced-grouplike");
    CHECK_FALSE(gl.ok);
    REQUIRE(gl.witness.size() == 2);
    CHECK(gl.witness[0] == word_b({1}));
    CHECK(gl.witness[1] == word_b({1}));
    const auto& sym = rep.condition("tau-symmetry");
    CHECK_FALSE(sym.ok);
    REQUIRE(sym.witness.size() == 2);
    CHECK(sym.witness[0] == word_b({2}));
    CHECK(sym.witness[1] == word_b({1, 0}));
  }
}

TEST_CASE("theta_embed of the formal series is a balanced member", "[schemes]") {
  const ZfSeries phi = zeta_sh_series(4);
  const ZfSeries Phi = theta_embed(phi);
  const std::array<ZfElement, 3> norms = {zf_value({2}), zf_value({4}), zf_value({6})};
  const auto rep = check_bm(Phi, std::optional<std::array<ZfElement, 3>>(norms), ZfEq{});
  CHECK(rep.ok());
  // b_6 lies outside the bound, but b_2 and b_4 are inside, so the
  // normalization condition did run.
  CHECK(rep.condition("normalization").checked);
}

TEST_CASE("theta_embed coefficients agree with p", "[schemes]") {
  const ZfSeries Phi = theta_embed(zeta_sh_series(4));
  for (int w = 0; w <= 4; ++w)
    for (const Word& u : enumerate_words(Alphabet::B, w)) CHECK(Phi.coeff(u) == p_project(u));
}

TEST_CASE("theta_invert undoes theta_embed", "[schemes]") {
  SECTION("over the rationals") {
    const RationalSeries phi =
        exp_conc(lie_series({Rational(3), Rational(0), Rational(5), Rational(7), Rational(-2)}, 4));
    REQUIRE(is_grouplike(phi, DiamondRule::Shuffle).ok);
    CHECK(theta_invert(theta_embed(phi)) == phi);
  }

  SECTION("over the formal value algebra") {
    const ZfSeries phi = zeta_sh_series(4);
    CHECK(theta_invert(theta_embed(phi)) == phi);
  }
}

TEST_CASE("p on explicit words", "[schemes]") {
  CHECK(p_project(word_b({2, 3})) == zf_value({2, 3}));
  CHECK(p_project(word_b({0})).is_zero());
  CHECK(p_project(word_b({0, 0})).is_zero());
  CHECK(p_project(word_b({1, 1})) == Rational(-1, 2) * zf_value({2}));
  CHECK(p_project(Word::unit(Alphabet::B)) == ZfElement(Rational(1)));
  CHECK_THROWS_AS(p_project(word_b({2, 3}), 4), std::invalid_argument);
  CHECK(p_project(word_b({2, 3}), 5) == zf_value({2, 3}));
}

TEST_CASE("p kills the quotient ideal", "[schemes]") {
  for (int w = 1; w <= 4; ++w) {
    const WordBasis basis = WordBasis::of_weight(Alphabet::B, w);
    for (const RatVector& v : gctx().rel(w).basis()) {
      const ZfElement img = p_project(basis.to_poly(v, Alphabet::B));
      CHECK(zctx().equal(img, ZfElement(), w));
    }
  }
}

TEST_CASE("p is multiplicative modulo relations", "[schemes]") {
  for (int a = 1; a <= 2; ++a)
    for (int b = a; a + b <= 4; ++b)
      for (const Word& u : enumerate_words(Alphabet::B, a))
        for (const Word& v : enumerate_words(Alphabet::B, b)) {
          if (a == b && v < u) continue;
          const ZfElement lhs = p_project(quasi_shuffle(u, v, DiamondRule::Balanced));
          const ZfElement rhs = p_project(u) * p_project(v);
          CHECK(zctx().equal(lhs, rhs, a + b));
        }
}

TEST_CASE("p is tau-symmetric modulo relations", "[schemes]") {
  for (int w = 1; w <= 5; ++w)
    for (const Word& y : enumerate_words(Alphabet::Y, w)) {
      const Word v = theta_y_word(y);
      CHECK(zctx().equal(p_project(tau(v)), p_project(v), w));
    }
}

TEST_CASE("ihara product", "[schemes]") {
  SECTION("frozen small example") {
    RationalSeries G = RationalSeries::unit(Alphabet::X, 2);
    G.set_coeff(word_x({0}), Rational(1));
    RationalSeries H = RationalSeries::unit(Alphabet::X, 2);
    H.set_coeff(word_x({1}), Rational(1));
    RationalSeries expected = RationalSeries::unit(Alphabet::X, 2);
    expected.set_coeff(word_x({0}), Rational(1));
    expected.set_coeff(word_x({1}), Rational(1));
    expected.set_coeff(word_x({1, 0}), Rational(1));
    CHECK(ihara_mul(G, H) == expected);
  }

  SECTION("the unit series is a two-sided unit") {
    std::mt19937 rng(577215);
    const RationalSeries one = RationalSeries::unit(Alphabet::X, 4);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> c;
      for (int i = 0; i < 8; ++i) c.push_back(small_rational(rng));
      const RationalSeries G = exp_conc(lie_series(c, 4));
      CHECK(ihara_mul(G, one) == G);
      CHECK(ihara_mul(one, G) == G);
    }
  }

  SECTION("associativity on grouplike series") {
    std::mt19937 rng(662607);
    for (int trial = 0; trial < 2; ++trial) {
      std::vector<RationalSeries> g;
      for (int k = 0; k < 3; ++k) {
        std::vector<Rational> c;
        for (int i = 0; i < 8; ++i) c.push_back(small_rational(rng));
        g.push_back(exp_conc(lie_series(c, 4)));
        REQUIRE(is_grouplike(g.back(), DiamondRule::Shuffle).ok);
      }
      CHECK(ihara_mul(ihara_mul(g[0], g[1]), g[2]) == ihara_mul(g[0], ihara_mul(g[1], g[2])));
    }
  }

  SECTION("requires a unit constant term") {
    const RationalSeries zero(Alphabet::X, 2);
    CHECK_THROWS_AS(ihara_mul(zero, RationalSeries::unit(Alphabet::X, 2)), std::invalid_argument);
  }
}

namespace {

// Re-verify a linearized double-shuffle solution directly against the
// defining conditions, bypassing the matrix assembly.
void verify_dm0_solution(const GradedPoly& f, int w) {
  for (int a = 1; 2 * a <= w; ++a)
    for (const Word& u : enumerate_words(Alphabet::X, a))
      for (const Word& v : enumerate_words(Alphabet::X, w - a)) {
        Rational dot = 0;
        const GradedPoly prod = quasi_shuffle(u, v, DiamondRule::Shuffle);
        for (const auto& [t, c] : prod.terms()) dot += c * f.coeff(t);
        CHECK(dot == 0);
      }
  GradedPoly psi = pi_y(f);
  const Rational cw = psi.coeff(word_y({w}));
  if (w >= 2 && cw != 0) {
    const Rational sign = (w % 2 == 1) ? Rational(1) : Rational(-1);
    psi.add_term(word_y(std::vector<int>(static_cast<size_t>(w), 1)), (sign / w) * cw);
  }
  for (int a = 1; 2 * a <= w; ++a)
    for (const Word& p : enumerate_words(Alphabet::Y, a))
      for (const Word& q : enumerate_words(Alphabet::Y, w - a)) {
        Rational dot = 0;
        const GradedPoly prod = quasi_shuffle(p, q, DiamondRule::Stuffle);
        for (const auto& [t, c] : prod.terms()) dot += c * psi.coeff(t);
        CHECK(dot == 0);
      }
}

// Same for the linearized balanced conditions.
void verify_bm0_solution(const GradedPoly& f, int w) {
  if (w == 2 || w == 4 || w == 6) CHECK(f.coeff(word_b({w})) == 0);
  for (int a = 1; 2 * a <= w; ++a)
    for (const Word& u : enumerate_words(Alphabet::B, a))
      for (const Word& v : enumerate_words(Alphabet::B, w - a)) {
        Rational dot = 0;
        const GradedPoly prod = quasi_shuffle(u, v, DiamondRule::Balanced);
        for (const auto& [t, c] : prod.terms()) dot += c * f.coeff(t);
        CHECK(dot == 0);
      }
  for (const Word& y : enumerate_words(Alphabet::Y, w)) {
    const Word v = theta_y_word(y);
    CHECK(f.coeff(v) == f.coeff(tau(v)));
  }
}

}  // namespace

TEST_CASE("linearized double-shuffle tangent spaces", "[schemes]") {
  CHECK(linearized_dm0(2).empty());
  CHECK(linearized_dm0(4).empty());

  const auto wt3 = linearized_dm0(3);
  REQUIRE(wt3.size() == 1);
  CHECK_FALSE(wt3[0].is_zero());
  CHECK(wt3[0].is_homogeneous());
  CHECK(wt3[0].max_weight() == 3);
  verify_dm0_solution(wt3[0], 3);

  const auto wt5 = linearized_dm0(5);
  REQUIRE(wt5.size() == 1);
  verify_dm0_solution(wt5[0], 5);
}

TEST_CASE("linearized balanced tangent spaces", "[schemes]") {
  const auto wt1 = linearized_bm0(1);
  REQUIRE(wt1.size() == 1);
  CHECK(wt1[0] == GradedPoly(word_b({1})));

  CHECK(linearized_bm0(2).empty());

  for (const GradedPoly& f : linearized_bm0(3)) {
    CHECK(f.is_homogeneous());
    verify_bm0_solution(f, 3);
  }
}

TEST_CASE("scheme reports reject unknown condition names", "[schemes]") {
  const auto rep = check_bm(RationalSeries::unit(Alphabet::B, 1));
  CHECK_THROWS_AS(rep.condition("no-such-condition"), std::invalid_argument);
}
