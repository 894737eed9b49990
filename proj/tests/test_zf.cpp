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

#include "qmzv/quasi_shuffle.hpp"
#include "qmzv/zf.hpp"

using namespace qmzv;

namespace {
ZfElement Z(std::initializer_list<int> letters) {
  return ZfElement::symbol(word_x(std::vector<int>(letters)));
}

ZfContext& ctx() {
  static ZfContext c;
  return c;
}
}  // namespace

TEST_CASE("shuffle-regularized values", "[zf]") {
  CHECK(zeta_sh_f(word_x({0, 1})) == Z({0, 1}));
  CHECK(zeta_sh_f(word_x({1})).is_zero());
  CHECK(zeta_sh_f(word_x({0})).is_zero());
  CHECK(zeta_sh_f(word_x({1, 0, 1})) == Rational(-2) * Z({0, 1, 1}));
  CHECK(zeta_sh_f(Word::unit(Alphabet::X)) == ZfElement(Rational(1)));
}

TEST_CASE("zeta_sh_f is a shuffle morphism", "[zf]") {
  for (int lu = 1; lu <= 2; ++lu)
    for (int lv = 1; lv <= 5 - lu; ++lv)
      for (const Word& u : enumerate_words(Alphabet::X, lu))
        for (const Word& v : enumerate_words(Alphabet::X, lv)) {
          ZfElement lhs =
              zeta_sh_f(quasi_shuffle(GradedPoly(u), GradedPoly(v), DiamondRule::Shuffle));
          REQUIRE(lhs == zeta_sh_f(u) * zeta_sh_f(v));
        }
}

TEST_CASE("correction series coefficients", "[zf]") {
  auto c = stuffle_correction_coeffs(4);
  CHECK(c[0] == ZfElement(Rational(1)));
  CHECK(c[1].is_zero());
  CHECK(c[2] == Rational(-1, 2) * Z({0, 1}));
  CHECK(c[3] == Rational(1, 3) * Z({0, 0, 1}));
  ZfElement c4 = Rational(1, 4) * Z({0, 1, 0, 1}) + Rational(1, 2) * Z({0, 0, 1, 1}) -
                 Rational(1, 4) * Z({0, 0, 0, 1});
  CHECK(c[4] == c4);
  CHECK(Rational(1, 8) * (Z({0, 1}) * Z({0, 1})) - Rational(1, 4) * Z({0, 0, 0, 1}) == c4);
}

TEST_CASE("stuffle-regularized values", "[zf]") {
  CHECK(zeta_st_f(word_y({2, 3})) == Z({0, 1, 0, 0, 1}));
  CHECK(zeta_st_f(word_y({1})).is_zero());
  CHECK(zeta_st_f(word_y({1, 1})) == Rational(-1, 2) * Z({0, 1}));
  CHECK(zeta_st_f(word_y({1, 2})) == Rational(-2) * Z({0, 1, 1}));
  CHECK(zeta_st_f(word_y({1, 1, 1})) == Rational(1, 3) * Z({0, 0, 1}));
  CHECK(zf_value({2}) == Z({0, 1}));
  CHECK(zf_value({3, 1}) == Z({0, 0, 1, 1}));
}

TEST_CASE("relation pieces", "[zf]") {
  CHECK(ctx().rel(2).dim() == 0);
  CHECK(ctx().dim(2) == 1);
  CHECK(ctx().dim(0) == 1);

  ZfElement euler = Z({0, 0, 1}) - Z({0, 1, 1});
  CHECK(ctx().rel(3).contains(ctx().basis(3).to_vec(euler.poly())));
}

TEST_CASE("equality modulo relations", "[zf]") {
  CHECK(ctx().equal(zf_value({3}), zf_value({2, 1}), 3));
  CHECK_FALSE(ctx().equal(zf_value({2}), ZfElement(), 2));
  CHECK(ctx().equal(zf_value({2, 1}), zf_value({2, 1}), 3));
  CHECK_THROWS_AS(ctx().equal(zf_value({4}), ZfElement(), 3), std::invalid_argument);

  ZfElement z2 = zf_value({2});
  CHECK(ctx().equal(zf_value({4}), Rational(2, 5) * (z2 * z2), 4));
  CHECK(ctx().equal(zf_value({6}), Rational(8, 35) * (z2 * z2 * z2), 6));
}

TEST_CASE("stuffle multiplicativity modulo relations", "[zf]") {
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 5 - a; ++b)
      for (const Word& u : enumerate_words(Alphabet::Y, a))
        for (const Word& v : enumerate_words(Alphabet::Y, b)) {
          ZfElement lhs =
              zeta_st_f(quasi_shuffle(GradedPoly(u), GradedPoly(v), DiamondRule::Stuffle));
          REQUIRE(ctx().equal(lhs, zeta_st_f(u) * zeta_st_f(v), a + b));
        }
}

TEST_CASE("depth-2 double shuffle", "[zf]") {
  for (int k1 = 2; k1 <= 4; ++k1)
    for (int k2 = k1; k2 <= 4; ++k2) {
      const int K = k1 + k2;
      ZfElement stuffle_side = zf_value({k1, k2}) + zf_value({k2, k1}) + zf_value({K});
      ZfElement shuffle_side;
      for (int j = 2; j <= K - 1; ++j) {
        Rational coef(binomial(j - 1, k1 - 1) + binomial(j - 1, k2 - 1));
        shuffle_side += coef * zf_value({j, K - j});
      }
      // the shuffle side is the literal product, before any relations
      REQUIRE(shuffle_side == zf_value({k1}) * zf_value({k2}));
      REQUIRE(ctx().equal(stuffle_side, shuffle_side, K));
    }
}
