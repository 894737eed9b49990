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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qmzv/gf.hpp"
#include "qmzv/linalg.hpp"
#include "qmzv/quasi_shuffle.hpp"
#include "qmzv/series.hpp"
#include "qmzv/zf.hpp"

namespace qmzv {

// ---------------------------------------------------------------------------
// phi |-> phi_*
// ---------------------------------------------------------------------------

// Stuffle-side companion of a series over X:
//
//   phi_* = exp( sum_{n>=2} ((-1)^{n-1}/n) (pi_Y phi | y_n) y_1^n ) . pi_Y(phi)
//
// with concatenation products over Y, truncated at the bound of phi.  The
// exponential factor multiplies from the left; since it is supported on
// powers of the single letter y_1 the order inside the exponent is immaterial.
template <class R>
TruncatedSeries<R> phi_star(const TruncatedSeries<R>& phi) {
  if (phi.alphabet() != Alphabet::X) throw std::invalid_argument("phi_star expects a series over X");
  const int W = phi.bound();
  const TruncatedSeries<R> piy =
      phi.mapped(Alphabet::Y, [](const Word& w) { return pi_y_word(w); });
  TruncatedSeries<R> expo(Alphabet::Y, W);
  for (int n = 2; n <= W; ++n) {
    const R cn = piy.coeff(word_y({n}));
    if (CoeffOps<R>::is_zero(cn)) continue;
    const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
    expo.add_coeff(word_y(std::vector<int>(static_cast<size_t>(n), 1)), (sign / n) * cn);
  }
  return exp_conc(expo) * piy;
}

// ---------------------------------------------------------------------------
// Membership reports
// ---------------------------------------------------------------------------

// One membership condition: `checked` is false when the optional data needed
// for the condition was not supplied; `witness` holds the first word (or pair
// of words) violating the condition when it fails.
struct SchemeCondition {
  std::string name;
  bool checked = true;
  bool ok = true;
  std::vector<Word> witness;

  friend bool operator==(const SchemeCondition&, const SchemeCondition&) = default;
};

struct SchemeReport {
  int bound = 0;
  std::vector<SchemeCondition> conditions;

  bool ok() const {
    for (const SchemeCondition& c : conditions)
      if (c.checked && !c.ok) return false;
    return true;
  }
  const SchemeCondition& condition(const std::string& name) const {
    for (const SchemeCondition& c : conditions)
      if (c.name == name) return c;
    throw std::invalid_argument("no condition named " + name);
  }

  friend bool operator==(const SchemeReport&, const SchemeReport&) = default;
};

namespace detail {

inline void to_condition(const GrouplikeReport& g, SchemeCondition& c) {
  c.ok = g.ok;
  if (g.witness) c.witness = {g.witness->first, g.witness->second};
}

}  // namespace detail

// Membership test for the double-shuffle scheme, truncated at the bound of
// phi.  Conditions:
//   (i)   (phi|x_0) = (phi|x_1) = 0,
//   (ii)  phi is grouplike for the shuffle product,
//   (iii) phi_* is grouplike for the stuffle product,
//   (iv)  (phi|x_0 x_1) = lambda   (checked only when lambda is supplied).
// `eq` decides coefficient equality; pass a relation-aware predicate when the
// coefficients are ZfElement values.
template <class R, class Eq = std::equal_to<R>>
SchemeReport check_dm(const TruncatedSeries<R>& phi,
                      const std::optional<R>& lambda = std::nullopt, Eq eq = Eq{}) {
  if (phi.alphabet() != Alphabet::X) throw std::invalid_argument("check_dm expects a series over X");
  SchemeReport rep;
  rep.bound = phi.bound();

  SchemeCondition lin{"linear-vanishing"};
  for (const Word& w : {word_x({0}), word_x({1})}) {
    if (w.weight() > phi.bound()) continue;
    if (!eq(phi.coeff(w), CoeffOps<R>::zero())) {
      lin.ok = false;
      lin.witness = {w};
      break;
    }
  }
  rep.conditions.push_back(std::move(lin));

  SchemeCondition sh{"shuffle-grouplike"};
  detail::to_condition(is_grouplike(phi, DiamondRule::Shuffle, eq), sh);
  rep.conditions.push_back(std::move(sh));

  SchemeCondition st{"star-stuffle-grouplike"};
  detail::to_condition(is_grouplike(phi_star(phi), DiamondRule::Stuffle, eq), st);
  rep.conditions.push_back(std::move(st));

  SchemeCondition norm{"normalization"};
  if (lambda && phi.bound() >= 2) {
    const Word x01 = word_x({0, 1});
    if (!eq(phi.coeff(x01), *lambda)) {
      norm.ok = false;
      norm.witness = {x01};
    }
  } else {
    norm.checked = false;
  }
  rep.conditions.push_back(std::move(norm));
  return rep;
}

// Membership test for the balanced scheme, truncated at the bound of Phi.
// Conditions:
//   (i)   (Phi|b_0) = 0,
//   (ii)  Phi is grouplike for the balanced product,
//   (iii) (Phi|tau(w)) = (Phi|w) for every b_0-free word w inside the bound,
//   (iv)  (Phi|b_2), (Phi|b_4), (Phi|b_6) equal the supplied triple
//         (each entry checked only when its weight fits inside the bound).
template <class R, class Eq = std::equal_to<R>>
SchemeReport check_bm(const TruncatedSeries<R>& Phi,
                      const std::optional<std::array<R, 3>>& normalization = std::nullopt,
                      Eq eq = Eq{}) {
  if (Phi.alphabet() != Alphabet::B) throw std::invalid_argument("check_bm expects a series over B");
  SchemeReport rep;
  rep.bound = Phi.bound();
  const int W = Phi.bound();

  SchemeCondition van{"b0-vanishing"};
  if (W >= 1 && !eq(Phi.coeff(word_b({0})), CoeffOps<R>::zero())) {
    van.ok = false;
    van.witness = {word_b({0})};
  }
  rep.conditions.push_back(std::move(van));

  SchemeCondition gl{"balanced-grouplike"};
  detail::to_condition(is_grouplike(Phi, DiamondRule::Balanced, eq), gl);
  rep.conditions.push_back(std::move(gl));

  SchemeCondition sym{"tau-symmetry"};
  for (int v = 1; v <= W && sym.ok; ++v) {
    // b_0-free words of weight v are the images of Y-words under relabelling.
    // tau(w) is b_0-free only when w is a power of b_1 (then it is fixed), so
    // enumerating all b_0-free w sees every non-fixed pair exactly once.
    for (const Word& y : enumerate_words(Alphabet::Y, v)) {
      const Word w = theta_y_word(y);
      const Word t = tau(w);
      if (t == w) continue;
      if (!eq(Phi.coeff(w), Phi.coeff(t))) {
        sym.ok = false;
        sym.witness = {w, t};
        break;
      }
    }
  }
  rep.conditions.push_back(std::move(sym));

  SchemeCondition norm{"normalization"};
  if (normalization) {
    bool any_checked = false;
    for (int i = 0; i < 3; ++i) {
      const int k = 2 * (i + 1);
      if (k > W) continue;
      any_checked = true;
      const Word bk = word_b({k});
      if (!eq(Phi.coeff(bk), (*normalization)[static_cast<size_t>(i)])) {
        norm.ok = false;
        norm.witness = {bk};
        break;
      }
    }
    norm.checked = any_checked;
  } else {
    norm.checked = false;
  }
  rep.conditions.push_back(std::move(norm));
  return rep;
}

// ---------------------------------------------------------------------------
// theta: series over X -> series over B
// ---------------------------------------------------------------------------

// theta(phi) = theta_X^anti(phi) . theta_Y(phi_*), a concatenation product of
// B-series.  The left factor is supported on {b_0, b_1}-words, the right one
// on b_0-free words.
template <class R>
TruncatedSeries<R> theta_embed(const TruncatedSeries<R>& phi) {
  if (phi.alphabet() != Alphabet::X) throw std::invalid_argument("theta_embed expects a series over X");
  const TruncatedSeries<R> left = phi.mapped(
      Alphabet::B, [](const Word& w) { return std::optional<Word>(theta_x_anti_word(w)); });
  const TruncatedSeries<R> right = phi_star(phi).mapped(
      Alphabet::B, [](const Word& w) { return std::optional<Word>(theta_y_word(w)); });
  return left * right;
}

// Recover phi from Phi = theta_embed(phi), reading only coefficients of Phi
// on {b_0, b_1}-words.  That restriction factors as
//
//   r = theta_X^anti(phi) . C,      C = sum_j (r | b_1^j) b_1^j,
//
// because the only b_0-free {b_0, b_1}-words are the powers of b_1 and
// theta_X^anti(phi) has coefficient (phi|x_1^j) = 0 on them for j >= 1
// whenever phi is shuffle-grouplike with vanishing linear part.  Dividing by
// C and undoing the reverse-and-relabel embedding returns phi.
template <class R>
TruncatedSeries<R> theta_invert(const TruncatedSeries<R>& Phi) {
  if (Phi.alphabet() != Alphabet::B) throw std::invalid_argument("theta_invert expects a series over B");
  const int W = Phi.bound();
  const TruncatedSeries<R> r = Phi.restricted([](const Word& w) {
    for (int l : w.letters())
      if (l > 1) return false;
    return true;
  });
  TruncatedSeries<R> C(Alphabet::B, W);
  for (int j = 0; j <= W; ++j) {
    const Word b1j = word_b(std::vector<int>(static_cast<size_t>(j), 1));
    C.set_coeff(b1j, r.coeff(b1j));
  }
  const TruncatedSeries<R> left = r * C.inverse();
  return left.mapped(Alphabet::X, [](const Word& w) {
    return std::optional<Word>(word_x(w.reversed().letters()));
  });
}

// ---------------------------------------------------------------------------
// The projection p
// ---------------------------------------------------------------------------

// p(w) for a word w over B: sum over all factorizations w = u.v with u a
// {b_0, b_1}-word and v b_0-free of
//
//   zeta_sh_f( (theta_X^anti)^{-1}(u) ) * zeta_st_f( theta_Y^{-1}(v) ).
//
// Factorizations violating either support condition contribute zero.
inline ZfElement p_project(const Word& w) {
  if (w.alphabet() != Alphabet::B) throw std::invalid_argument("p_project expects a B-word");
  ZfElement out;
  const int n = static_cast<int>(w.letters().size());
  for (int i = 0; i <= n; ++i) {
    const auto ux = project_to_x_word(w.prefix(i));
    if (!ux) continue;
    const auto vy = project_to_y_word(w.suffix_from(i));
    if (!vy) continue;
    out += zeta_sh_f(ux->reversed()) * zeta_st_f(*vy);
  }
  return out;
}

inline ZfElement p_project(const Word& w, int weight_bound) {
  if (w.weight() > weight_bound) throw std::invalid_argument("word weight exceeds the stated bound");
  return p_project(w);
}

inline ZfElement p_project(const GradedPoly& p) {
  ZfElement out;
  for (const auto& [w, c] : p.terms()) out += c * p_project(w);
  return out;
}

// ---------------------------------------------------------------------------
// Ihara product
// ---------------------------------------------------------------------------

// G (*) H = G . kappa_G(H) where kappa_G is the concatenation-algebra
// endomorphism of series over X with kappa_G(x_0) = x_0 and
// kappa_G(x_1) = G^{-1} x_1 G.  G must have constant coefficient 1 so that
// the inverse exists; the result is truncated at the smaller bound.
template <class R>
TruncatedSeries<R> ihara_mul(const TruncatedSeries<R>& G, const TruncatedSeries<R>& H) {
  if (G.alphabet() != Alphabet::X || H.alphabet() != Alphabet::X)
    throw std::invalid_argument("ihara_mul expects series over X");
  G.require_unit_constant();
  const int W = std::min(G.bound(), H.bound());
  TruncatedSeries<R> x0(Alphabet::X, W);
  x0.set_coeff(word_x({0}), CoeffOps<R>::one());
  TruncatedSeries<R> x1(Alphabet::X, W);
  x1.set_coeff(word_x({1}), CoeffOps<R>::one());
  const TruncatedSeries<R> conj = G.inverse() * x1 * G;
  TruncatedSeries<R> kappa(Alphabet::X, W);
  for (const auto& [w, c] : H.terms()) {
    if (w.weight() > W) continue;
    TruncatedSeries<R> acc = TruncatedSeries<R>::unit(Alphabet::X, W);
    for (int l : w.letters()) acc = acc * (l == 0 ? x0 : conj);
    for (const auto& [u, cu] : acc.terms()) kappa.add_coeff(u, c * cu);
  }
  return G * kappa;
}

// ---------------------------------------------------------------------------
// Linearized membership conditions
// ---------------------------------------------------------------------------

// Homogeneous weight-w solutions of the double-shuffle conditions linearized
// at the unit with lambda = 0:
//   (f|x_0) = (f|x_1) = 0          (weight 1),
//   (f|x_0 x_1) = 0                (weight 2),
//   (f | u sh v) = 0               for all words u, v != 1 with |u|+|v| = w,
//   (psi(f) | p st q) = 0          for all Y-words p, q != 1 of total weight w,
// where psi(f) = pi_Y(f) + ((-1)^{w-1}/w) (pi_Y(f)|y_w) y_1^w is the
// linearization of f |-> f_*.
inline std::vector<GradedPoly> linearized_dm0(int w) {
  if (w < 1) throw std::invalid_argument("weight must be positive");
  const WordBasis basis = WordBasis::of_weight(Alphabet::X, w);
  const int n = basis.size();
  RatMatrix m(n);

  const auto unit_row = [&](const Word& target) {
    RatVector row(static_cast<size_t>(n), Rational(0));
    row[static_cast<size_t>(basis.index(target))] = Rational(1);
    m.add_row(std::move(row));
  };
  if (w == 1) {
    unit_row(word_x({0}));
    unit_row(word_x({1}));
  }
  if (w == 2) unit_row(word_x({0, 1}));

  for (int a = 1; 2 * a <= w; ++a) {
    const int b = w - a;
    for (const Word& u : enumerate_words(Alphabet::X, a)) {
      for (const Word& v : enumerate_words(Alphabet::X, b)) {
        if (a == b && v < u) continue;
        RatVector row(static_cast<size_t>(n), Rational(0));
        const GradedPoly prod = quasi_shuffle(u, v, DiamondRule::Shuffle);
        for (const auto& [t, c] : prod.terms()) row[static_cast<size_t>(basis.index(t))] += c;
        m.add_row(std::move(row));
      }
    }
  }

  std::vector<GradedPoly> psi;
  psi.reserve(static_cast<size_t>(n));
  const Word yw = word_y({w});
  const Word y1w = word_y(std::vector<int>(static_cast<size_t>(w), 1));
  for (const Word& u : basis.words()) {
    GradedPoly ps = pi_y(GradedPoly(u));
    if (w >= 2) {
      const Rational cw = ps.coeff(yw);
      if (cw != 0) {
        const Rational sign = (w % 2 == 1) ? Rational(1) : Rational(-1);
        ps.add_term(y1w, (sign / w) * cw);
      }
    }
    psi.push_back(std::move(ps));
  }
  for (int a = 1; 2 * a <= w; ++a) {
    const int b = w - a;
    for (const Word& p : enumerate_words(Alphabet::Y, a)) {
      for (const Word& q : enumerate_words(Alphabet::Y, b)) {
        if (a == b && q < p) continue;
        const GradedPoly prod = quasi_shuffle(p, q, DiamondRule::Stuffle);
        RatVector row(static_cast<size_t>(n), Rational(0));
        for (int i = 0; i < n; ++i)
          for (const auto& [t, c] : prod.terms())
            row[static_cast<size_t>(i)] += c * psi[static_cast<size_t>(i)].coeff(t);
        m.add_row(std::move(row));
      }
    }
  }

  std::vector<GradedPoly> out;
  for (const RatVector& v : kernel_basis(m)) out.push_back(basis.to_poly(v, Alphabet::X));
  return out;
}

// Homogeneous weight-w solutions of the balanced conditions linearized at the
// unit with all three normalization values set to zero:
//   (f|b_0) = 0                    (weight 1),
//   (f|b_2) = (f|b_4) = (f|b_6) = 0  (weights 2, 4, 6),
//   (f | u *_b v) = 0              for all words u, v != 1 with |u|+|v| = w,
//   (f|tau(v)) = (f|v)             for every b_0-free word v of weight w.
inline std::vector<GradedPoly> linearized_bm0(int w) {
  if (w < 1) throw std::invalid_argument("weight must be positive");
  const WordBasis basis = WordBasis::of_weight(Alphabet::B, w);
  const int n = basis.size();
  RatMatrix m(n);

  const auto unit_row = [&](const Word& target) {
    RatVector row(static_cast<size_t>(n), Rational(0));
    row[static_cast<size_t>(basis.index(target))] = Rational(1);
    m.add_row(std::move(row));
  };
  if (w == 1) unit_row(word_b({0}));
  if (w == 2 || w == 4 || w == 6) unit_row(word_b({w}));

  for (int a = 1; 2 * a <= w; ++a) {
    const int b = w - a;
    for (const Word& u : enumerate_words(Alphabet::B, a)) {
      for (const Word& v : enumerate_words(Alphabet::B, b)) {
        if (a == b && v < u) continue;
        RatVector row(static_cast<size_t>(n), Rational(0));
        const GradedPoly prod = quasi_shuffle(u, v, DiamondRule::Balanced);
        for (const auto& [t, c] : prod.terms()) row[static_cast<size_t>(basis.index(t))] += c;
        m.add_row(std::move(row));
      }
    }
  }

  for (const Word& y : enumerate_words(Alphabet::Y, w)) {
    const Word v = theta_y_word(y);
    const Word t = tau(v);
    if (t == v) continue;  // fixed words impose nothing
    RatVector row(static_cast<size_t>(n), Rational(0));
    row[static_cast<size_t>(basis.index(v))] = Rational(1);
    row[static_cast<size_t>(basis.index(t))] = Rational(-1);
    m.add_row(std::move(row));
  }

  std::vector<GradedPoly> out;
  for (const RatVector& v : kernel_basis(m)) out.push_back(basis.to_poly(v, Alphabet::B));
  return out;
}

}  // namespace qmzv
