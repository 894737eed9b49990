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

#include "qmzv/basis.hpp"
#include "qmzv/linear_maps.hpp"
#include "qmzv/regularization.hpp"
#include "qmzv/series.hpp"

namespace qmzv {

// Element of the polynomial algebra on admissible-word symbols z_v.  Since
// the shuffle product of admissible words expands again over admissible
// words, every polynomial in the z_v normalizes to a rational constant plus
// a linear combination of single symbols; that expanded form is stored, as
// a polynomial over X supported on the unit and admissible words.
class ZfElement {
 public:
  ZfElement() : poly_(Alphabet::X) {}
  explicit ZfElement(const Rational& c) : poly_(Alphabet::X) {
    poly_.add_term(Word::unit(Alphabet::X), c);
  }
  explicit ZfElement(GradedPoly p) : poly_(std::move(p)) {
    if (poly_.alphabet() != Alphabet::X) throw std::invalid_argument("expected an X-polynomial");
    for (const auto& [w, c] : poly_.terms())
      if (!w.empty() && !is_admissible_x(w))
        throw std::invalid_argument("term is neither constant nor an admissible word");
  }

  static ZfElement symbol(const Word& v) { return ZfElement(GradedPoly(v)); }

  const GradedPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  int max_weight() const { return poly_.max_weight(); }
  Rational constant_term() const { return poly_.coeff(Word::unit(Alphabet::X)); }

  ZfElement& operator+=(const ZfElement& rhs) {
    poly_ += rhs.poly_;
    return *this;
  }
  ZfElement& operator-=(const ZfElement& rhs) {
    poly_ -= rhs.poly_;
    return *this;
  }
  ZfElement& operator*=(const Rational& c) {
    poly_ *= c;
    return *this;
  }

  friend ZfElement operator+(ZfElement a, const ZfElement& b) { return a += b; }
  friend ZfElement operator-(ZfElement a, const ZfElement& b) { return a -= b; }
  friend ZfElement operator-(ZfElement a) { return a *= Rational(-1); }
  friend ZfElement operator*(const Rational& c, ZfElement a) { return a *= c; }
  friend ZfElement operator*(const ZfElement& a, const ZfElement& b) {
    ZfElement out;
    out.poly_ = quasi_shuffle(a.poly_, b.poly_, DiamondRule::Shuffle);
    return out;
  }
  friend bool operator==(const ZfElement& a, const ZfElement& b) { return a.poly_ == b.poly_; }

 private:
  GradedPoly poly_;
};

// ZfElement works as a series coefficient ring (see series.hpp).
template <>
struct CoeffOps<ZfElement> {
  static ZfElement zero() { return ZfElement(); }
  static ZfElement one() { return ZfElement(Rational(1)); }
  static bool is_zero(const ZfElement& c) { return c.is_zero(); }
};

// Shuffle-regularized evaluation: the identity on admissible words,
// extended multiplicatively with the letters x_0, x_1 sent to zero.
inline ZfElement zeta_sh_f(const GradedPoly& p) { return ZfElement(reg_shuffle(p)); }
inline ZfElement zeta_sh_f(const Word& w) { return zeta_sh_f(GradedPoly(w)); }

// Coefficients c_0, c_1, ... of exp(sum_{n>=2} ((-1)^{n-1}/n) z_{x_0^{n-1}x_1} t^n)
// as a truncated power series in t; c_j carries weight j.
inline std::vector<ZfElement> stuffle_correction_coeffs(int jmax) {
  std::vector<ZfElement> arg(jmax + 1);
  for (int n = 2; n <= jmax; ++n) {
    std::vector<int> letters(n - 1, 0);
    letters.push_back(1);
    Rational sign = (n % 2 == 0) ? Rational(-1) : Rational(1);
    arg[n] = (sign / n) * ZfElement::symbol(word_x(std::move(letters)));
  }
  std::vector<ZfElement> out(jmax + 1);
  out[0] = ZfElement(Rational(1));
  std::vector<ZfElement> power(jmax + 1);  // arg^m / m!, updated in place
  power[0] = ZfElement(Rational(1));
  for (int m = 1; 2 * m <= jmax; ++m) {
    std::vector<ZfElement> next(jmax + 1);
    for (int i = 0; i <= jmax; ++i)
      for (int j = 2; i + j <= jmax; ++j)
        if (!power[i].is_zero() && !arg[j].is_zero()) next[i + j] += power[i] * arg[j];
    const Rational inv_m = Rational(1) / m;
    for (int i = 0; i <= jmax; ++i) {
      next[i] *= inv_m;
      out[i] += next[i];
    }
    power = std::move(next);
  }
  return out;
}

// Stuffle-regularized evaluation of a Y-word: sum over the splittings
// w = y_1^j u of c_j times the shuffle-regularized value of iota(u).
inline ZfElement zeta_st_f(const Word& w) {
  if (w.alphabet() != Alphabet::Y) throw std::invalid_argument("expected a Y-word");
  int lead = leading_count(w, 1);
  std::vector<ZfElement> c = stuffle_correction_coeffs(lead);
  ZfElement out;
  for (int j = 0; j <= lead; ++j) out += c[j] * zeta_sh_f(iota_word(w.suffix_from(j)));
  return out;
}

inline ZfElement zeta_st_f(const GradedPoly& p) {
  if (p.alphabet() != Alphabet::Y) throw std::invalid_argument("expected a Y-polynomial");
  ZfElement out;
  for (const auto& [w, c] : p.terms()) out += c * zeta_st_f(w);
  return out;
}

// The value attached to an index (k_1,...,k_d), all k_i >= 1; admissible
// indices agree with the plain symbol of the corresponding X-word.
inline ZfElement zf_value(const std::vector<int>& ks) {
  if (ks.empty()) return ZfElement(Rational(1));
  return zeta_st_f(word_y(ks));
}

// Graded relation pieces spanned by the stuffle defects
// zeta_st_f(u * v) - zeta_st_f(u) zeta_st_f(v), and equality modulo them.
class ZfContext {
 public:
  const WordBasis& basis(int w) {
    auto it = bases_.find(w);
    if (it == bases_.end()) {
      std::vector<Word> adm;
      for (const Word& v : enumerate_words(Alphabet::X, w))
        if (is_admissible_x(v)) adm.push_back(v);
      it = bases_.emplace(w, WordBasis(std::move(adm))).first;
    }
    return it->second;
  }

  const RelationSpace& rel(int w) {
    auto it = rels_.find(w);
    if (it != rels_.end()) return it->second;
    RelationSpace s(basis(w).size());
    for (int a = 1; 2 * a <= w; ++a)
      for (const Word& u : enumerate_words(Alphabet::Y, a))
        for (const Word& v : enumerate_words(Alphabet::Y, w - a)) {
          if (2 * a == w && v < u) continue;  // the defect is symmetric in u, v
          ZfElement defect =
              zeta_st_f(quasi_shuffle(GradedPoly(u), GradedPoly(v), DiamondRule::Stuffle)) -
              zeta_st_f(u) * zeta_st_f(v);
          if (!defect.is_zero()) s.insert(basis(w).to_vec(defect.poly()));
        }
    return rels_.emplace(w, std::move(s)).first->second;
  }

  // Normal form: subtract the relation projection per weight component.
  ZfElement reduce(const ZfElement& x) {
    GradedPoly out(Alphabet::X);
    const GradedPoly& p = x.poly();
    out.add_term(Word::unit(Alphabet::X), x.constant_term());
    for (int w = 2; w <= p.max_weight(); ++w) {
      GradedPoly comp = p.component(w);
      if (comp.is_zero()) continue;
      RatVector v = basis(w).to_vec(comp);
      rel(w).reduce(v);
      out += basis(w).to_poly(v, Alphabet::X);
    }
    return ZfElement(std::move(out));
  }

  bool equal(const ZfElement& a, const ZfElement& b, int weight_bound) {
    ZfElement d = a - b;
    if (d.max_weight() > weight_bound) throw std::invalid_argument("weight above bound");
    return reduce(d).is_zero();
  }

  // Dimension of the weight-w graded piece of the quotient; weight 0 is
  // the rational constants.
  int dim(int w) { return w == 0 ? 1 : basis(w).size() - rel(w).dim(); }

 private:
  std::map<int, WordBasis> bases_;
  std::map<int, RelationSpace> rels_;
};

}  // namespace qmzv
