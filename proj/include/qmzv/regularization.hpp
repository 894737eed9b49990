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

#include "qmzv/linear_maps.hpp"
#include "qmzv/quasi_shuffle.hpp"

namespace qmzv {

// Polynomial in a formal variable T over the b_0-free span: terms c * w T^n
// with w a B-word not starting with b_0.
class PolyWithT {
 public:
  using Key = std::pair<Word, int>;
  using Terms = std::map<Key, Rational>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Word& w, int n) const {
    auto it = terms_.find(Key{w, n});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Word& w, int n, const Rational& c) {
    if (c == 0) return;
    if (starts_with_b0(w)) throw std::invalid_argument("PolyWithT words must not start with b_0");
    if (n < 0) throw std::invalid_argument("negative T-power");
    auto [it, fresh] = terms_.emplace(Key{w, n}, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PolyWithT& operator+=(const PolyWithT& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  friend bool operator==(const PolyWithT& a, const PolyWithT& b) { return a.terms_ == b.terms_; }

  // The T = 0 part as a plain polynomial.
  GradedPoly at_zero() const {
    GradedPoly out(Alphabet::B);
    for (const auto& [k, c] : terms_)
      if (k.second == 0) out.add_term(k.first, c);
    return out;
  }

 private:
  Terms terms_;
};

inline Word b0_power_word(int n) { return Word(Alphabet::B, std::vector<int>(n, 0)); }

inline int leading_count(const Word& w, int letter) {
  int n = 0;
  for (int v : w.letters()) {
    if (v != letter) break;
    ++n;
  }
  return n;
}

inline int trailing_count(const Word& w, int letter) {
  int n = 0;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (*it != letter) break;
    ++n;
  }
  return n;
}

// w T^n  |->  w *_b b_0^{*_b n}, using b_0^{*_b n} = n! b_0^n (b_0 never
// merges under the balanced rule).
inline GradedPoly reg_t_forward(const PolyWithT& p) {
  GradedPoly out(Alphabet::B);
  for (const auto& [k, c] : p.terms()) {
    GradedPoly t = quasi_shuffle(GradedPoly(k.first), GradedPoly(b0_power_word(k.second)),
                                 DiamondRule::Balanced);
    t *= c * Rational(factorial(static_cast<unsigned>(k.second)));
    out += t;
  }
  return out;
}

// Inverse of reg_t_forward by triangular elimination on the leading-b_0
// count: the top layer of q *_b b_0^{*n} is n! b_0^n q exactly.
inline PolyWithT reg_t_inverse(const GradedPoly& p) {
  if (p.alphabet() != Alphabet::B) throw std::invalid_argument("expected a B-polynomial");
  PolyWithT out;
  GradedPoly rest = p;
  while (!rest.is_zero()) {
    int top = 0;
    for (const auto& [w, c] : rest.terms()) top = std::max(top, leading_count(w, 0));
    if (top == 0) {
      for (const auto& [w, c] : rest.terms()) out.add_term(w, 0, c);
      break;
    }
    GradedPoly stripped(Alphabet::B);
    for (const auto& [w, c] : rest.terms())
      if (leading_count(w, 0) == top) stripped.add_term(w.suffix_from(top), c);
    const Rational scale = Rational(1) / Rational(factorial(static_cast<unsigned>(top)));
    for (const auto& [w, c] : stripped.terms()) out.add_term(w, top, c * scale);
    // (1/top!) * (stripped *_b b_0^{*top}) = stripped *_b b_0^top
    rest -= quasi_shuffle(stripped, GradedPoly(b0_power_word(top)), DiamondRule::Balanced);
  }
  return out;
}

// T = 0 evaluation of the inverse: the balanced regularization.
inline GradedPoly reg_balanced(const GradedPoly& p) {
  return reg_t_inverse(p).at_zero();
}

// Shuffle regularization on Q<X>: the algebra morphism that fixes words
// which neither start with x_1 nor end with x_0 and kills the polynomial
// generators x_0, x_1.  Computed by peeling leading x_1 and trailing x_0
// layers; x_1^{shuffle n} = n! x_1^n makes each layer exactly removable.
inline GradedPoly reg_shuffle(const GradedPoly& p) {
  if (p.alphabet() != Alphabet::X) throw std::invalid_argument("expected an X-polynomial");
  GradedPoly rest = p;
  while (true) {  // left: leading x_1
    int top = 0;
    for (const auto& [w, c] : rest.terms()) top = std::max(top, leading_count(w, 1));
    if (top == 0) break;
    GradedPoly stripped(Alphabet::X);
    for (const auto& [w, c] : rest.terms())
      if (leading_count(w, 1) == top) stripped.add_term(w.suffix_from(top), c);
    rest -= quasi_shuffle(GradedPoly(Word(Alphabet::X, std::vector<int>(top, 1))), stripped,
                          DiamondRule::Shuffle);
  }
  while (true) {  // right: trailing x_0
    int top = 0;
    for (const auto& [w, c] : rest.terms()) top = std::max(top, trailing_count(w, 0));
    if (top == 0) break;
    GradedPoly stripped(Alphabet::X);
    for (const auto& [w, c] : rest.terms())
      if (trailing_count(w, 0) == top) stripped.add_term(w.prefix(w.size() - top), c);
    rest -= quasi_shuffle(stripped, GradedPoly(Word(Alphabet::X, std::vector<int>(top, 0))),
                          DiamondRule::Shuffle);
  }
  return rest;
}

inline GradedPoly reg_shuffle(const Word& w) { return reg_shuffle(GradedPoly(w)); }

// Stuffle regularization on Q<Y>: kills the generator y_1, identity on words
// not starting with y_1.  Here y_1^{* n} has lower-order terms, so the true
// stuffle power is subtracted, not the plain word power.
inline GradedPoly reg_stuffle(const GradedPoly& p) {
  if (p.alphabet() != Alphabet::Y) throw std::invalid_argument("expected a Y-polynomial");
  GradedPoly rest = p;
  while (true) {
    int top = 0;
    for (const auto& [w, c] : rest.terms()) top = std::max(top, leading_count(w, 1));
    if (top == 0) break;
    GradedPoly stripped(Alphabet::Y);
    for (const auto& [w, c] : rest.terms())
      if (leading_count(w, 1) == top) stripped.add_term(w.suffix_from(top), c);
    GradedPoly y1_pow = quasi_shuffle_power(word_y({1}), top, DiamondRule::Stuffle);
    GradedPoly sub = quasi_shuffle(y1_pow, stripped, DiamondRule::Stuffle);
    sub *= Rational(1) / Rational(factorial(static_cast<unsigned>(top)));
    rest -= sub;
  }
  return rest;
}

inline GradedPoly reg_stuffle(const Word& w) { return reg_stuffle(GradedPoly(w)); }

}  // namespace qmzv
