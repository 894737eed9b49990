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

#include <functional>
#include <map>
#include <utility>

#include "qmzv/rational.hpp"
#include "qmzv/word.hpp"

namespace qmzv {

// Finite Q-linear combination of words over a fixed alphabet.  Terms are
// kept in canonical word order and zero coefficients are never stored.
class GradedPoly {
 public:
  using Terms = std::map<Word, Rational>;

  explicit GradedPoly(Alphabet a) : alpha_(a) {}
  GradedPoly(const Word& w, Rational c = 1) : alpha_(w.alphabet()) { add_term(w, std::move(c)); }

  static GradedPoly zero(Alphabet a) { return GradedPoly(a); }
  static GradedPoly unit(Alphabet a) { return GradedPoly(Word::unit(a)); }

  Alphabet alphabet() const { return alpha_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  Rational coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    if (w.alphabet() != alpha_) throw std::invalid_argument("alphabet mismatch");
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GradedPoly& operator+=(const GradedPoly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
  }
  GradedPoly& operator-=(const GradedPoly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
  }
  GradedPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
  }

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const Rational& c, GradedPoly p) { return p *= c; }
  friend GradedPoly operator-(GradedPoly p) { return p *= Rational(-1); }
  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.alpha_ == b.alpha_ && a.terms_ == b.terms_;
  }

  int max_weight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }

  bool is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.weight() == terms_.rbegin()->first.weight();
  }

  // The weight-w part (terms are weight-sorted, so this is a range scan).
  GradedPoly component(int w) const {
    GradedPoly out(alpha_);
    for (const auto& [word, c] : terms_) {
      if (word.weight() > w) break;
      if (word.weight() == w) out.terms_.emplace(word, c);
    }
    return out;
  }

  // Extend a word-level map linearly; `target` is the image alphabet.
  GradedPoly map_words(Alphabet target, const std::function<GradedPoly(const Word&)>& f) const {
    GradedPoly out(target);
    for (const auto& [w, c] : terms_) {
      GradedPoly img = f(w);
      img *= c;
      out += img;
    }
    return out;
  }

  // Prepend one letter to every word (used by the quasi-shuffle recursion).
  GradedPoly prepended(int letter) const {
    GradedPoly out(alpha_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w.prepend(letter), c);
    return out;
  }

 private:
  Alphabet alpha_;
  Terms terms_;
};

// Q-linear combination of pairs u (x) v, both components over one alphabet.
class TensorPoly {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, Rational>;

  explicit TensorPoly(Alphabet a) : alpha_(a) {}

  Alphabet alphabet() const { return alpha_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Word& u, const Word& v) const {
    auto it = terms_.find(Key{u, v});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Word& u, const Word& v, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Key{u, v}, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TensorPoly& operator+=(const TensorPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  TensorPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.alpha_ == b.alpha_ && a.terms_ == b.terms_;
  }

  // Componentwise concatenation product (a (x) b)(c (x) d) = ac (x) bd.
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly out(a.alpha_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        out.add_term(ka.first.concat(kb.first), ka.second.concat(kb.second), ca * cb);
    return out;
  }

  // Pairing against (phi (x) psi) evaluated coefficientwise: sums
  // c_{u,v} * phi(u) * psi(v).
  Rational pair(const std::function<Rational(const Word&)>& phi,
                const std::function<Rational(const Word&)>& psi) const {
    Rational s = 0;
    for (const auto& [k, c] : terms_) s += c * phi(k.first) * psi(k.second);
    return s;
  }

 private:
  Alphabet alpha_;
  Terms terms_;
};

}  // namespace qmzv
