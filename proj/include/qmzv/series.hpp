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
#include <optional>

#include "qmzv/poly.hpp"

namespace qmzv {

// Coefficient-ring hooks for series templates.  Specialized for every ring
// used as a series coefficient (Rational here, ZfElement in zf.hpp).
template <class R>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& c) { return c == 0; }
};

// Word series truncated at a weight bound: all words of weight > bound are
// identified with zero.  The concatenation product, inverse, exp and log all
// stay inside the truncation.
template <class R>
class TruncatedSeries {
 public:
  using Ops = CoeffOps<R>;
  using Terms = std::map<Word, R>;

  TruncatedSeries(Alphabet a, int bound) : alpha_(a), bound_(bound) {
    if (bound < 0) throw std::invalid_argument("negative truncation bound");
  }

  static TruncatedSeries unit(Alphabet a, int bound) {
    TruncatedSeries s(a, bound);
    s.set_coeff(Word::unit(a), Ops::one());
    return s;
  }

  Alphabet alphabet() const { return alpha_; }
  int bound() const { return bound_; }
  const Terms& terms() const { return terms_; }

  R coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Ops::zero() : it->second;
  }

  void set_coeff(const Word& w, R c) {
    if (w.alphabet() != alpha_) throw std::invalid_argument("alphabet mismatch");
    if (w.weight() > bound_) throw std::invalid_argument("word weight exceeds truncation bound");
    if (Ops::is_zero(c))
      terms_.erase(w);
    else
      terms_.insert_or_assign(w, std::move(c));
  }

  void add_coeff(const Word& w, const R& c) {
    if (w.weight() > bound_) return;  // truncation
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!Ops::is_zero(c)) terms_.emplace(w, c);
    } else {
      it->second = it->second + c;
      if (Ops::is_zero(it->second)) terms_.erase(it);
    }
  }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_coeff(w, c);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_coeff(w, Rational(-1) * c);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  TruncatedSeries scaled(const Rational& c) const {
    TruncatedSeries out(alpha_, bound_);
    if (c == 0) return out;
    for (const auto& [w, v] : terms_) out.terms_.emplace(w, c * v);
    return out;
  }

  // Concatenation product; the result is truncated at the smaller bound.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_compatible(b);
    TruncatedSeries out(a.alpha_, std::min(a.bound_, b.bound_));
    for (const auto& [u, cu] : a.terms_) {
      if (u.weight() > out.bound_) continue;
      for (const auto& [v, cv] : b.terms_) {
        if (u.weight() + v.weight() > out.bound_) break;  // terms are weight-sorted
        out.add_coeff(u.concat(v), cu * cv);
      }
    }
    return out;
  }

  // Multiplicative inverse of a series with constant coefficient 1.
  TruncatedSeries inverse() const {
    require_unit_constant();
    TruncatedSeries n = TruncatedSeries::unit(alpha_, bound_) - *this;  // weight >= 1
    TruncatedSeries acc = TruncatedSeries::unit(alpha_, bound_);
    TruncatedSeries pow = TruncatedSeries::unit(alpha_, bound_);
    for (int k = 1; k <= bound_; ++k) {
      pow = pow * n;
      if (pow.terms_.empty()) break;
      acc += pow;
    }
    return acc;
  }

  bool equal_upto(const TruncatedSeries& rhs, int w) const {
    if (alpha_ != rhs.alpha_) return false;
    w = std::min({w, bound_, rhs.bound_});
    for (const auto& [word, c] : terms_)
      if (word.weight() <= w && !Ops::is_zero(c - rhs.coeff(word))) return false;
    for (const auto& [word, c] : rhs.terms_)
      if (word.weight() <= w && terms_.find(word) == terms_.end() && !Ops::is_zero(c))
        return false;
    return true;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.alpha_ == b.alpha_ && a.bound_ == b.bound_ && a.equal_upto(b, a.bound_);
  }

  // Apply a word-level map (word -> word or word -> 0) to every term.
  TruncatedSeries mapped(Alphabet target,
                         const std::function<std::optional<Word>(const Word&)>& f) const {
    TruncatedSeries out(target, bound_);
    for (const auto& [w, c] : terms_) {
      if (auto img = f(w)) out.add_coeff(*img, c);
    }
    return out;
  }

  TruncatedSeries restricted(const std::function<bool(const Word&)>& keep) const {
    TruncatedSeries out(alpha_, bound_);
    for (const auto& [w, c] : terms_)
      if (keep(w)) out.terms_.emplace(w, c);
    return out;
  }

  void require_compatible(const TruncatedSeries& rhs) const {
    if (alpha_ != rhs.alpha_) throw std::invalid_argument("alphabet mismatch");
  }
  void require_unit_constant() const {
    if (!(coeff(Word::unit(alpha_)) == Ops::one()))
      throw std::invalid_argument("series must have constant coefficient 1");
  }
  void require_zero_constant() const {
    if (!Ops::is_zero(coeff(Word::unit(alpha_))))
      throw std::invalid_argument("series must have constant coefficient 0");
  }

 private:
  Alphabet alpha_;
  int bound_;
  Terms terms_;
};

// exp for the concatenation product; factorials divide exactly over Q.
template <class R>
TruncatedSeries<R> exp_conc(const TruncatedSeries<R>& p) {
  p.require_zero_constant();
  TruncatedSeries<R> acc = TruncatedSeries<R>::unit(p.alphabet(), p.bound());
  TruncatedSeries<R> pow = TruncatedSeries<R>::unit(p.alphabet(), p.bound());
  Rational fact = 1;
  for (int k = 1; k <= p.bound(); ++k) {
    pow = pow * p;
    if (pow.terms().empty()) break;
    fact *= k;
    acc += pow.scaled(Rational(1) / fact);
  }
  return acc;
}

template <class R>
TruncatedSeries<R> log_conc(const TruncatedSeries<R>& s) {
  s.require_unit_constant();
  TruncatedSeries<R> n = s - TruncatedSeries<R>::unit(s.alphabet(), s.bound());
  TruncatedSeries<R> acc(s.alphabet(), s.bound());
  TruncatedSeries<R> pow = TruncatedSeries<R>::unit(s.alphabet(), s.bound());
  for (int k = 1; k <= s.bound(); ++k) {
    pow = pow * n;
    if (pow.terms().empty()) break;
    Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
    acc += pow.scaled(sign / k);
  }
  return acc;
}

using RationalSeries = TruncatedSeries<Rational>;

inline RationalSeries series_from_poly(const GradedPoly& p, int bound) {
  RationalSeries s(p.alphabet(), bound);
  for (const auto& [w, c] : p.terms()) s.add_coeff(w, c);
  return s;
}

}  // namespace qmzv
