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

#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "qmzv/poly.hpp"
#include "qmzv/series.hpp"

namespace qmzv {

// Quasi-shuffle products differ only in when two leading letters merge:
//   Shuffle    (X): never
//   Stuffle    (Y): always, y_i <> y_j = y_{i+j}
//   SZStuffle  (B): always, b_i <> b_j = b_{i+j}  (merging b_0 drops weight)
//   Balanced   (B): only when both indices are positive
enum class DiamondRule { Shuffle, Stuffle, SZStuffle, Balanced };

inline Alphabet rule_alphabet(DiamondRule r) {
  switch (r) {
    case DiamondRule::Shuffle: return Alphabet::X;
    case DiamondRule::Stuffle: return Alphabet::Y;
    default: return Alphabet::B;
  }
}

inline std::optional<int> diamond_merge(DiamondRule r, int i, int j) {
  switch (r) {
    case DiamondRule::Shuffle: return std::nullopt;
    case DiamondRule::Stuffle:
    case DiamondRule::SZStuffle: return i + j;
    default: return (i >= 1 && j >= 1) ? std::optional<int>(i + j) : std::nullopt;
  }
}

inline void require_rule_alphabet(DiamondRule r, const Word& w) {
  if (w.alphabet() != rule_alphabet(r))
    throw std::invalid_argument("word alphabet does not match the product rule");
}

namespace detail {

// Suffix-pair dynamic program:
//   (au) * (bv) = a(u * bv) + b(au * v) + (a<>b)(u * v).
inline GradedPoly quasi_shuffle_dp(const Word& u, const Word& v, DiamondRule rule) {
  const int m = u.size(), n = v.size();
  const Alphabet a = u.alphabet();
  // tbl[i][j] = suffix_i(u) * suffix_j(v)
  std::vector<std::vector<GradedPoly>> tbl(m + 1, std::vector<GradedPoly>(n + 1, GradedPoly(a)));
  tbl[m][n] = GradedPoly::unit(a);
  for (int i = m - 1; i >= 0; --i) tbl[i][n] = GradedPoly(u.suffix_from(i));
  for (int j = n - 1; j >= 0; --j) tbl[m][j] = GradedPoly(v.suffix_from(j));
  for (int i = m - 1; i >= 0; --i) {
    const int ui = u.letters()[i];
    for (int j = n - 1; j >= 0; --j) {
      const int vj = v.letters()[j];
      GradedPoly r = tbl[i + 1][j].prepended(ui);
      r += tbl[i][j + 1].prepended(vj);
      if (auto mg = diamond_merge(rule, ui, vj)) r += tbl[i + 1][j + 1].prepended(*mg);
      tbl[i][j] = std::move(r);
    }
  }
  return tbl[0][0];
}

// Process-wide memo table.  The product is commutative for all four rules,
// so keys are stored with the smaller word first.
class ShuffleMemo {
 public:
  static ShuffleMemo& instance() {
    static ShuffleMemo memo;
    return memo;
  }

  GradedPoly product(const Word& u, const Word& v, DiamondRule rule) {
    const bool swap = v < u;
    Key key{static_cast<int>(rule), swap ? v : u, swap ? u : v};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    GradedPoly r = quasi_shuffle_dp(std::get<1>(key), std::get<2>(key), rule);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(std::move(key), std::move(r)).first->second;
  }

 private:
  using Key = std::tuple<int, Word, Word>;
  std::map<Key, GradedPoly> cache_;
  std::mutex mu_;
};

}  // namespace detail

inline GradedPoly quasi_shuffle(const Word& u, const Word& v, DiamondRule rule) {
  require_rule_alphabet(rule, u);
  require_rule_alphabet(rule, v);
  if (u.empty()) return GradedPoly(v);
  if (v.empty()) return GradedPoly(u);
  return detail::ShuffleMemo::instance().product(u, v, rule);
}

inline GradedPoly quasi_shuffle(const GradedPoly& p, const GradedPoly& q, DiamondRule rule) {
  GradedPoly out(rule_alphabet(rule));
  for (const auto& [u, cu] : p.terms())
    for (const auto& [v, cv] : q.terms()) {
      GradedPoly t = quasi_shuffle(u, v, rule);
      t *= cu * cv;
      out += t;
    }
  return out;
}

inline GradedPoly shuffle(const Word& u, const Word& v) {
  return quasi_shuffle(u, v, DiamondRule::Shuffle);
}

// n-th quasi-shuffle power of a single word.
inline GradedPoly quasi_shuffle_power(const Word& w, int n, DiamondRule rule) {
  GradedPoly acc = GradedPoly::unit(rule_alphabet(rule));
  GradedPoly base(w);
  for (int i = 0; i < n; ++i) acc = quasi_shuffle(acc, base, rule);
  return acc;
}

// Deconcatenation coproduct: word -> sum of (prefix (x) suffix).
inline TensorPoly delta_dec(const Word& w) {
  TensorPoly out(w.alphabet());
  for (int i = 0; i <= w.size(); ++i) out.add_term(w.prefix(i), w.suffix_from(i), 1);
  return out;
}

// Coproduct dual to the quasi-shuffle product, extended multiplicatively
// over concatenation.  On a letter:
//   delta(b) = 1 (x) b + b (x) 1 + sum_{i <> j = b} b_i (x) b_j.
inline TensorPoly delta_dual(const Word& w, DiamondRule rule) {
  require_rule_alphabet(rule, w);
  const Alphabet a = w.alphabet();
  TensorPoly acc(a);
  acc.add_term(Word::unit(a), Word::unit(a), 1);
  for (int letter : w.letters()) {
    TensorPoly d(a);
    d.add_term(Word::unit(a), Word(a, {letter}), 1);
    d.add_term(Word(a, {letter}), Word::unit(a), 1);
    const int lo = (a == Alphabet::Y) ? 1 : 0;
    for (int i = lo; i <= letter - lo; ++i) {
      const int j = letter - i;
      if (!valid_letter(a, i) || !valid_letter(a, j)) continue;
      if (auto mg = diamond_merge(rule, i, j); mg && *mg == letter) d.add_term(Word(a, {i}), Word(a, {j}), 1);
    }
    acc = acc * d;
  }
  return acc;
}

// Antipode of (Q<B>, conc, delta_b): an anti-automorphism with
//   S(b_0) = -b_0,
//   S(b_a) = sum_{r>=1} (-1)^r sum_{j_1+...+j_r=a, j_i>=1} b_{j_1}...b_{j_r}.
inline GradedPoly antipode_letter_b(int a) {
  GradedPoly out(Alphabet::B);
  if (a == 0) {
    out.add_term(word_b({0}), -1);
    return out;
  }
  std::vector<int> parts;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.add_term(word_b(parts), (parts.size() % 2 == 0) ? 1 : -1);
      return;
    }
    for (int j = 1; j <= rest; ++j) {
      parts.push_back(j);
      self(self, rest - j);
      parts.pop_back();
    }
  };
  rec(rec, a);
  return out;
}

inline GradedPoly antipode_b(const Word& w) {
  if (w.alphabet() != Alphabet::B) throw std::invalid_argument("antipode_b expects a B-word");
  GradedPoly acc = GradedPoly::unit(Alphabet::B);
  // reverse order: S(uv) = S(v)S(u)
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    GradedPoly img = antipode_letter_b(*it);
    GradedPoly next(Alphabet::B);
    for (const auto& [x, cx] : acc.terms())
      for (const auto& [y, cy] : img.terms()) next.add_term(x.concat(y), cx * cy);
    acc = std::move(next);
  }
  return acc;
}

inline GradedPoly antipode_b(const GradedPoly& p) {
  return p.map_words(Alphabet::B, [](const Word& w) { return antipode_b(w); });
}

// Concatenation m(S (x) id) applied to a tensor polynomial; with delta_dual
// this realizes the Hopf antipode identity m(S (x) id)delta(w) = eps(w) 1.
inline GradedPoly antipode_convolution_b(const Word& w) {
  TensorPoly d = delta_dual(w, DiamondRule::Balanced);
  GradedPoly out(Alphabet::B);
  for (const auto& [k, c] : d.terms()) {
    GradedPoly s = antipode_b(k.first);
    for (const auto& [x, cx] : s.terms()) out.add_term(x.concat(k.second), c * cx);
  }
  return out;
}

// Grouplike test in dual form: (Phi|1) = 1 and (Phi|u*v) = (Phi|u)(Phi|v)
// for all word pairs inside the truncation.  Generic over the coefficient
// ring; `eq` decides coefficient equality (exact by default).
struct GrouplikeReport {
  bool ok = true;
  std::optional<std::pair<Word, Word>> witness;
};

template <class R, class Eq = std::equal_to<R>>
GrouplikeReport is_grouplike(const TruncatedSeries<R>& phi, DiamondRule rule, Eq eq = Eq{}) {
  GrouplikeReport rep;
  const Alphabet a = rule_alphabet(rule);
  if (phi.alphabet() != a) throw std::invalid_argument("series alphabet does not match rule");
  const int W = phi.bound();
  const Word unit = Word::unit(a);
  if (!eq(phi.coeff(unit), CoeffOps<R>::one())) {
    rep.ok = false;
    rep.witness = {unit, unit};
    return rep;
  }
  for (int wu = 1; wu < W; ++wu) {
    for (const Word& u : enumerate_words(a, wu)) {
      for (int wv = wu; wu + wv <= W; ++wv) {
        for (const Word& v : enumerate_words(a, wv)) {
          if (v < u) continue;  // commutative product: unordered pairs suffice
          GradedPoly prod = quasi_shuffle(u, v, rule);
          R lhs = CoeffOps<R>::zero();
          for (const auto& [w, c] : prod.terms()) lhs = lhs + c * phi.coeff(w);
          R rhs = phi.coeff(u) * phi.coeff(v);
          if (!eq(lhs, rhs)) {
            rep.ok = false;
            rep.witness = {u, v};
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

// Full product/coproduct duality check up to the weight bound:
// (w | u * v) = (delta(w) | u (x) v) for all triples in the window.
struct DualityReport {
  bool ok = true;
  std::optional<std::tuple<Word, Word, Word>> witness;  // (w, u, v)
};

inline DualityReport pairing_dual_check(int max_weight, DiamondRule rule) {
  DualityReport rep;
  const Alphabet a = rule_alphabet(rule);
  std::vector<Word> words = enumerate_words_upto(a, max_weight);
  std::vector<TensorPoly> coproducts;
  coproducts.reserve(words.size());
  for (const Word& w : words) coproducts.push_back(delta_dual(w, rule));
  for (size_t iu = 0; iu < words.size(); ++iu) {
    const Word& u = words[iu];
    for (size_t iv = iu; iv < words.size(); ++iv) {
      const Word& v = words[iv];
      if (u.weight() + v.weight() > max_weight) continue;
      GradedPoly prod = quasi_shuffle(u, v, rule);
      for (size_t iw = 0; iw < words.size(); ++iw) {
        if (prod.coeff(words[iw]) != coproducts[iw].coeff(u, v)) {
          rep.ok = false;
          rep.witness = {words[iw], u, v};
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace qmzv
