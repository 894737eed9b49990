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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmzv {

// The three alphabets:
//   X = {x_0, x_1}            letters 0, 1
//   Y = {y_1, y_2, ...}       letters >= 1
//   B = {b_0, b_1, b_2, ...}  letters >= 0
enum class Alphabet : std::uint8_t { X, Y, B };

inline char alphabet_letter(Alphabet a) {
  switch (a) {
    case Alphabet::X: return 'x';
    case Alphabet::Y: return 'y';
    default: return 'b';
  }
}

inline bool valid_letter(Alphabet a, int v) {
  switch (a) {
    case Alphabet::X: return v == 0 || v == 1;
    case Alphabet::Y: return v >= 1;
    default: return v >= 0;
  }
}

// Weight of a single letter: 1 for x_i, the index for y_i, and
// max(index, 1) for b_i (b_0 counts 1).
inline int letter_weight(Alphabet a, int v) {
  if (a == Alphabet::X) return 1;
  if (a == Alphabet::Y) return v;
  return v == 0 ? 1 : v;
}

// A monomial word over one of the alphabets.  Immutable by convention;
// operations return fresh words.
class Word {
 public:
  Word(Alphabet a, std::vector<int> letters) : alpha_(a), letters_(std::move(letters)) {
    for (int v : letters_) {
      if (!valid_letter(a, v))
        throw std::invalid_argument("letter index " + std::to_string(v) +
                                    " not valid for alphabet " + alphabet_letter(a));
      weight_ += letter_weight(a, v);
    }
  }
  static Word unit(Alphabet a) { return Word(a, {}); }

  Alphabet alphabet() const { return alpha_; }
  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int weight() const { return weight_; }

  // depth: number of x_1 letters (X), word length (Y), number of
  // nonzero letters (B).
  int depth() const {
    switch (alpha_) {
      case Alphabet::X: return static_cast<int>(std::count(letters_.begin(), letters_.end(), 1));
      case Alphabet::Y: return size();
      default: return size() - static_cast<int>(std::count(letters_.begin(), letters_.end(), 0));
    }
  }

  Word concat(const Word& rhs) const {
    require_same_alphabet(rhs);
    std::vector<int> ls = letters_;
    ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(alpha_, std::move(ls));
  }

  Word prepend(int letter) const {
    std::vector<int> ls;
    ls.reserve(letters_.size() + 1);
    ls.push_back(letter);
    ls.insert(ls.end(), letters_.begin(), letters_.end());
    return Word(alpha_, std::move(ls));
  }

  Word reversed() const {
    std::vector<int> ls(letters_.rbegin(), letters_.rend());
    return Word(alpha_, std::move(ls));
  }

  Word prefix(int n) const { return Word(alpha_, {letters_.begin(), letters_.begin() + n}); }
  Word suffix_from(int n) const { return Word(alpha_, {letters_.begin() + n, letters_.end()}); }

  void require_same_alphabet(const Word& rhs) const {
    if (alpha_ != rhs.alpha_) throw std::invalid_argument("alphabet mismatch");
  }

  // Canonical order: graded, then lexicographic on the letter sequence.
  // Within one weight no word is a proper prefix of another, so lexicographic
  // comparison is unambiguous there.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    if (auto c = static_cast<int>(a.alpha_) <=> static_cast<int>(b.alpha_); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const Word& a, const Word& b) {
    return a.alpha_ == b.alpha_ && a.letters_ == b.letters_;
  }

 private:
  Alphabet alpha_;
  std::vector<int> letters_;
  int weight_ = 0;
};

inline Word word_x(std::vector<int> ls) { return Word(Alphabet::X, std::move(ls)); }
inline Word word_y(std::vector<int> ls) { return Word(Alphabet::Y, std::move(ls)); }
inline Word word_b(std::vector<int> ls) { return Word(Alphabet::B, std::move(ls)); }

// All words of the exact weight, in canonical order.
inline std::vector<Word> enumerate_words(Alphabet a, int weight) {
  if (weight < 0) throw std::invalid_argument("negative weight");
  std::vector<Word> out;
  std::vector<int> cur;
  auto max_letter = [&](int budget) {
    switch (a) {
      case Alphabet::X: return 1;
      case Alphabet::Y: return budget;
      default: return budget;  // b_k has weight k for k >= 1
    }
  };
  auto rec = [&](auto&& self, int budget) -> void {
    if (budget == 0) {
      out.emplace_back(a, cur);
      return;
    }
    int lo = (a == Alphabet::Y) ? 1 : 0;
    for (int v = lo; v <= max_letter(budget); ++v) {
      int lw = letter_weight(a, v);
      if (lw > budget) continue;
      cur.push_back(v);
      self(self, budget - lw);
      cur.pop_back();
    }
  };
  rec(rec, weight);
  return out;
}

inline std::vector<Word> enumerate_words_upto(Alphabet a, int max_weight) {
  std::vector<Word> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto ws = enumerate_words(a, w);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

// Words over B that do not start with b_0 (the subspace Q<B>^0), plus the
// empty word when weight is 0.
inline bool starts_with_b0(const Word& w) {
  return w.alphabet() == Alphabet::B && !w.empty() && w.letters().front() == 0;
}

inline std::vector<Word> enumerate_b0free_words(int weight) {
  std::vector<Word> out;
  for (const Word& w : enumerate_words(Alphabet::B, weight))
    if (!starts_with_b0(w)) out.push_back(w);
  return out;
}

}  // namespace qmzv
