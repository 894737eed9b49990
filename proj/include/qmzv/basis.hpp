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

#include <map>
#include <vector>

#include "qmzv/linalg.hpp"
#include "qmzv/poly.hpp"

namespace qmzv {

// An ordered list of words used as coordinates for vectorizing polynomials.
class WordBasis {
 public:
  explicit WordBasis(std::vector<Word> words) : words_(std::move(words)) {
    for (size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], static_cast<int>(i));
  }

  static WordBasis of_weight(Alphabet a, int w) { return WordBasis(enumerate_words(a, w)); }

  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<Word>& words() const { return words_; }
  const Word& word(int i) const { return words_[static_cast<size_t>(i)]; }

  // Index of w, or -1 when w is not a basis word.
  int index(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
  }

  RatVector to_vec(const GradedPoly& p) const {
    RatVector v(words_.size(), Rational(0));
    for (const auto& [w, c] : p.terms()) {
      int i = index(w);
      if (i < 0) throw std::invalid_argument("polynomial has a term outside the word basis");
      v[static_cast<size_t>(i)] = c;
    }
    return v;
  }

  GradedPoly to_poly(const RatVector& v, Alphabet a) const {
    GradedPoly p(a);
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) p.add_term(words_[i], v[i]);
    return p;
  }

 private:
  std::vector<Word> words_;
  std::map<Word, int> index_;
};

}  // namespace qmzv
