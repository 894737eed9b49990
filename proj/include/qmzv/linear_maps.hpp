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

#include <optional>

#include "qmzv/poly.hpp"

namespace qmzv {

// Block decomposition of a B-word that does not start with b_0:
// w = b_{k_1} b_0^{m_1} ... b_{k_d} b_0^{m_d} with k_i >= 1, m_i >= 0.
struct BBlock {
  int k;
  int m;
};

inline std::vector<BBlock> b_blocks(const Word& w) {
  if (w.alphabet() != Alphabet::B) throw std::invalid_argument("expected a B-word");
  if (starts_with_b0(w)) throw std::invalid_argument("tau is undefined on words starting with b_0");
  std::vector<BBlock> blocks;
  for (int v : w.letters()) {
    if (v >= 1)
      blocks.push_back({v, 0});
    else
      blocks.back().m += 1;
  }
  return blocks;
}

// The involution tau: b_{k_1}b_0^{m_1}...b_{k_d}b_0^{m_d}
//                 |-> b_{m_d+1}b_0^{k_d-1}...b_{m_1+1}b_0^{k_1-1}.
inline Word tau(const Word& w) {
  auto blocks = b_blocks(w);
  std::vector<int> out;
  out.reserve(w.letters().size());
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    out.push_back(it->m + 1);
    out.insert(out.end(), it->k - 1, 0);
  }
  return word_b(std::move(out));
}

inline GradedPoly tau(const GradedPoly& p) {
  return p.map_words(Alphabet::B, [](const Word& w) { return GradedPoly(tau(w)); });
}

// Pi_0 kills every word starting with b_0 (projection onto Q<B>^0).
inline GradedPoly pi0(const GradedPoly& p) {
  GradedPoly out(Alphabet::B);
  for (const auto& [w, c] : p.terms())
    if (!starts_with_b0(w)) out.add_term(w, c);
  return out;
}

// Pi_Y: words over X ending in x_1 map to Y-words block by block
// (x_0^{k-1}x_1 -> y_k); words ending in x_0 map to zero.
inline std::optional<Word> pi_y_word(const Word& w) {
  if (w.alphabet() != Alphabet::X) throw std::invalid_argument("expected an X-word");
  if (w.empty()) return Word::unit(Alphabet::Y);
  if (w.letters().back() != 1) return std::nullopt;
  std::vector<int> out;
  int zeros = 0;
  for (int v : w.letters()) {
    if (v == 0) {
      ++zeros;
    } else {
      out.push_back(zeros + 1);
      zeros = 0;
    }
  }
  return word_y(std::move(out));
}

inline GradedPoly pi_y(const GradedPoly& p) {
  GradedPoly out(Alphabet::Y);
  for (const auto& [w, c] : p.terms())
    if (auto img = pi_y_word(w)) out.add_term(*img, c);
  return out;
}

// iota: the section y_k -> x_0^{k-1}x_1 of Pi_Y.
inline Word iota_word(const Word& w) {
  if (w.alphabet() != Alphabet::Y) throw std::invalid_argument("expected a Y-word");
  std::vector<int> out;
  for (int k : w.letters()) {
    out.insert(out.end(), k - 1, 0);
    out.push_back(1);
  }
  return word_x(std::move(out));
}

inline GradedPoly iota(const GradedPoly& p) {
  return p.map_words(Alphabet::X, [](const Word& w) { return GradedPoly(iota_word(w)); });
}

// Alphabet embeddings into B.
inline Word theta_x_word(const Word& w) {
  if (w.alphabet() != Alphabet::X) throw std::invalid_argument("expected an X-word");
  return word_b(w.letters());
}

inline Word theta_y_word(const Word& w) {
  if (w.alphabet() != Alphabet::Y) throw std::invalid_argument("expected a Y-word");
  return word_b(w.letters());
}

// theta_X^anti reverses the word before relabelling.
inline Word theta_x_anti_word(const Word& w) {
  return theta_x_word(w.reversed());
}

inline GradedPoly theta_x(const GradedPoly& p) {
  return p.map_words(Alphabet::B, [](const Word& w) { return GradedPoly(theta_x_word(w)); });
}
inline GradedPoly theta_y(const GradedPoly& p) {
  return p.map_words(Alphabet::B, [](const Word& w) { return GradedPoly(theta_y_word(w)); });
}
inline GradedPoly theta_x_anti(const GradedPoly& p) {
  return p.map_words(Alphabet::B, [](const Word& w) { return GradedPoly(theta_x_anti_word(w)); });
}

// Left inverses: B-words supported on {b_0, b_1} project to X, words with
// all indices >= 1 project to Y; everything else maps to zero.
inline std::optional<Word> project_to_x_word(const Word& w) {
  if (w.alphabet() != Alphabet::B) throw std::invalid_argument("expected a B-word");
  for (int v : w.letters())
    if (v > 1) return std::nullopt;
  return word_x(w.letters());
}

inline std::optional<Word> project_to_y_word(const Word& w) {
  if (w.alphabet() != Alphabet::B) throw std::invalid_argument("expected a B-word");
  for (int v : w.letters())
    if (v == 0) return std::nullopt;
  return word_y(w.letters());
}

inline GradedPoly project_to_x(const GradedPoly& p) {
  GradedPoly out(Alphabet::X);
  for (const auto& [w, c] : p.terms())
    if (auto img = project_to_x_word(w)) out.add_term(*img, c);
  return out;
}

inline GradedPoly project_to_y(const GradedPoly& p) {
  GradedPoly out(Alphabet::Y);
  for (const auto& [w, c] : p.terms())
    if (auto img = project_to_y_word(w)) out.add_term(*img, c);
  return out;
}

inline bool is_admissible_x(const Word& w) {
  return w.alphabet() == Alphabet::X && !w.empty() && w.letters().front() == 0 &&
         w.letters().back() == 1;
}

}  // namespace qmzv
