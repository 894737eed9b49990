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
#include "qmzv/quasi_shuffle.hpp"

namespace qmzv {

// Class of a B-polynomial in the quotient of (Q<B>, *_b) by the graded
// ideal generated by b_0 together with all differences v - tau(v).
struct GfElement {
  GradedPoly rep = GradedPoly(Alphabet::B);
  bool reduced = false;
};

// Homogeneous ideal generators of one weight: b_0 in weight 1 and the
// nonzero differences v - tau(v) over words v not starting with b_0.
inline std::vector<GradedPoly> gf_generators(int weight) {
  std::vector<GradedPoly> gens;
  if (weight == 1) gens.emplace_back(word_b({0}));
  for (const Word& v : enumerate_b0free_words(weight)) {
    GradedPoly g(v);
    g -= GradedPoly(tau(v));
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return gens;
}

// Graded ideal pieces, normal forms and quotient products, with the
// relation space of each weight computed once and cached.
class GfContext {
 public:
  const WordBasis& basis(int w) {
    auto it = bases_.find(w);
    if (it == bases_.end()) it = bases_.emplace(w, WordBasis::of_weight(Alphabet::B, w)).first;
    return it->second;
  }

  // Weight-w piece of the ideal: every generator of weight j <= w times
  // every word of weight w - j, row-reduced, computed once and cached.
  const RelationSpace& rel(int w) {
    auto it = rels_.find(w);
    if (it != rels_.end()) return it->second;
    const WordBasis& wb = basis(w);
    RelationSpace s(wb.size());
    for (int j = 1; j <= w; ++j)
      for (const GradedPoly& g : gf_generators(j))
        for (const Word& u : enumerate_words(Alphabet::B, w - j))
          s.insert(wb.to_vec(quasi_shuffle(g, GradedPoly(u), DiamondRule::Balanced)));
    return rels_.emplace(w, std::move(s)).first->second;
  }

  // Normal form: subtract the ideal projection per weight component.
  GfElement reduce(const GradedPoly& p) {
    if (p.alphabet() != Alphabet::B) throw std::invalid_argument("expected a B-polynomial");
    GradedPoly out(Alphabet::B);
    for (int w = 0; w <= p.max_weight(); ++w) {
      GradedPoly comp = p.component(w);
      if (comp.is_zero()) continue;
      RatVector v = basis(w).to_vec(comp);
      rel(w).reduce(v);
      out += basis(w).to_poly(v, Alphabet::B);
    }
    return GfElement{std::move(out), true};
  }

  GfElement mul(const GfElement& a, const GfElement& b) {
    return reduce(quasi_shuffle(a.rep, b.rep, DiamondRule::Balanced));
  }

  bool is_zero_class(const GradedPoly& p) { return reduce(p).rep.is_zero(); }

  int dim(int w) { return basis(w).size() - rel(w).dim(); }

 private:
  std::map<int, WordBasis> bases_;
  std::map<int, RelationSpace> rels_;
};

// Independent generation of the same graded pieces by weight-by-weight
// saturation: the piece at weight w is spanned by this weight's generators
// together with all products of a lower piece's basis elements with single
// words of the complementary weight.  Returns pieces for weights 0..w.
inline std::vector<RelationSpace> gf_rel_saturate_upto(int wmax) {
  std::vector<WordBasis> bases;
  for (int w = 0; w <= wmax; ++w) bases.push_back(WordBasis::of_weight(Alphabet::B, w));
  std::vector<RelationSpace> pieces;
  for (int w = 0; w <= wmax; ++w) {
    RelationSpace s(bases[w].size());
    for (const GradedPoly& g : gf_generators(w)) s.insert(bases[w].to_vec(g));
    for (int j = 1; j < w; ++j)
      for (const RatVector& row : pieces[j].basis()) {
        GradedPoly rp = bases[j].to_poly(row, Alphabet::B);
        for (const Word& u : enumerate_words(Alphabet::B, w - j))
          s.insert(bases[w].to_vec(quasi_shuffle(rp, GradedPoly(u), DiamondRule::Balanced)));
      }
    pieces.push_back(std::move(s));
  }
  return pieces;
}

// A word of the shape b_{k_1} b_0^{m_1} b_{k_2} b_0^{m_2} ...
inline Word block_word_b(const std::vector<std::pair<int, int>>& blocks) {
  std::vector<int> letters;
  for (const auto& [k, m] : blocks) {
    letters.push_back(k);
    letters.insert(letters.end(), m, 0);
  }
  return word_b(std::move(letters));
}

// Checks the two closed-form expansions of f(b_{k_1}b_0^{m_1}) f(b_{k_2}b_0^{m_2})
// in the quotient: one refines the product along b_0 distributions, the other
// is its image under tau-invariance.
inline bool depth2_product_identity(GfContext& ctx, int k1, int k2, int m1, int m2) {
  if (k1 < 1 || k2 < 1 || m1 < 0 || m2 < 0) throw std::invalid_argument("need k >= 1, m >= 0");
  GradedPoly lhs = quasi_shuffle(GradedPoly(block_word_b({{k1, m1}})),
                                 GradedPoly(block_word_b({{k2, m2}})), DiamondRule::Balanced);

  GradedPoly rhs1(Alphabet::B);
  const int M = m1 + m2;
  for (int j = 0; j <= M; ++j) {
    rhs1.add_term(block_word_b({{k1, j}, {k2, M - j}}), Rational(binomial(M - j, m2)));
    rhs1.add_term(block_word_b({{k2, j}, {k1, M - j}}), Rational(binomial(M - j, m1)));
  }
  rhs1.add_term(block_word_b({{k1 + k2, M}}), Rational(binomial(M, m1)));

  GradedPoly rhs2(Alphabet::B);
  const int K = k1 + k2;
  for (int j = 1; j <= K - 1; ++j) {
    rhs2.add_term(block_word_b({{j, m1}, {K - j, m2}}), Rational(binomial(j - 1, k1 - 1)));
    rhs2.add_term(block_word_b({{j, m2}, {K - j, m1}}), Rational(binomial(j - 1, k2 - 1)));
  }
  rhs2.add_term(block_word_b({{K - 1, M + 1}}), Rational(binomial(K - 2, k1 - 1)));

  return ctx.is_zero_class(lhs - rhs1) && ctx.is_zero_class(lhs - rhs2);
}

}  // namespace qmzv
