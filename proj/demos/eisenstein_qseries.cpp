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

// The q-series side of the story: multiple q-zeta values satisfy the same
// stuffle products and tau-invariance as the word algebra predicts, and the
// depth-one Eisenstein series fall out as brackets with a Bernoulli constant.

#include <iostream>

#include "qmzv/qseries.hpp"
#include "qmzv/text_io.hpp"

using namespace qmzv;

int main() {
  const int order = 12;
  std::cout << "Multiple q-zeta values, truncated at q^" << order << ".\n\n";
  std::cout << "  zq(2)   = " << qseries_str(qzeta_sz({2}, order)) << "\n";
  std::cout << "  zq(1,0) = " << qseries_str(qzeta_sz({1, 0}, order)) << "\n\n";
  std::cout << "The two agree: (2) and (1,0) are conjugate under tau, and the\n"
               "q-model sees the partition conjugation directly.\n\n";

  std::cout << "Products follow the sz-stuffle rule.  Expanding b1 * b1:\n\n";
  const GradedPoly expansion =
      quasi_shuffle(word_b({1}), word_b({1}), DiamondRule::SZStuffle);
  std::cout << "  b1 *_sz b1 = " << poly_str(expansion) << "\n";
  const QSeries lhs = qzeta_sz(word_b({1}), order) * qzeta_sz(word_b({1}), order);
  const QSeries rhs = qzeta_sz(expansion, order);
  std::cout << "  zq(1)^2          = " << qseries_str(lhs) << "\n";
  std::cout << "  expansion, eval  = " << qseries_str(rhs) << "\n";
  std::cout << "  equal: " << (lhs == rhs ? "true" : "false") << "\n\n";

  std::cout << "Brackets carry the Fourier expansions of Eisenstein series:\n\n";
  std::cout << "  g(2)    = " << qseries_str(bracket_g({2}, order)) << "\n";
  std::cout << "  G(2|0)  = " << qseries_str(bi_eisenstein_depth1(2, 0, order)) << "\n";
  std::cout << "  beta(2) = " << rational_str(beta_constant(2))
            << "    (the Bernoulli constant -B_2/(2*2!))\n\n";

  std::cout << "Derivatives move along the lower index:\n\n";
  const QSeries g31 = bi_eisenstein_depth1(3, 1, order);
  const QSeries derived =
      q_derivative(bi_eisenstein_depth1(2, 0, order), 1).scaled(Rational(factorial(1), factorial(2)));
  std::cout << "  G(3|1)               = " << qseries_str(g31) << "\n";
  std::cout << "  1/2 (q d/dq) G(2|0)  = " << qseries_str(derived) << "\n";
  std::cout << "  equal: " << (g31 == derived ? "true" : "false") << "\n";
  return (lhs == rhs && g31 == derived) ? 0 : 1;
}
