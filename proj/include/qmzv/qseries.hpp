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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmzv/gf.hpp"
#include "qmzv/linalg.hpp"
#include "qmzv/linear_maps.hpp"
#include "qmzv/rational.hpp"
#include "qmzv/word.hpp"

namespace qmzv {

// ---------------------------------------------------------------------------
// Truncated q-expansions
// ---------------------------------------------------------------------------

// A power series in q with exact rational coefficients, truncated at q^N.
// All arithmetic stays within the truncation order; mixing two different
// orders truncates to the smaller one, mirroring TruncatedSeries.
class QSeries {
 public:
  explicit QSeries(int order) : coeffs_(check_order(order) + 1, Rational(0)) {}

  static QSeries constant(const Rational& c, int order) {
    QSeries f(order);
    f.coeffs_[0] = c;
    return f;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& coeff(int n) const {
    require_index(n);
    return coeffs_[static_cast<size_t>(n)];
  }

  void set_coeff(int n, Rational c) {
    require_index(n);
    coeffs_[static_cast<size_t>(n)] = std::move(c);
  }

  // Adds into q^n; contributions above the order are silently dropped
  // (they are exactly what the truncation discards).
  void add_coeff(int n, const Rational& c) {
    if (n < 0) throw std::out_of_range("negative q-exponent");
    if (n <= order()) coeffs_[static_cast<size_t>(n)] += c;
  }

  QSeries& operator+=(const QSeries& rhs) {
    truncate_to(std::min(order(), rhs.order()));
    for (int n = 0; n <= order(); ++n) coeffs_[static_cast<size_t>(n)] += rhs.coeffs_[static_cast<size_t>(n)];
    return *this;
  }

  QSeries& operator-=(const QSeries& rhs) {
    truncate_to(std::min(order(), rhs.order()));
    for (int n = 0; n <= order(); ++n) coeffs_[static_cast<size_t>(n)] -= rhs.coeffs_[static_cast<size_t>(n)];
    return *this;
  }

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

  QSeries scaled(const Rational& c) const {
    QSeries f(order());
    for (int n = 0; n <= order(); ++n) f.coeffs_[static_cast<size_t>(n)] = c * coeffs_[static_cast<size_t>(n)];
    return f;
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries f(std::min(a.order(), b.order()));
    for (int i = 0; i <= f.order(); ++i) {
      const Rational& ai = a.coeffs_[static_cast<size_t>(i)];
      if (ai == 0) continue;
      for (int j = 0; i + j <= f.order(); ++j)
        f.coeffs_[static_cast<size_t>(i + j)] += ai * b.coeffs_[static_cast<size_t>(j)];
    }
    return f;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

  bool is_zero() const {
    for (const Rational& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("q-series order must be >= 0");
    return order;
  }
  void require_index(int n) const {
    if (n < 0 || n > order())
      throw std::out_of_range("q-exponent " + std::to_string(n) + " outside order " +
                              std::to_string(order()));
  }
  void truncate_to(int order) { coeffs_.resize(static_cast<size_t>(order) + 1); }

  std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------
// Bernoulli numbers
// ---------------------------------------------------------------------------

// B_n with the B_1 = -1/2 convention, via the defining recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0.
inline Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli index must be >= 0");
  std::vector<Rational> b(static_cast<size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[static_cast<size_t>(k)];
    b[static_cast<size_t>(m)] = -s / Rational(m + 1);
  }
  return b[static_cast<size_t>(n)];
}

// beta(k) = -B_k / (2 k!) for even k, and 0 for odd k: the constant terms
// that make the depth-one Eisenstein expansions close under the product.
inline Rational beta_constant(int k) {
  if (k < 1) throw std::invalid_argument("beta index must be >= 1");
  if (k % 2 != 0) return Rational(0);
  return -bernoulli(k) / Rational(2 * factorial(static_cast<unsigned>(k)));
}

// ---------------------------------------------------------------------------
// Sums over strictly decreasing index chains
// ---------------------------------------------------------------------------

namespace detail {

// sum_{n_1 > n_2 > ... > n_d > 0} prod_i factor(i, n_i), truncated at q^N.
// Dynamic programming on (position, upper bound): with
// T_i(m) = sum over chains with m >= n_i, the recurrence is
// T_i(m) = T_i(m-1) + factor(i, m) * T_{i+1}(m-1).  Stopping at m = N is
// exact provided every chain with n_1 > N only contributes above q^N, which
// each caller guarantees through the valuation of its leading factor.
inline QSeries chain_sum(int depth, int order,
                         const std::function<QSeries(int, int)>& factor) {
  const QSeries unit = QSeries::constant(Rational(1), order);
  if (depth == 0) return unit;
  std::vector<QSeries> acc(static_cast<size_t>(depth), QSeries(order));
  acc.push_back(unit);  // sentinel T_{d+1}(m) = 1
  for (int m = 1; m <= order; ++m) {
    // Ascending i reads acc[i + 1] before it is overwritten, i.e. at m - 1.
    for (int i = 0; i < depth; ++i) acc[static_cast<size_t>(i)] += factor(i, m) * acc[static_cast<size_t>(i) + 1];
  }
  return acc[0];
}

// q^{ns} / (1 - q^n)^s = sum_{r >= s} C(r-1, s-1) q^{nr}; the constant 1
// when s = 0.
inline QSeries sz_factor(int s, int n, int order) {
  QSeries f(order);
  if (s == 0) {
    f.set_coeff(0, Rational(1));
    return f;
  }
  for (int r = s; n * r <= order; ++r) f.set_coeff(n * r, Rational(binomial(r - 1, s - 1)));
  return f;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Multiple q-zeta values, brackets, partition generating series
// ---------------------------------------------------------------------------

// zeta_q(s_1,...,s_l) = sum_{n_1 > ... > n_l > 0} prod_i q^{n_i s_i} / (1 - q^{n_i})^{s_i}
// truncated at q^N.  Entries after the first may be zero; s_1 >= 1 keeps
// every coefficient finite (the leading factor has q-valuation n_1 s_1).
// The empty index is the constant 1.
inline QSeries qzeta_sz(const std::vector<int>& s, int order) {
  if (!s.empty()) {
    if (s.front() < 1) throw std::invalid_argument("leading q-zeta exponent must be >= 1");
    for (int e : s)
      if (e < 0) throw std::invalid_argument("q-zeta exponents must be >= 0");
  }
  return detail::chain_sum(static_cast<int>(s.size()), order, [&](int i, int n) {
    return detail::sz_factor(s[static_cast<size_t>(i)], n, order);
  });
}

// The letters of a word over B, read as the exponent list.
inline QSeries qzeta_sz(const Word& w, int order) {
  if (w.alphabet() != Alphabet::B) throw std::invalid_argument("q-zeta expects a word over b");
  return qzeta_sz(w.letters(), order);
}

// Termwise evaluation of a B-polynomial.
inline QSeries qzeta_sz(const GradedPoly& p, int order) {
  if (p.alphabet() != Alphabet::B) throw std::invalid_argument("q-zeta expects a polynomial over b");
  QSeries acc(order);
  for (const auto& [w, c] : p.terms()) acc += qzeta_sz(w, order).scaled(c);
  return acc;
}

// g(k_1,...,k_d) = sum_{u_1 > ... > u_d > 0} prod_i ( sum_{v_i >= 1} v_i^{k_i - 1} / (k_i - 1)! q^{u_i v_i} ),
// truncated at q^N.
inline QSeries bracket_g(const std::vector<int>& k, int order) {
  for (int e : k)
    if (e < 1) throw std::invalid_argument("bracket exponents must be >= 1");
  return detail::chain_sum(static_cast<int>(k.size()), order, [&](int i, int u) {
    const int ki = k[static_cast<size_t>(i)];
    const Rational scale(Integer(1), factorial(static_cast<unsigned>(ki - 1)));
    QSeries f(order);
    for (int v = 1; u * v <= order; ++v)
      f.set_coeff(u * v, scale * Rational(int_pow(v, static_cast<unsigned>(ki - 1))));
    return f;
  });
}

// Sum over all partitions with exactly d distinct parts, in Stanley
// coordinates (parts u_1 > ... > u_d > 0 with multiplicities v_i > 0):
//
//   sum_lambda u_1^{m_1} v_1^{l_1} ... u_d^{m_d} v_d^{l_d} q^{|lambda|}
//
// truncated at q^N.  d = 0 gives the constant 1 (the empty partition).
inline QSeries gen_partition(const std::vector<std::pair<int, int>>& exponents, int order) {
  for (const auto& [m, l] : exponents)
    if (m < 0 || l < 0) throw std::invalid_argument("partition exponents must be >= 0");
  return detail::chain_sum(static_cast<int>(exponents.size()), order, [&](int i, int u) {
    const auto& [m, l] = exponents[static_cast<size_t>(i)];
    const Rational um(int_pow(u, static_cast<unsigned>(m)));
    QSeries f(order);
    for (int v = 1; u * v <= order; ++v)
      f.set_coeff(u * v, um * Rational(int_pow(v, static_cast<unsigned>(l))));
    return f;
  });
}

// ---------------------------------------------------------------------------
// Numeric checks tying the q-expansions to the word algebra
// ---------------------------------------------------------------------------

// The block word b_{k_1} b_0^{m_1} ... b_{k_d} b_0^{m_d} encoding the index
// (k_1, {0}^{m_1}, ..., k_d, {0}^{m_d}).
inline Word sz_block_word(const std::vector<int>& k, const std::vector<int>& m) {
  if (k.size() != m.size()) throw std::invalid_argument("index lists must have equal length");
  if (k.empty()) throw std::invalid_argument("index lists must be nonempty");
  std::vector<std::pair<int, int>> blocks;
  blocks.reserve(k.size());
  for (size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1 || m[i] < 0) throw std::invalid_argument("need k_i >= 1 and m_i >= 0");
    blocks.emplace_back(k[i], m[i]);
  }
  return block_word_b(blocks);
}

// Does the q-expansion of (k_1, {0}^{m_1}, ..., k_d, {0}^{m_d}) agree with
// that of its tau image, coefficientwise to q^N?  The image index is read
// off the formal involution on the block word.
inline bool sz_tau_invariance_check(const std::vector<int>& k, const std::vector<int>& m,
                                    int order) {
  const Word w = sz_block_word(k, m);
  return qzeta_sz(w, order) == qzeta_sz(tau(w), order);
}

// Re-derives the same q-expansion from the binomial form
//
//   sum_{N_1 > ... > N_d > N_{d+1} = 0, r_i > 0}
//     prod_i C(N_i - N_{i+1} - 1, m_i) C(r_i - 1, k_i - 1) q^{N_i r_i}
//
// by direct enumeration and compares coefficientwise to q^N.
inline bool sz_binomial_identity_check(const std::vector<int>& k, const std::vector<int>& m,
                                       int order) {
  const Word w = sz_block_word(k, m);
  const int d = static_cast<int>(k.size());
  QSeries expanded(order);
  // chain[i] = N_{i+1}; enumerate depth-first, pruning once the exponent
  // budget is exhausted.  The gap factor C(N_i - N_{i+1} - 1, m_i) is applied
  // as soon as both chain entries are known; the last gap closes against
  // N_{d+1} = 0.
  std::vector<int> chain(static_cast<size_t>(d));
  const std::function<void(int, int, const Rational&)> walk = [&](int pos, int spent,
                                                                  const Rational& weight) {
    if (pos == d) {
      expanded.add_coeff(spent, weight);
      return;
    }
    const int upper = (pos == 0) ? order : chain[static_cast<size_t>(pos) - 1] - 1;
    for (int ni = 1; ni <= upper && spent + ni <= order; ++ni) {
      chain[static_cast<size_t>(pos)] = ni;
      Rational gaps = weight;
      if (pos > 0) {
        const Integer cg =
            binomial(chain[static_cast<size_t>(pos) - 1] - ni - 1, m[static_cast<size_t>(pos) - 1]);
        if (cg == 0) continue;
        gaps *= Rational(cg);
      }
      for (int r = 1; spent + ni * r <= order; ++r) {
        const Integer cr = binomial(r - 1, k[static_cast<size_t>(pos)] - 1);
        if (cr == 0) continue;
        Rational term = gaps * Rational(cr);
        if (pos + 1 == d) {
          const Integer last = binomial(ni - 1, m[static_cast<size_t>(pos)]);
          if (last == 0) continue;
          term *= Rational(last);
        }
        walk(pos + 1, spent + ni * r, term);
      }
    }
  };
  walk(0, 0, Rational(1));
  return expanded == qzeta_sz(w, order);
}

// ---------------------------------------------------------------------------
// Depth-one bi-Eisenstein expansions
// ---------------------------------------------------------------------------

// c_n -> n c_n, the operator q d/dq on truncated expansions.
inline QSeries q_derivative(const QSeries& f) {
  QSeries g(f.order());
  for (int n = 1; n <= f.order(); ++n) g.set_coeff(n, Rational(n) * f.coeff(n));
  return g;
}

inline QSeries q_derivative(QSeries f, int times) {
  if (times < 0) throw std::invalid_argument("cannot differentiate a negative number of times");
  for (int i = 0; i < times; ++i) f = q_derivative(f);
  return f;
}

// G(k | m) = -delta_{m,0} B_k / (2 k!) - delta_{k,1} B_{m+1} / (2 (m+1))
//            + (1/(k-1)!) sum_{u,v >= 1} u^m v^{k-1} q^{uv},
// defined for k > m >= 0.  Both delta terms are active at (k, m) = (1, 0),
// where the constant is 1/4 + 1/4 = 1/2.
inline QSeries bi_eisenstein_depth1(int k, int m, int order) {
  if (m < 0 || k <= m) throw std::invalid_argument("need k > m >= 0");
  QSeries g(order);
  Rational c = 0;
  if (m == 0) c -= bernoulli(k) / Rational(2 * factorial(static_cast<unsigned>(k)));
  if (k == 1) c -= bernoulli(m + 1) / Rational(2 * (m + 1));
  g.set_coeff(0, c);
  const Rational scale(Integer(1), factorial(static_cast<unsigned>(k - 1)));
  for (int u = 1; u <= order; ++u) {
    const Rational um(int_pow(u, static_cast<unsigned>(m)));
    for (int v = 1; u * v <= order; ++v)
      g.add_coeff(u * v, scale * um * Rational(int_pow(v, static_cast<unsigned>(k - 1))));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Rank of a family of truncated expansions
// ---------------------------------------------------------------------------

// Rank of the coefficient matrix (rows = series, columns = q^0..q^N).  All
// inputs must share one truncation order.  A full rank certifies linear
// independence; a rank drop at finite order is only a hint, never a proof,
// that a relation holds.
inline int span_dimension(const std::vector<QSeries>& fs) {
  if (fs.empty()) return 0;
  const int order = fs.front().order();
  RatMatrix mat(order + 1);
  for (const QSeries& f : fs) {
    if (f.order() != order) throw std::invalid_argument("span_dimension needs equal orders");
    mat.add_row(f.coefficients());
  }
  return rank(mat);
}

}  // namespace qmzv
