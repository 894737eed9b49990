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
#include <vector>

#include "qmzv/rational.hpp"

namespace qmzv {

using RatVector = std::vector<Rational>;

struct RatMatrix {
  int cols = 0;
  std::vector<RatVector> rows;

  explicit RatMatrix(int ncols) : cols(ncols) {}
  void add_row(RatVector r) {
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("row width mismatch");
    rows.push_back(std::move(r));
  }
  int nrows() const { return static_cast<int>(rows.size()); }
};

// A subspace held in reduced row echelon form.  Rows are kept sorted by
// pivot column with pivot entry 1 and zeros above and below each pivot, so
// two equal subspaces have identical bases regardless of insertion order.
class RelationSpace {
 public:
  explicit RelationSpace(int ambient_dim) : cols_(ambient_dim) {}

  int ambient_dim() const { return cols_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<RatVector>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Subtract the projection onto the span: afterwards v has zeros in all
  // pivot columns.  Returns the coordinates used, one per basis row.
  RatVector reduce(RatVector& v) const {
    RatVector coords(rows_.size(), Rational(0));
    for (size_t i = 0; i < rows_.size(); ++i) {
      const int p = pivots_[i];
      if (v[p] == 0) continue;
      Rational c = v[p];
      coords[i] = c;
      const RatVector& row = rows_[i];
      for (int j = p; j < cols_; ++j)
        if (row[j] != 0) v[j] -= c * row[j];
    }
    return coords;
  }

  // Insert one vector; returns true if it enlarged the span.
  bool insert(RatVector v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector width mismatch");
    reduce(v);
    int p = -1;
    for (int j = 0; j < cols_; ++j)
      if (v[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) return false;
    Rational lead = v[p];
    for (int j = p; j < cols_; ++j)
      if (v[j] != 0) v[j] /= lead;
    for (size_t i = 0; i < rows_.size(); ++i) {
      RatVector& row = rows_[i];
      if (row[p] == 0) continue;
      Rational c = row[p];
      for (int j = p; j < cols_; ++j)
        if (v[j] != 0) row[j] -= c * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
  }

  bool contains(RatVector v) const {
    reduce(v);
    for (const Rational& c : v)
      if (c != 0) return false;
    return true;
  }

  // Coordinates of v on the basis, if v lies in the span.
  std::optional<RatVector> in_span(RatVector v) const {
    RatVector coords = reduce(v);
    for (const Rational& c : v)
      if (c != 0) return std::nullopt;
    return coords;
  }

  friend bool operator==(const RelationSpace& a, const RelationSpace& b) {
    return a.cols_ == b.cols_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  int cols_;
  std::vector<RatVector> rows_;
  std::vector<int> pivots_;
};

// Reduced row echelon form with deterministic first-nonzero pivoting.
inline RelationSpace rref(const RatMatrix& m) {
  RelationSpace space(m.cols);
  for (const RatVector& r : m.rows) space.insert(r);
  return space;
}

inline int rank(const RatMatrix& m) { return rref(m).dim(); }

// Basis of the right kernel {x : M x = 0}, one vector per free column of
// the RREF, in ascending free-column order.
inline std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RelationSpace space = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : space.pivots()) is_pivot[p] = true;
  std::vector<RatVector> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(m.cols, Rational(0));
    x[f] = 1;
    for (size_t i = 0; i < space.basis().size(); ++i) x[space.pivots()[i]] = -space.basis()[i][f];
    out.push_back(std::move(x));
  }
  return out;
}

inline RatVector matrix_apply(const RatMatrix& m, const RatVector& x) {
  RatVector y(m.nrows(), Rational(0));
  for (int i = 0; i < m.nrows(); ++i) {
    Rational s = 0;
    for (int j = 0; j < m.cols; ++j)
      if (m.rows[i][j] != 0 && x[j] != 0) s += m.rows[i][j] * x[j];
    y[i] = s;
  }
  return y;
}

}  // namespace qmzv
