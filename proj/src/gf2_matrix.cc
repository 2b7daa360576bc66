// Copyright 2026 The Crooked Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crooked/gf2_matrix.h"

#include <bit>
#include <algorithm>
#include <utility>

namespace crooked {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

std::size_t Gf2Matrix::Rank() const {
  // Forward elimination only; rows above the pivot are left alone.
  Gf2Matrix m = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t r = rank;
    while (r < rows_ && !(m.data_[r * words_ + w] & bit)) ++r;
    if (r == rows_) continue;
    if (r != rank) std::swap_ranges(m.row(r) + w, m.row(r) + words_, m.row(rank) + w);
    const std::uint64_t* src = m.row(rank);
    for (std::size_t other = rank + 1; other < rows_; ++other) {
      std::uint64_t* dst = m.row(other);
      if (!(dst[w] & bit)) continue;
      for (std::size_t k = w; k < words_; ++k) dst[k] ^= src[k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> Gf2Matrix::ReduceRowEchelon() {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t r = pivot_row;
    while (r < rows_ && !(data_[r * words_ + w] & bit)) ++r;
    if (r == rows_) continue;
    if (r != pivot_row) {
      std::swap_ranges(row(r) + w, row(r) + words_, row(pivot_row) + w);
    }
    const std::uint64_t* src = row(pivot_row);
    for (std::size_t other = 0; other < rows_; ++other) {
      if (other == pivot_row) continue;
      std::uint64_t* dst = row(other);
      if (!(dst[w] & bit)) continue;
      // Columns left of w are already zero in the pivot row.
      for (std::size_t k = w; k < words_; ++k) dst[k] ^= src[k];
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::vector<std::vector<std::uint64_t>> Gf2Matrix::NullSpace() const {
  Gf2Matrix reduced = *this;
  const std::vector<std::size_t> pivots = reduced.ReduceRowEchelon();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(words_, 0);
    v[free / 64] |= std::uint64_t{1} << (free % 64);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (reduced.Get(i, free)) v[pivots[i] / 64] |= std::uint64_t{1} << (pivots[i] % 64);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::uint64_t> SpanBasis(const std::vector<std::uint64_t>& vectors) {
  // XOR basis keyed by leading bit.
  std::uint64_t basis[64] = {};
  std::vector<std::uint64_t> out;
  for (std::uint64_t v : vectors) {
    while (v != 0) {
      const int lead = 63 - std::countl_zero(v);
      if (basis[lead] == 0) {
        basis[lead] = v;
        out.push_back(v);
        break;
      }
      v ^= basis[lead];
    }
  }
  return out;
}

}  // namespace crooked
