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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace crooked {

// Dense row-major bit matrix over F_2, 64 columns per word.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool Get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void Set(std::size_t r, std::size_t c, bool v = true) {
    std::uint64_t& w = data_[r * words_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }
  void Flip(std::size_t r, std::size_t c) {
    data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
  }

  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

  // Rank by word-parallel Gaussian elimination on a copy.
  std::size_t Rank() const;
  // In-place reduced row echelon form; returns the pivot column of each
  // nonzero row, in row order.
  std::vector<std::size_t> ReduceRowEchelon();
  // Basis of {v : M v = 0}, each vector packed into words of 64 bits.
  std::vector<std::vector<std::uint64_t>> NullSpace() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

// Echelon basis of the span of a set of words (at most 64 bits each).
std::vector<std::uint64_t> SpanBasis(const std::vector<std::uint64_t>& vectors);
inline int SpanRank(const std::vector<std::uint64_t>& vectors) {
  return static_cast<int>(SpanBasis(vectors).size());
}

}  // namespace crooked
