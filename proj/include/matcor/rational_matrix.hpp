// Copyright 2023 The Authors.
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

#include <span>
#include <vector>

#include "matcor/bigint.hpp"
#include "matcor/subset_mask.hpp"

namespace matcor {

// Column-major matrix of exact rationals. Each column is also kept as a
// primitive integer vector (scaled by the lcm of its denominators), which
// has the same span and is what the elimination routines consume.
class RationalMatrix {
 public:
  RationalMatrix(int rows, const std::vector<std::vector<BigRational>>& columns);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  const BigRational& at(int row, int col) const { return columns_[col][row]; }
  std::span<const BigInt> integer_column(int col) const { return integer_columns_[col]; }

 private:
  int rows_;
  std::vector<std::vector<BigRational>> columns_;
  std::vector<std::vector<BigInt>> integer_columns_;
};

// Exact rank of the selected columns by fraction-free (Bareiss) elimination.
int rank_rational(const RationalMatrix& matrix, const SubsetMask& cols);

// Incremental echelon form over the rationals on integer vectors. Reduction
// is fraction-free and every stored vector is divided by its content.
class RationalEchelon {
 public:
  explicit RationalEchelon(int rows) : rows_(rows) {}
  bool push(std::span<const BigInt> vec);
  void pop();
  int size() const { return static_cast<int>(pivots_.size()); }

 private:
  int rows_;
  std::vector<std::vector<BigInt>> basis_;
  std::vector<int> pivots_;
};

}  // namespace matcor
