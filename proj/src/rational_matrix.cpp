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

#include "matcor/rational_matrix.hpp"

#include <string>

#include "matcor/errors.hpp"

namespace matcor {
namespace {

void divide_by_content(std::vector<BigInt>& vec) {
  BigInt g = 0;
  for (const auto& v : vec) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g > 1) {
    for (auto& v : vec) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

RationalMatrix::RationalMatrix(int rows, const std::vector<std::vector<BigRational>>& columns)
    : rows_(rows), columns_(columns) {
  if (rows < 0) throw InputError("negative row count");
  integer_columns_.reserve(columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    auto& col = columns_[c];
    if (static_cast<int>(col.size()) != rows) {
      throw InputError("column " + std::to_string(c) + " has " + std::to_string(col.size()) +
                       " entries, expected " + std::to_string(rows));
    }
    BigInt lcm = 1;
    for (auto& v : col) {
      v.canonicalize();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<BigInt> ints(col.size());
    for (std::size_t r = 0; r < col.size(); ++r) {
      ints[r] = col[r].get_num() * (lcm / col[r].get_den());
    }
    divide_by_content(ints);
    integer_columns_.push_back(std::move(ints));
  }
}

int rank_rational(const RationalMatrix& matrix, const SubsetMask& cols) {
  std::vector<int> selected = cols.elements();
  for (int c : selected) {
    if (c >= matrix.cols()) throw InputError("column " + std::to_string(c) + " out of range");
  }
  const int rows = matrix.rows();
  const int ncols = static_cast<int>(selected.size());
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(ncols));
  for (int k = 0; k < ncols; ++k) {
    auto col = matrix.integer_column(selected[k]);
    for (int r = 0; r < rows; ++r) a[r][k] = col[r];
  }
  // Bareiss: after step k every entry below the pivot rows is an exact
  // multiple of the previous pivot, so the division is exact.
  BigInt prev = 1;
  int rank = 0;
  for (int col = 0; col < ncols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int k = col + 1; k < ncols; ++k) {
        BigInt v = a[rank][col] * a[r][k] - a[r][col] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

bool RationalEchelon::push(std::span<const BigInt> vec) {
  std::vector<BigInt> v(vec.begin(), vec.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const int p = pivots_[k];
    if (v[p] == 0) continue;
    const auto& row = basis_[k];
    BigInt scale = row[p];
    BigInt factor = v[p];
    for (int r = 0; r < rows_; ++r) v[r] = scale * v[r] - factor * row[r];
    divide_by_content(v);
  }
  for (int r = 0; r < rows_; ++r) {
    if (v[r] != 0) {
      pivots_.push_back(r);
      basis_.push_back(std::move(v));
      return true;
    }
  }
  return false;
}

void RationalEchelon::pop() {
  pivots_.pop_back();
  basis_.pop_back();
}

}  // namespace matcor
