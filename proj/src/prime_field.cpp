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

#include "matcor/prime_field.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "matcor/errors.hpp"

namespace matcor {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

ModArith::ModArith(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw ConfigError("modulus " + std::to_string(p) + " is not prime");
  }
  if (p < (1u << 16)) {
    inverses_.assign(p, 0);
    if (p > 1) inverses_[1] = 1;
    // inv(a) = -(p / a) * inv(p % a)
    for (std::uint32_t a = 2; a < p; ++a) {
      inverses_[a] = mul(p - p / a, inverses_[p % a]);
    }
  }
}

std::uint32_t ModArith::inv(std::uint32_t a) const {
  if (!inverses_.empty()) return inverses_[a];
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

PrimeFieldMatrix::PrimeFieldMatrix(std::uint32_t p, int rows,
                                   const std::vector<std::vector<std::int64_t>>& columns)
    : arith_(p), rows_(rows) {
  if (rows < 0) throw InputError("negative row count");
  columns_.reserve(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows) {
      throw InputError("column " + std::to_string(c) + " has " +
                       std::to_string(columns[c].size()) + " entries, expected " +
                       std::to_string(rows));
    }
    std::vector<std::uint32_t> col(columns[c].size());
    std::transform(columns[c].begin(), columns[c].end(), col.begin(),
                   [&](std::int64_t v) { return arith_.reduce(v); });
    columns_.push_back(std::move(col));
  }
  if (p == 2) {
    words_ = std::max(1, (rows + 63) / 64);
    packed_.assign(columns_.size() * static_cast<std::size_t>(words_), 0);
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      for (int r = 0; r < rows; ++r) {
        if (columns_[c][r]) packed_[c * words_ + r / 64] |= std::uint64_t{1} << (r % 64);
      }
    }
  }
}

int rank_gf2_packed(const PrimeFieldMatrix& matrix, const SubsetMask& cols) {
  if (matrix.modulus() != 2) throw InputError("packed rank requires p = 2");
  Gf2Echelon echelon(matrix.words_per_column());
  for (int c : cols.elements()) {
    if (c >= matrix.cols()) throw InputError("column " + std::to_string(c) + " out of range");
    echelon.push(matrix.packed_column(c));
  }
  return echelon.size();
}

int rank_mod_p_generic(const PrimeFieldMatrix& matrix, const SubsetMask& cols) {
  const ModArith& f = matrix.arith();
  std::vector<int> selected = cols.elements();
  for (int c : selected) {
    if (c >= matrix.cols()) throw InputError("column " + std::to_string(c) + " out of range");
  }
  int rows = matrix.rows();
  int ncols = static_cast<int>(selected.size());
  // Row-major working copy of the selected submatrix.
  std::vector<std::uint32_t> a(static_cast<std::size_t>(rows) * ncols);
  for (int k = 0; k < ncols; ++k) {
    for (int r = 0; r < rows; ++r) a[r * ncols + k] = matrix.at(r, selected[k]);
  }
  int rank = 0;
  for (int col = 0; col < ncols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r * ncols + col]) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int k = 0; k < ncols; ++k) std::swap(a[pivot * ncols + k], a[rank * ncols + k]);
    std::uint32_t inv = f.inv(a[rank * ncols + col]);
    for (int k = col; k < ncols; ++k) a[rank * ncols + k] = f.mul(a[rank * ncols + k], inv);
    for (int r = rank + 1; r < rows; ++r) {
      std::uint32_t factor = a[r * ncols + col];
      if (!factor) continue;
      for (int k = col; k < ncols; ++k) {
        a[r * ncols + k] = f.sub(a[r * ncols + k], f.mul(factor, a[rank * ncols + k]));
      }
    }
    ++rank;
  }
  return rank;
}

int rank_mod_p(const PrimeFieldMatrix& matrix, const SubsetMask& cols) {
  if (matrix.modulus() == 2) return rank_gf2_packed(matrix, cols);
  return rank_mod_p_generic(matrix, cols);
}

bool Gf2Echelon::push(std::span<const std::uint64_t> vec) {
  scratch_.assign(vec.begin(), vec.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    int pivot = pivots_[k];
    if ((scratch_[pivot >> 6] >> (pivot & 63)) & 1u) {
      const std::uint64_t* row = basis_.data() + k * words_;
      for (int w = 0; w < words_; ++w) scratch_[w] ^= row[w];
    }
  }
  for (int w = 0; w < words_; ++w) {
    if (scratch_[w]) {
      pivots_.push_back(w * 64 + std::countr_zero(scratch_[w]));
      basis_.insert(basis_.end(), scratch_.begin(), scratch_.end());
      return true;
    }
  }
  return false;
}

void Gf2Echelon::pop() {
  pivots_.pop_back();
  basis_.resize(pivots_.size() * words_);
}

bool GfpEchelon::push(std::span<const std::uint32_t> vec) {
  const ModArith& f = *arith_;
  scratch_.assign(vec.begin(), vec.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    std::uint32_t factor = scratch_[pivots_[k]];
    if (!factor) continue;
    const std::uint32_t* row = basis_.data() + k * rows_;
    for (int r = 0; r < rows_; ++r) {
      if (row[r]) scratch_[r] = f.sub(scratch_[r], f.mul(factor, row[r]));
    }
  }
  for (int r = 0; r < rows_; ++r) {
    if (scratch_[r]) {
      std::uint32_t inv = f.inv(scratch_[r]);
      for (int s = r; s < rows_; ++s) scratch_[s] = f.mul(scratch_[s], inv);
      pivots_.push_back(r);
      basis_.insert(basis_.end(), scratch_.begin(), scratch_.end());
      return true;
    }
  }
  return false;
}

void GfpEchelon::pop() {
  pivots_.pop_back();
  basis_.resize(pivots_.size() * rows_);
}

}  // namespace matcor
