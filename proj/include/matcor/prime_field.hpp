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

#include <cstdint>
#include <span>
#include <vector>

#include "matcor/subset_mask.hpp"

namespace matcor {

bool is_prime(std::uint64_t value);

// Arithmetic in GF(p). Inverses are tabulated when p < 2^16.
class ModArith {
 public:
  explicit ModArith(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inverses_;
};

// Column-major matrix over GF(p). Immutable after construction.
class PrimeFieldMatrix {
 public:
  // columns[c] has `rows` entries; any integers, reduced mod p here.
  // Throws ConfigError when p is not prime.
  PrimeFieldMatrix(std::uint32_t p, int rows,
                   const std::vector<std::vector<std::int64_t>>& columns);

  std::uint32_t modulus() const { return arith_.modulus(); }
  const ModArith& arith() const { return arith_; }
  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  std::uint32_t at(int row, int col) const { return columns_[col][row]; }
  std::span<const std::uint32_t> column(int col) const { return columns_[col]; }

  // Word-packed copy of column `col` (GF(2) only; bit r = entry r).
  int words_per_column() const { return words_; }
  std::span<const std::uint64_t> packed_column(int col) const {
    return {packed_.data() + static_cast<std::size_t>(col) * words_,
            static_cast<std::size_t>(words_)};
  }

 private:
  ModArith arith_;
  int rows_;
  std::vector<std::vector<std::uint32_t>> columns_;
  int words_ = 0;
  std::vector<std::uint64_t> packed_;
};

// Rank of the selected columns. Dispatches to the packed path when p = 2.
int rank_mod_p(const PrimeFieldMatrix& matrix, const SubsetMask& cols);
// Generic elimination, never packed. Exposed so the two paths can be compared.
int rank_mod_p_generic(const PrimeFieldMatrix& matrix, const SubsetMask& cols);
int rank_gf2_packed(const PrimeFieldMatrix& matrix, const SubsetMask& cols);

// Incremental row echelon form over GF(2) on packed vectors. push() reduces a
// vector against the stored ones and keeps it when nonzero; pop() undoes the
// most recent successful push.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(int words) : words_(words) {}
  bool push(std::span<const std::uint64_t> vec);
  void pop();
  int size() const { return static_cast<int>(pivots_.size()); }

 private:
  int words_;
  std::vector<std::uint64_t> basis_;  // size() * words_
  std::vector<int> pivots_;
  std::vector<std::uint64_t> scratch_;
};

// Same contract over GF(p); stored vectors are normalized to pivot 1.
class GfpEchelon {
 public:
  GfpEchelon(const ModArith& arith, int rows) : arith_(&arith), rows_(rows) {}
  bool push(std::span<const std::uint32_t> vec);
  void pop();
  int size() const { return static_cast<int>(pivots_.size()); }

 private:
  const ModArith* arith_;
  int rows_;
  std::vector<std::uint32_t> basis_;
  std::vector<int> pivots_;
  std::vector<std::uint32_t> scratch_;
};

}  // namespace matcor
