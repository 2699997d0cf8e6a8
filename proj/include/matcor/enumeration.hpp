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
#include <functional>
#include <vector>

#include "matcor/bigint.hpp"
#include "matcor/matroid.hpp"

namespace matcor {

struct EnumerationOptions {
  // 0 selects std::thread::hardware_concurrency().
  int workers = 1;
  // The search tree is cut into independent jobs at this depth.
  int split_depth = 2;
  // Deliver bases in lexicographic order. When false, each subtree's bases
  // are delivered as soon as its job finishes, possibly from worker threads.
  bool ordered = true;
};

struct IndependenceProfile {
  int d = 0;
  std::vector<BigInt> counts;  // I_0 .. I_d
  // Search-tree nodes visited; equals the number of independent sets.
  std::uint64_t nodes_visited = 0;

  BigInt total() const;
};

struct BasisPartitionCounts {
  int i = 0;
  int j = 0;
  int d = 0;
  BigInt s_both;     // bases containing i and j
  BigInt s_i_only;   // containing i, not j
  BigInt s_j_only;   // containing j, not i
  BigInt s_neither;  // containing neither

  BigInt total() const { return s_both + s_i_only + s_j_only + s_neither; }
  bool operator==(const BasisPartitionCounts&) const = default;
};

// Same split with each basis weighted by the product of its element weights.
struct WeightedPartitionSums {
  int i = 0;
  int j = 0;
  int d = 0;
  BigRational s_both;
  BigRational s_i_only;
  BigRational s_j_only;
  BigRational s_neither;

  BigRational total() const { return s_both + s_i_only + s_j_only + s_neither; }
  static WeightedPartitionSums from_counts(const BasisPartitionCounts& c);
};

std::vector<BigRational> unit_weights(int n);
bool is_unit(const std::vector<BigRational>& weights);
// Throws InputError on a length mismatch or a nonpositive entry.
void validate_weights(const std::vector<BigRational>& weights, int n);

// Calls `sink` once per basis. With options.ordered (the default) the order is
// lexicographic in the sorted element sequence and independent of workers.
void for_each_basis(const Matroid& m, const std::function<void(const SubsetMask&)>& sink,
                    const EnumerationOptions& options = {});
std::vector<SubsetMask> enumerate_bases(const Matroid& m, const EnumerationOptions& options = {});

IndependenceProfile independence_profile(const Matroid& m, const EnumerationOptions& options = {});

// W_0 .. W_d: weighted sums over independent sets of each size.
std::vector<BigRational> weighted_profile(const Matroid& m, const std::vector<BigRational>& weights,
                                          const EnumerationOptions& options = {});

BasisPartitionCounts basis_partition(const Matroid& m, int i, int j,
                                     const EnumerationOptions& options = {});

WeightedPartitionSums weighted_partition(const Matroid& m, int i, int j,
                                         const std::vector<BigRational>& weights,
                                         const EnumerationOptions& options = {});

// Weighted partitions for every pair from a single enumeration.
class PairTable {
 public:
  PairTable(int n, int d, BigRational total, std::vector<BigRational> single,
            std::vector<BigRational> both);
  int size() const { return n_; }
  int rank() const { return d_; }
  const BigRational& total() const { return total_; }
  // Weighted sum of bases containing e.
  const BigRational& containing(int e) const { return single_[e]; }
  WeightedPartitionSums pair(int i, int j) const;

 private:
  int n_;
  int d_;
  BigRational total_;
  std::vector<BigRational> single_;
  std::vector<BigRational> both_;  // n * n, symmetric
};

PairTable pair_table(const Matroid& m, const std::vector<BigRational>& weights,
                     const EnumerationOptions& options = {});

// Floating-point pair table for search heuristics; never used for a verdict.
struct PairTableApprox {
  int n = 0;
  double total = 0;
  std::vector<double> single;
  std::vector<double> both;
};
PairTableApprox pair_table_approx(const Matroid& m, const std::vector<double>& weights,
                                  const EnumerationOptions& options = {});

}  // namespace matcor
