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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matcor/enumeration.hpp"
#include "matcor/matroid.hpp"

namespace matcor {

struct CorrelationReport {
  int i = 0;
  int j = 0;
  int d = 0;
  WeightedPartitionSums sums;
  // Empty when s_i_only * s_j_only = 0.
  std::optional<BigRational> ratio;
  BigRational bound;
  bool satisfied = false;
  bool free_pair = false;
};

// Elements that are neither loops nor coloops.
std::vector<int> eligible_elements(const Matroid& m);
// Throws DomainError naming the element when e is a loop or a coloop.
void require_eligible(const Matroid& m, int e);

// (s_both * s_neither) / (s_i_only * s_j_only); empty on a zero denominator.
std::optional<BigRational> ratio_of(const WeightedPartitionSums& s);
std::optional<BigRational> correlation_ratio(const Matroid& m, int i, int j,
                                             const std::vector<BigRational>& weights,
                                             const EnumerationOptions& options = {});

// 2(1 - 1/d) and (1 - 1/d).
BigRational theorem1_bound(int d);
BigRational theorem2_bound(int d);
// Exact s_both * s_neither <= bound * s_i_only * s_j_only.
CorrelationReport evaluate_bound(const WeightedPartitionSums& s, const BigRational& bound);

CorrelationReport check_theorem1(const Matroid& m, int i, int j,
                                 const std::vector<BigRational>& weights,
                                 const EnumerationOptions& options = {});
// Both elements must be free; this is checked.
CorrelationReport check_theorem2(const Matroid& m, int i, int j,
                                 const std::vector<BigRational>& weights,
                                 const EnumerationOptions& options = {});

struct Prop41Report {
  int d = 0;
  BigRational lhs;  // W_{d-1}^2
  BigRational rhs;  // d/(d-1) * W_{d-2} * W_d
  bool satisfied = false;
};
// `profile` holds W_0..W_d (weighted or plain counts). Needs d >= 2.
Prop41Report check_prop41(const std::vector<BigRational>& profile);

enum class AlphaStrategy { kUnit, kGrid, kAscent };
AlphaStrategy parse_strategy(const std::string& name);
std::string to_string(AlphaStrategy s);

struct AlphaOptions {
  AlphaStrategy strategy = AlphaStrategy::kUnit;
  int levels = 4;      // grid ladder 1, 2, ..., 2^levels
  double tol = 1e-6;   // ascent: stop below this relative improvement
  int max_iter = 50;   // sweeps over all coordinates
};

struct AlphaEstimate {
  BigRational best_ratio;
  std::vector<BigRational> weights;
  int i = 0;
  int j = 0;
  std::string strategy;
  int evaluations = 0;  // pair tables computed
};

// Certified lower bound for alpha(M): best_ratio is the exact ratio of the
// witness pair under the witness weights.
AlphaEstimate alpha_lower_bound(const Matroid& m, const AlphaOptions& alpha = {},
                                const EnumerationOptions& options = {});

// Numerators and denominators uniform in 1..64.
std::vector<BigRational> random_weights(std::mt19937_64& rng, int n);
std::vector<std::vector<BigRational>> random_weight_vectors(int n, int count,
                                                            std::uint64_t seed = 0xC0FFEE);
// Random binary matrix matroid with n elements, rows <= max_rows, rank >= 1.
Matroid random_gf2_matroid(std::mt19937_64& rng, int n, int max_rows);

}  // namespace matcor
