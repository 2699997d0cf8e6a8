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

#include <optional>
#include <vector>

#include "matcor/enumeration.hpp"
#include "matcor/matroid.hpp"

namespace matcor {

// Three strengthenings of log-concavity of I_0..I_d, cross-multiplied:
//   (1) I_k^2 >= I_{k-1} I_{k+1}
//   (2) k I_k^2 >= (k+1) I_{k-1} I_{k+1}
//   (3) k (n-k) I_k^2 >= (k+1)(n-k+1) I_{k-1} I_{k+1}
struct MasonRecord {
  int k = 0;
  bool holds_1 = false;
  bool holds_2 = false;
  bool holds_3 = false;
  BigInt margin_1;  // left minus right
  BigInt margin_2;
  BigInt margin_3;
};

struct MasonReport {
  int n = 0;
  int d = 0;
  std::vector<MasonRecord> records;  // k = 1..d-1
  bool all_1() const;
  bool all_2() const;
  bool all_3() const;
};

MasonReport mason_check(const IndependenceProfile& profile, int n);

// Shannon entropy in bits of a distribution given exactly.
double entropy_bits(const std::vector<BigRational>& p);
// Entropy in bits of Poisson(lambda). Throws InputError for lambda <= 0.
double poisson_entropy(double lambda);
// 0.5 log2(2 pi e (x + 1/12)).
double poisson_upper_bound(double x);
// 0.5 log2(pi d / 2).
double boolean_lower_bound(int d);

struct Concentration {
  int k = 0;            // argmax of p_k, smallest on ties
  BigRational p;        // p_k
  bool holds = false;   // 25 d p_k^2 > 1, i.e. p_k > 1/(5 sqrt d)
};
Concentration concentration_check(const IndependenceProfile& profile);
Concentration concentration_check(const Matroid& m, const EnumerationOptions& options = {});

struct EntropyReport {
  int d = 0;
  std::vector<BigRational> distribution;  // p_k = I_k / sum
  BigRational mean;                        // E[I_M]
  double entropy = 0;                      // bits
  double lambda = 0;
  double poisson = 0;                      // H(Poisson(lambda))
  double upper_bound = 0;                  // 0.5 log2(2 pi e (d + 1/12))
  std::optional<double> lower_chain;       // boolean matroids only
  Concentration concentration;
  double concentration_threshold = 0;      // 1 / (5 sqrt d), reporting only
  bool poisson_ok = false;                 // H <= H(Poisson) + 2^-20
  bool upper_ok = false;                   // H(Poisson) <= upper_bound + 2^-20
  bool max_prob_ok = false;                // max p_k >= 2^-H
};

EntropyReport entropy_report(const IndependenceProfile& profile, bool boolean = false);
EntropyReport entropy_report(const Matroid& m, const EnumerationOptions& options = {});

}  // namespace matcor
