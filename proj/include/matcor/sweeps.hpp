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
#include <string>
#include <vector>

#include "matcor/analytics.hpp"
#include "matcor/certificates.hpp"
#include "matcor/correlation.hpp"

namespace matcor {

struct WeightCase {
  std::string label;  // "unit" or "random-k"
  std::vector<BigRational> weights;
};
// Unit weights followed by `random_count` fixed-seed random vectors.
std::vector<WeightCase> weight_cases(int n, int random_count, std::uint64_t seed = 0xC0FFEE);

struct PairResult {
  std::string weights;
  CorrelationReport report;
};
// Every eligible pair i < j under every weight case; one enumeration per case.
std::vector<PairResult> theorem1_sweep(const Matroid& m, const std::vector<WeightCase>& cases,
                                       const EnumerationOptions& options = {});

struct CertificateResult {
  std::string weights;
  int i = 0;
  int j = 0;
  WeightedPartitionSums sums;
  std::vector<BigRational> profile;
  CertificateReport report;
};
// Pairs with s_both = 0 or s_neither = 0 are skipped (the certificate is vacuous).
std::vector<CertificateResult> certificate_sweep(const Matroid& m,
                                                 const std::vector<WeightCase>& cases,
                                                 const EnumerationOptions& options = {});

struct FreeExtensionCase {
  int index = 0;
  Matroid base;
  Matroid extended;
  std::string weights;
  CorrelationReport report;
};
// Random binary matroids N (2 <= n <= max_n) extended by two free elements,
// checked under unit weights and one random weight vector each.
std::vector<FreeExtensionCase> theorem2_sweep(int count, std::uint64_t seed = 0xC0FFEE,
                                              int max_n = 10,
                                              const EnumerationOptions& options = {});

struct MasonCase {
  int index = 0;
  Matroid matroid;
  MasonReport report;
};
std::vector<MasonCase> mason_sweep(int count, std::uint64_t seed = 0xC0FFEE, int max_n = 12,
                                   const EnumerationOptions& options = {});

}  // namespace matcor
