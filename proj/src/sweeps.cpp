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

#include "matcor/sweeps.hpp"

#include <random>

namespace matcor {

std::vector<WeightCase> weight_cases(int n, int random_count, std::uint64_t seed) {
  std::vector<WeightCase> out{{"unit", unit_weights(n)}};
  auto vs = random_weight_vectors(n, random_count, seed);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    out.push_back({"random-" + std::to_string(k), std::move(vs[k])});
  }
  return out;
}

std::vector<PairResult> theorem1_sweep(const Matroid& m, const std::vector<WeightCase>& cases,
                                       const EnumerationOptions& options) {
  const auto eligible = eligible_elements(m);
  const BigRational bound = theorem1_bound(m.rank());
  std::vector<PairResult> out;
  for (const auto& c : cases) {
    PairTable table = pair_table(m, c.weights, options);
    for (std::size_t a = 0; a < eligible.size(); ++a) {
      for (std::size_t b = a + 1; b < eligible.size(); ++b) {
        out.push_back({c.label, evaluate_bound(table.pair(eligible[a], eligible[b]), bound)});
      }
    }
  }
  return out;
}

std::vector<CertificateResult> certificate_sweep(const Matroid& m,
                                                 const std::vector<WeightCase>& cases,
                                                 const EnumerationOptions& options) {
  std::vector<CertificateResult> out;
  if (m.rank() < 2) return out;
  const auto eligible = eligible_elements(m);
  for (const auto& c : cases) {
    PairTable table = pair_table(m, c.weights, options);
    std::vector<BigRational> profile = weighted_profile(m, c.weights, options);
    for (std::size_t a = 0; a < eligible.size(); ++a) {
      for (std::size_t b = a + 1; b < eligible.size(); ++b) {
        WeightedPartitionSums s = table.pair(eligible[a], eligible[b]);
        if (s.s_both == 0 || s.s_neither == 0) continue;
        out.push_back({c.label, s.i, s.j, s, profile, evaluate_certificates(s, profile)});
      }
    }
  }
  return out;
}

std::vector<FreeExtensionCase> theorem2_sweep(int count, std::uint64_t seed, int max_n,
                                              const EnumerationOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<FreeExtensionCase> out;
  for (int k = 0; k < count; ++k) {
    const int n = 2 + static_cast<int>(rng() % (max_n - 1));
    Matroid base = random_gf2_matroid(rng, n, 5);
    Matroid ext = base.free_extend(2);
    const int i = n, j = n + 1;
    std::vector<WeightCase> cases{{"unit", unit_weights(n + 2)},
                                  {"random-0", random_weights(rng, n + 2)}};
    for (const auto& c : cases) {
      out.push_back({k, base, ext, c.label, check_theorem2(ext, i, j, c.weights, options)});
    }
  }
  return out;
}

std::vector<MasonCase> mason_sweep(int count, std::uint64_t seed, int max_n,
                                   const EnumerationOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<MasonCase> out;
  for (int k = 0; k < count; ++k) {
    const int n = 1 + static_cast<int>(rng() % max_n);
    Matroid m = random_gf2_matroid(rng, n, 6);
    out.push_back({k, m, mason_check(independence_profile(m, options), n)});
  }
  return out;
}

}  // namespace matcor
