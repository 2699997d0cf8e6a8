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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "matcor/enumeration.hpp"
#include "matcor/matroid.hpp"

namespace matcor {

struct CatalogEntry {
  std::string name;
  Matroid matroid;
  int i = 0;
  int j = 1;
  std::optional<BasisPartitionCounts> expected;
  // "published" for literature counts, "closed-form" for family formulas.
  std::string provenance;
  std::string notes;
};

// Tip-and-legs family: e1, e2+...+ed, then k*e1 + e_m for m = 2..d, k = 1..p.
// Element 0 is the tip i, element 1 is j. Over GF(p) p must be prime; with
// `rational` the vectors are read in Q^d and any p >= 1 is allowed.
CatalogEntry spike(int p, int d, bool rational = false);
BasisPartitionCounts spike_closed_form(int p, int d);
// (d^2 - 2d + 1) / (d^2 - 3d + 4).
BigRational spike_ratio(int d);

// Transversal matroid of A_1 = everything, A_k = {j} + block k (k = 2..d),
// blocks of m elements each. Element 0 is i, element 1 is j.
CatalogEntry transversal_family(int m, int d);
BasisPartitionCounts transversal_closed_form(int m, int d);

CatalogEntry example_simplicial();
CatalogEntry example_graphic();
CatalogEntry example_transversal();
CatalogEntry example_steiner(int i = 0, int j = 1);
CatalogEntry s8();

using Octad = std::array<int, 8>;
// Weight-8 words of the extended binary Golay code, sorted. Computed once.
const std::vector<Octad>& golay_octads();

struct GolayReport {
  std::size_t octads = 0;
  std::size_t through_point_min = 0, through_point_max = 0;
  std::size_t through_pair_min = 0, through_pair_max = 0;
  bool intersections_ok = false;     // all pairwise sizes in {0, 2, 4}
  std::size_t five_subsets_checked = 0;
  std::size_t five_subsets_bad = 0;  // not in exactly one octad
  std::size_t steiner_blocks = 0;    // octads with exactly one of (0, 1)
};
// Exhaustive over all 5-subsets when sample == 0, else `sample` random ones.
GolayReport golay_self_check(std::size_t sample = 0, std::uint64_t seed = 0xC0FFEE);

// Octads containing exactly one of i, j.
std::vector<std::vector<int>> steiner_blocks(int i, int j);

std::vector<std::string> catalog_names();
CatalogEntry catalog_entry(const std::string& name);
std::vector<CatalogEntry> catalog();

}  // namespace matcor
