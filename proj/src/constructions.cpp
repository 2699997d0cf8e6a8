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

#include "matcor/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "matcor/errors.hpp"

namespace matcor {
namespace {

BasisPartitionCounts counts(int i, int j, int d, BigInt both, BigInt i_only, BigInt j_only,
                            BigInt neither) {
  return {i, j, d, std::move(both), std::move(i_only), std::move(j_only), std::move(neither)};
}

BasisPartitionCounts published_counts(int d, long both, long i_only, long j_only, long neither) {
  return counts(0, 1, d, BigInt(both), BigInt(i_only), BigInt(j_only), BigInt(neither));
}

BigInt pw(int base, int e) { return e < 0 ? BigInt(0) : power(BigInt(base), static_cast<unsigned>(e)); }

void check_family(int p, int d) {
  if (d < 2) throw InputError("d must be at least 2, got " + std::to_string(d));
  if (p < 1) throw InputError("p must be positive, got " + std::to_string(p));
}

// (23,12) cyclic Golay code, g(x) = x^11+x^10+x^6+x^5+x^4+x^2+1, plus parity.
constexpr std::uint32_t kGolayGenerator = 0xC75;

std::vector<Octad> build_octads() {
  std::vector<Octad> out;
  for (std::uint32_t msg = 0; msg < (1u << 12); ++msg) {
    std::uint32_t word = 0;
    for (int b = 0; b < 12; ++b) {
      if (msg >> b & 1) word ^= kGolayGenerator << b;
    }
    if (std::popcount(word) & 1) word |= 1u << 23;
    if (std::popcount(word) != 8) continue;
    Octad o{};
    int k = 0;
    for (int b = 0; b < 24; ++b) {
      if (word >> b & 1) o[k++] = b;
    }
    out.push_back(o);
  }
  std::sort(out.begin(), out.end());
  if (out.size() != 759) {
    std::fprintf(stderr, "golay construction produced %zu octads\n", out.size());
    std::abort();
  }
  return out;
}

std::uint32_t octad_mask(const Octad& o) {
  std::uint32_t m = 0;
  for (int e : o) m |= 1u << e;
  return m;
}

}  // namespace

CatalogEntry spike(int p, int d, bool rational) {
  check_family(p, d);
  const int n = 2 + (d - 1) * p;
  std::vector<std::vector<std::int64_t>> cols;
  cols.reserve(n);
  std::vector<std::int64_t> tip(d, 0), j(d, 1);
  tip[0] = 1;
  j[0] = 0;
  cols.push_back(tip);
  cols.push_back(j);
  for (int m = 1; m < d; ++m) {
    for (int k = 1; k <= p; ++k) {
      std::vector<std::int64_t> v(d, 0);
      v[0] = k;
      v[m] = 1;
      cols.push_back(v);
    }
  }
  std::string name = "spike-" + std::to_string(p) + "-" + std::to_string(d);
  if (rational) {
    std::vector<std::vector<BigRational>> q;
    for (const auto& c : cols) q.emplace_back(c.begin(), c.end());
    CatalogEntry e{name + "-q", Matroid::linear_rational(RationalMatrix(d, q))};
    e.expected = transversal_closed_form(p, d);
    e.provenance = "closed-form";
    e.notes = "spike vectors over Q; represents the transversal family N_m^d";
    return e;
  }
  if (!is_prime(static_cast<std::uint64_t>(p))) {
    throw ConfigError("spike over GF(p) needs a prime p, got " + std::to_string(p));
  }
  CatalogEntry e{name, Matroid::linear_gfp(PrimeFieldMatrix(static_cast<std::uint32_t>(p), d, cols))};
  e.expected = spike_closed_form(p, d);
  e.notes = "tip e1 is element 0, e2+...+ed is element 1";
  e.provenance = "closed-form";
  return e;
}

BasisPartitionCounts spike_closed_form(int p, int d) {
  check_family(p, d);
  const BigInt c2 = binomial(static_cast<unsigned>(p), 2);
  BigInt both = (d - 1) * pw(p, d - 2);
  BigInt neither = (d - 1) * c2 * pw(p, d - 2);
  BigInt i_only = pw(p, d - 1);
  BigInt j_only = pw(p, d - 1) - pw(p, d - 2) + (d - 1) * (d - 2) * c2 * pw(p, d - 3);
  return counts(0, 1, d, both, i_only, j_only, neither);
}

BigRational spike_ratio(int d) {
  BigRational r(d * d - 2 * d + 1, d * d - 3 * d + 4);
  r.canonicalize();
  return r;
}

CatalogEntry transversal_family(int m, int d) {
  check_family(m, d);
  const int n = 2 + (d - 1) * m;
  std::vector<std::vector<int>> sets;
  std::vector<int> all(n);
  for (int e = 0; e < n; ++e) all[e] = e;
  sets.push_back(all);
  for (int k = 0; k < d - 1; ++k) {
    std::vector<int> a{1};
    for (int t = 0; t < m; ++t) a.push_back(2 + k * m + t);
    sets.push_back(a);
  }
  CatalogEntry e{"n-" + std::to_string(m) + "-" + std::to_string(d),
                 Matroid::transversal(n, std::move(sets))};
  e.expected = transversal_closed_form(m, d);
  e.provenance = "closed-form";
  e.notes = "A_1 is the ground set; A_k is j plus block k";
  return e;
}

BasisPartitionCounts transversal_closed_form(int m, int d) {
  check_family(m, d);
  const BigInt c2 = binomial(static_cast<unsigned>(m), 2);
  BigInt both = (d - 1) * pw(m, d - 2);
  BigInt neither = (d - 1) * c2 * pw(m, d - 2);
  BigInt i_only = pw(m, d - 1);
  BigInt j_only = pw(m, d - 1) + (d - 1) * (d - 2) * c2 * pw(m, d - 3);
  return counts(0, 1, d, both, i_only, j_only, neither);
}

CatalogEntry example_simplicial() {
  // Edges and triangles of {0..5} in lexicographic order.
  int edge_index[6][6];
  int k = 0;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) edge_index[a][b] = k++;
  }
  std::vector<std::vector<std::int64_t>> cols;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) {
        std::vector<std::int64_t> col(15, 0);
        col[edge_index[a][b]] = col[edge_index[a][c]] = col[edge_index[b][c]] = 1;
        cols.push_back(col);
      }
    }
  }
  CatalogEntry e{"simplicial", Matroid::linear_gfp(PrimeFieldMatrix(2, 15, cols)), 0, 19};
  e.expected = counts(0, 19, 10, 11664, 11640, 11640, 11664);
  e.provenance = "published";
  e.notes = "triangles of the 5-simplex over GF(2); i = 123 (0), j = 456 (19)";
  return e;
}

CatalogEntry example_graphic() {
  // u = 0, d = 1, v1..v6 = 2..7.
  std::vector<std::pair<int, int>> edges{{0, 1}};
  for (int v = 2; v <= 6; ++v) {
    edges.emplace_back(0, v);
    edges.emplace_back(v, 1);
  }
  edges.emplace_back(0, 7);
  CatalogEntry e{"graphic", Matroid::graphic(8, std::move(edges)).truncate(6), 0, 11};
  e.expected = counts(0, 11, 6, 80, 32, 192, 80);
  e.provenance = "published";
  e.notes = "forests with six edges; i = u-d (0), j = u-v6 (11)";
  return e;
}

CatalogEntry example_transversal() {
  // i = 0, j = 1, a1..a4 = 2..5, b1..b3 = 6..8, c1..c3 = 9..11.
  std::vector<std::vector<int>> sets{
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, {1, 2, 3, 4, 5}, {1, 9, 10, 11}, {1, 6, 7, 8}};
  CatalogEntry e{"transversal", Matroid::transversal(12, std::move(sets)), 0, 1};
  e.expected = published_counts(4, 33, 36, 114, 126);
  e.provenance = "published";
  e.notes = "systems of distinct representatives of A_1..A_4";
  return e;
}

const std::vector<Octad>& golay_octads() {
  static const std::vector<Octad> octads = build_octads();
  return octads;
}

std::vector<std::vector<int>> steiner_blocks(int i, int j) {
  if (i < 0 || j < 0 || i >= 24 || j >= 24 || i == j) {
    throw InputError("steiner pair must be two distinct elements of 0..23");
  }
  std::vector<std::vector<int>> out;
  for (const auto& o : golay_octads()) {
    const std::uint32_t m = octad_mask(o);
    if (((m >> i) & 1) != ((m >> j) & 1)) out.emplace_back(o.begin(), o.end());
  }
  return out;
}

GolayReport golay_self_check(std::size_t sample, std::uint64_t seed) {
  const auto& octads = golay_octads();
  GolayReport r;
  r.octads = octads.size();
  std::vector<std::uint32_t> masks;
  for (const auto& o : octads) masks.push_back(octad_mask(o));

  std::vector<std::size_t> point(24, 0);
  std::vector<std::size_t> pair(24 * 24, 0);
  for (const auto& o : octads) {
    for (int a = 0; a < 8; ++a) {
      ++point[o[a]];
      for (int b = a + 1; b < 8; ++b) ++pair[o[a] * 24 + o[b]];
    }
  }
  r.through_point_min = *std::min_element(point.begin(), point.end());
  r.through_point_max = *std::max_element(point.begin(), point.end());
  r.through_pair_min = SIZE_MAX;
  for (int a = 0; a < 24; ++a) {
    for (int b = a + 1; b < 24; ++b) {
      r.through_pair_min = std::min(r.through_pair_min, pair[a * 24 + b]);
      r.through_pair_max = std::max(r.through_pair_max, pair[a * 24 + b]);
    }
  }

  r.intersections_ok = true;
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = a + 1; b < masks.size(); ++b) {
      int c = std::popcount(masks[a] & masks[b]);
      if (c != 0 && c != 2 && c != 4) r.intersections_ok = false;
    }
  }

  auto covered = [&](std::uint32_t five) {
    std::size_t hits = 0;
    for (auto m : masks) hits += (m & five) == five;
    return hits;
  };
  if (sample == 0) {
    int c[5] = {0, 1, 2, 3, 4};
    for (;;) {
      std::uint32_t five = 0;
      for (int t : c) five |= 1u << t;
      ++r.five_subsets_checked;
      if (covered(five) != 1) ++r.five_subsets_bad;
      int t = 4;
      while (t >= 0 && c[t] == 24 - 5 + t) --t;
      if (t < 0) break;
      ++c[t];
      for (int u = t + 1; u < 5; ++u) c[u] = c[u - 1] + 1;
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < sample; ++s) {
      std::uint32_t five = 0;
      while (std::popcount(five) < 5) five |= 1u << (rng() % 24);
      ++r.five_subsets_checked;
      if (covered(five) != 1) ++r.five_subsets_bad;
    }
  }
  r.steiner_blocks = steiner_blocks(0, 1).size();
  return r;
}

CatalogEntry example_steiner(int i, int j) {
  CatalogEntry e{"steiner", Matroid::paving(24, 6, steiner_blocks(i, j)), i, j};
  e.expected = counts(i, j, 6, 7315, 22638, 22638, 72149);
  e.provenance = "published";
  e.notes = "6-subsets not inside an octad meeting {i, j} in one point";
  return e;
}

CatalogEntry s8() {
  const std::vector<std::vector<std::int64_t>> cols{
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
      {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}};
  CatalogEntry e{"s8", Matroid::linear_gfp(PrimeFieldMatrix(2, 4, cols)), 7, 3};
  BasisPartitionCounts c = spike_closed_form(2, 4);
  c.i = 7;
  c.j = 3;
  e.expected = c;
  e.provenance = "closed-form";
  e.notes = "column 7 plays the tip, column 3 the long element of spike(2, 4)";
  return e;
}

std::vector<std::string> catalog_names() {
  return {"simplicial", "graphic", "transversal", "steiner", "s8",    "spike-2-4", "spike-2-5",
          "spike-3-3",  "spike-3-4", "n-2-6",     "n-3-4",   "u-2-4", "b-4"};
}

CatalogEntry catalog_entry(const std::string& name) {
  if (name == "simplicial") return example_simplicial();
  if (name == "graphic") return example_graphic();
  if (name == "transversal") return example_transversal();
  if (name == "steiner") return example_steiner();
  if (name == "s8") return s8();
  int a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(name.c_str(), "spike-%d-%d%c", &a, &b, &tail) == 2) return spike(a, b);
  if (std::sscanf(name.c_str(), "spike-%d-%d-q%c", &a, &b, &tail) == 2) return spike(a, b, true);
  if (std::sscanf(name.c_str(), "n-%d-%d%c", &a, &b, &tail) == 2) return transversal_family(a, b);
  if (std::sscanf(name.c_str(), "u-%d-%d%c", &a, &b, &tail) == 2) {
    if (a < 0 || b < a) throw InputError("uniform matroid needs 0 <= r <= n");
    return {name, Matroid::uniform(a, b), 0, 1, std::nullopt, "", "uniform"};
  }
  if (std::sscanf(name.c_str(), "b-%d%c", &a, &tail) == 1) {
    if (a < 2) throw InputError("boolean matroid needs d >= 2 for a pair");
    return {name, Matroid::uniform(a, a), 0, 1, std::nullopt, "", "boolean"};
  }
  throw InputError("unknown catalog entry \"" + name + "\"");
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& n : catalog_names()) out.push_back(catalog_entry(n));
  return out;
}

}  // namespace matcor
