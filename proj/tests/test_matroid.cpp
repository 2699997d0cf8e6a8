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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "generators.hpp"
#include "matcor/constructions.hpp"
#include "matcor/enumeration.hpp"
#include "matcor/errors.hpp"
#include "matcor/io.hpp"
#include "matcor/matroid.hpp"
#include "oracles.hpp"

namespace matcor {
namespace {

std::set<SubsetMask> basis_set(const Matroid& m) {
  auto b = oracle::bases(m);
  return {b.begin(), b.end()};
}

std::vector<CatalogEntry> small_catalog(int max_n) {
  std::vector<CatalogEntry> out;
  for (auto& e : catalog()) {
    if (e.matroid.size() <= max_n) out.push_back(e);
  }
  return out;
}

TEST(MatroidTest, RankExamples) {
  EXPECT_EQ(Matroid::uniform(2, 4).rank(SubsetMask::from_elements({0, 1, 2})), 2);
  Matroid g = Matroid::graphic(8, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1},
                                   {0, 5}, {5, 1}, {0, 6}, {6, 1}, {0, 7}});
  EXPECT_EQ(g.rank(), 7);
  CatalogEntry st = example_steiner();
  const auto& block = as_paving(st.matroid)->forbidden.front();
  SubsetMask six = SubsetMask::from_elements({block.begin(), block.begin() + 6});
  EXPECT_EQ(st.matroid.rank(six), 5);
  EXPECT_FALSE(st.matroid.is_independent(six));
}

TEST(MatroidTest, IndependenceExamples) {
  EXPECT_TRUE(Matroid::uniform(2, 4).is_independent(SubsetMask()));
  EXPECT_TRUE(spike(2, 4).matroid.is_independent(SubsetMask::from_elements({0, 1})));
  EXPECT_TRUE(spike(3, 5).matroid.is_independent(SubsetMask::from_elements({0, 1})));
  Matroid simp = example_simplicial().matroid;
  EXPECT_EQ(simp.rank(), 10);
  gen::Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    SubsetMask s;
    while (s.count() < 11) s.set(gen::between(rng, 0, 19));
    EXPECT_FALSE(simp.is_independent(s));
  }
}

TEST(MatroidTest, OutOfRangeElementIsInputError) {
  Matroid u = Matroid::uniform(2, 4);
  EXPECT_THROW(u.rank(SubsetMask().with(4)), InputError);
  EXPECT_THROW(u.element_status(7), InputError);
}

TEST(MatroidTest, ElementStatusExamples) {
  Matroid sum = Matroid::uniform(1, 1).direct_sum(Matroid::uniform(2, 4));
  EXPECT_EQ(sum.element_status(0), ElementStatus::kColoop);
  Matroid ext = Matroid::uniform(2, 4).free_extend(1);
  EXPECT_EQ(ext.element_status(4), ElementStatus::kFree);
  EXPECT_EQ(spike(2, 4).matroid.element_status(0), ElementStatus::kOrdinary);
  Matroid loop = Matroid::linear_gfp(PrimeFieldMatrix(2, 2, {{0, 0}, {1, 0}}));
  EXPECT_EQ(loop.element_status(0), ElementStatus::kLoop);
  // j is free in the graphic and transversal examples.
  EXPECT_EQ(example_graphic().matroid.element_status(11), ElementStatus::kFree);
  EXPECT_EQ(example_transversal().matroid.element_status(1), ElementStatus::kFree);
}

TEST(MatroidTest, ElementStatusMatchesDefinition) {
  gen::Rng rng(21);
  for (int t = 0; t < 150; ++t) {
    Matroid m = gen::any(rng, 8);
    auto bases = oracle::bases(m);
    for (int e = 0; e < m.size(); ++e) {
      bool in_some = false, in_all = true;
      for (const auto& b : bases) {
        in_some |= b.test(e);
        in_all &= b.test(e);
      }
      // Free: not a coloop and I + e independent for every independent I
      // avoiding e with |I| <= d - 1.
      bool free = !in_all;
      for (int k = 0; k < m.rank() && free; ++k) {
        oracle::for_each_subset(m.size(), k, [&](const std::vector<int>& s) {
          SubsetMask i = oracle::mask_of(s);
          if (i.test(e) || m.rank(i) != k) return;
          if (m.rank(i.with(e)) != k + 1) free = false;
        });
      }
      ElementStatus want = !in_some ? ElementStatus::kLoop
                           : in_all ? ElementStatus::kColoop
                           : free   ? ElementStatus::kFree
                                    : ElementStatus::kOrdinary;
      ASSERT_EQ(m.element_status(e), want) << m.kind() << " element " << e;
    }
  }
}

TEST(MatroidTest, RepresentationsMatchOracles) {
  gen::Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    const int n = gen::between(rng, 1, 9);
    const int v = gen::between(rng, 1, 6);
    auto edges = gen::edges(rng, v, n);
    Matroid g = Matroid::graphic(v, edges);
    auto sets = gen::family(rng, n, gen::between(rng, 1, 4));
    Matroid tr = Matroid::transversal(n, sets);
    SubsetMask s = gen::subset(rng, n);
    std::vector<std::pair<int, int>> sel;
    for (int e : s.elements()) sel.push_back(edges[e]);
    ASSERT_EQ(g.rank(s), oracle::forest_rank(v, sel));
    ASSERT_EQ(tr.rank(s), oracle::transversal_rank(s.elements(), sets));
  }
}

TEST(MatroidTest, CursorAgreesWithRankOracle) {
  gen::Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    Matroid m = gen::any(rng, 10);
    auto c = m.cursor();
    SubsetMask s;
    std::vector<int> order(m.size());
    for (int e = 0; e < m.size(); ++e) order[e] = e;
    std::shuffle(order.begin(), order.end(), rng);
    for (int e : order) {
      const bool want = m.rank(s.with(e)) == static_cast<int>(s.count()) + 1;
      ASSERT_EQ(c->push(e), want) << m.kind();
      if (want) s.set(e);
    }
  }
}

TEST(MatroidTest, DeriveExamples) {
  EXPECT_EQ(basis_set(Matroid::uniform(2, 4).dual()), basis_set(Matroid::uniform(2, 4)));
  for (int p : {2, 3}) {
    for (int d = 2; d <= 5; ++d) {
      Matroid m = spike(p, d).matroid.contract(SubsetMask::from_elements({0, 1}));
      EXPECT_EQ(enumerate_bases(m).size(), static_cast<std::size_t>(d - 1) *
                                               static_cast<std::size_t>(std::pow(p, d - 2)));
    }
  }
  EXPECT_THROW(Matroid::uniform(2, 4).truncate(3), InputError);
  // Parallel copies of a loop are loops.
  Matroid loop = Matroid::linear_gfp(PrimeFieldMatrix(2, 1, {{0}, {1}})).parallel(0, 2);
  EXPECT_EQ(loop.size(), 4);
  EXPECT_EQ(loop.element_status(3), ElementStatus::kLoop);
}

TEST(MatroidTest, FreeExtensionPartitionIsProfile) {
  gen::Rng rng(24);
  for (int t = 0; t < 30; ++t) {
    Matroid n = gen::gfp(rng, gen::between(rng, 2, 8), gen::between(rng, 2, 4), 2);
    if (n.rank() < 2) continue;
    Matroid m = n.free_extend(2);
    auto prof = independence_profile(n).counts;
    const int d = n.rank();
    auto c = basis_partition(m, n.size(), n.size() + 1);
    EXPECT_EQ(c.s_both, prof[d - 2]);
    EXPECT_EQ(c.s_i_only, prof[d - 1]);
    EXPECT_EQ(c.s_j_only, prof[d - 1]);
    EXPECT_EQ(c.s_neither, prof[d]);
  }
}

TEST(MatroidTest, ClosureExamples) {
  Matroid loopless = Matroid::uniform(2, 4);
  EXPECT_TRUE(loopless.closure(SubsetMask()).empty());
  Matroid sp = spike(2, 4).matroid;
  // Elements 2, 3 are 1e1+e2 and 2e1+e2; their span is the leg {0, 2, 3}.
  EXPECT_EQ(sp.closure(SubsetMask::from_elements({2, 3})), SubsetMask::from_elements({0, 2, 3}));
  for (const auto& b : enumerate_bases(sp)) EXPECT_EQ(sp.closure(b), sp.ground_set());
  // Leg of spike(3, 3) has p + 1 elements.
  Matroid sp3 = spike(3, 3).matroid;
  EXPECT_EQ(sp3.closure(SubsetMask::from_elements({2, 3})).count(), 4);
}

TEST(MatroidProperty, BasisExchange) {
  for (const auto& e : small_catalog(12)) {
    auto bases = oracle::bases(e.matroid);
    std::set<SubsetMask> all(bases.begin(), bases.end());
    for (const auto& b1 : bases) {
      for (const auto& b2 : bases) {
        for (int x : (b1 - b2).elements()) {
          bool ok = false;
          for (int y : (b2 - b1).elements()) ok |= all.count(b1.without(x).with(y)) > 0;
          ASSERT_TRUE(ok) << e.name;
        }
      }
    }
  }
}

TEST(MatroidProperty, DualComplementsBases) {
  for (const auto& e : small_catalog(16)) {
    const SubsetMask full = e.matroid.ground_set();
    std::set<SubsetMask> comp;
    for (const auto& b : oracle::bases(e.matroid)) comp.insert(full - b);
    EXPECT_EQ(comp, basis_set(e.matroid.dual())) << e.name;
    EXPECT_EQ(basis_set(e.matroid.dual().dual()), basis_set(e.matroid)) << e.name;
  }
}

TEST(MatroidProperty, DeletionContraction) {
  gen::Rng rng(25);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    Matroid m = gen::any(rng, 9);
    for (int e = 0; e < m.size(); ++e) {
      auto st = m.element_status(e);
      if (st == ElementStatus::kLoop || st == ElementStatus::kColoop) continue;
      auto whole = oracle::profile(m);
      auto del = oracle::profile(m.delete_elements(SubsetMask().with(e)));
      auto con = oracle::profile(m.contract(SubsetMask().with(e)));
      for (int k = 0; k <= m.rank(); ++k) {
        BigInt rhs = (k < static_cast<int>(del.size()) ? del[k] : BigInt(0)) +
                     (k >= 1 && k - 1 < static_cast<int>(con.size()) ? con[k - 1] : BigInt(0));
        ASSERT_EQ(whole[k], rhs);
      }
      ++checked;
      break;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(MatroidProperty, DerivedRankIdentities) {
  gen::Rng rng(26);
  for (int t = 0; t < 200; ++t) {
    Matroid m = gen::any(rng, 9);
    const int n = m.size(), d = m.rank();
    SubsetMask s = gen::subset(rng, n);
    SubsetMask full = m.ground_set();
    ASSERT_EQ(m.dual().rank(s), static_cast<int>(s.count()) - d + m.rank(full - s));
    const int k = gen::between(rng, 0, d);
    ASSERT_EQ(m.truncate(k).rank(s), std::min(m.rank(s), k));
    SubsetMask tset = gen::subset(rng, n);
    Matroid con = m.contract(tset);
    Matroid del = m.delete_elements(tset);
    auto map = relabel_map(con);
    SubsetMask rest = full - tset;
    SubsetMask sub = s & rest, img;
    for (int e : sub.elements()) img.set(map[e]);
    ASSERT_EQ(con.rank(img), m.rank(sub | tset) - m.rank(tset));
    ASSERT_EQ(del.rank(img), m.rank(sub));
    Matroid other = Matroid::uniform(1, 2);
    Matroid sum = m.direct_sum(other);
    ASSERT_EQ(sum.rank(), d + 1);
    ASSERT_EQ(sum.rank(s.with(n)), m.rank(s) + 1);
    Matroid par = m.parallel(0, 2);
    ASSERT_EQ(par.rank(s.with(n).with(n + 1)), m.rank(s.with(0)));
  }
}

TEST(MatroidProperty, TransversalN26MatchesGraphicExample) {
  auto a = basis_partition(transversal_family(2, 6).matroid, 0, 1);
  auto b = basis_partition(example_graphic().matroid, 0, 11);
  EXPECT_EQ(a.s_both, b.s_both);
  EXPECT_EQ(a.s_i_only, b.s_i_only);
  EXPECT_EQ(a.s_j_only, b.s_j_only);
  EXPECT_EQ(a.s_neither, b.s_neither);
}

TEST(MatroidProperty, PavingValidation) {
  EXPECT_THROW(Matroid::paving(6, 3, {{0, 1}}), InputError);
  EXPECT_THROW(Matroid::paving(6, 3, {{0, 1, 2}, {0, 1, 3}}), InputError);
  EXPECT_NO_THROW(Matroid::paving(6, 3, {{0, 1, 2}, {0, 3, 4}}));
}

TEST(IoTest, RoundTripEveryRepresentation) {
  std::vector<Matroid> ms{spike(3, 3).matroid,
                          spike(2, 3, true).matroid,
                          example_graphic().matroid,
                          example_transversal().matroid,
                          Matroid::uniform(2, 5),
                          Matroid::paving(6, 3, {{0, 1, 2}, {0, 3, 4}}),
                          Matroid::uniform(2, 4).dual().free_extend(1).parallel(1, 2),
                          Matroid::uniform(2, 5).delete_elements(SubsetMask().with(1)),
                          Matroid::uniform(3, 5).contract(SubsetMask().with(2)),
                          Matroid::uniform(1, 2).direct_sum(Matroid::uniform(1, 3))};
  for (const auto& m : ms) {
    Matroid back = matroid_from_json(nlohmann::json::parse(matroid_to_json(m).dump()));
    EXPECT_EQ(back.size(), m.size());
    EXPECT_EQ(basis_set(back), basis_set(m)) << m.kind();
  }
}

TEST(IoTest, MalformedDocumentsAreInputErrors) {
  using nlohmann::json;
  EXPECT_THROW(matroid_from_json(json::parse(R"({"type":"nope"})")), InputError);
  EXPECT_THROW(matroid_from_json(json::parse(R"({"type":"uniform","r":2})")), InputError);
  EXPECT_THROW(matroid_from_json(json::parse(R"({"type":"uniform","r":"x","n":3})")), InputError);
  EXPECT_THROW(matroid_from_json(json::parse(R"({"type":"linear_gfp","p":4,"columns":[[1]]})")),
               ConfigError);
  EXPECT_THROW(matroid_from_json(json::parse(R"({"type":"derived","op":"truncate","k":5,
      "inner":{"type":"uniform","r":2,"n":4}})")), InputError);
  EXPECT_THROW(weights_from_json(json::parse(R"([1, "0/1"])"), 2), InputError);
  EXPECT_THROW(weights_from_json(json::parse(R"([1, 2, 3])"), 2), InputError);
  EXPECT_EQ(weights_from_json(json::parse(R"([1, "3/2"])"), 2)[1], BigRational(3, 2));
}

}  // namespace
}  // namespace matcor
