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

#include "generators.hpp"
#include "matcor/constructions.hpp"
#include "matcor/correlation.hpp"
#include "matcor/errors.hpp"
#include "matcor/sweeps.hpp"
#include "oracles.hpp"

namespace matcor {
namespace {

BigRational q(long a, long b) {
  BigRational r(a, b);
  r.canonicalize();
  return r;
}

TEST(CorrelationTest, RatioExamples) {
  auto simp = example_simplicial();
  auto r = correlation_ratio(simp.matroid, simp.i, simp.j, unit_weights(20));
  ASSERT_TRUE(r);
  BigRational want(BigInt(11664) * 11664, BigInt(11640) * 11640);
  want.canonicalize();
  EXPECT_EQ(*r, want);
  EXPECT_NEAR(r->get_d(), 1.00413, 1e-5);
  for (int p : {2, 3, 5}) {
    auto e = spike(p, 5);
    EXPECT_EQ(correlation_ratio(e.matroid, e.i, e.j, unit_weights(e.matroid.size())), q(8, 7));
  }
  EXPECT_EQ(correlation_ratio(Matroid::uniform(1, 2), 0, 1, unit_weights(2)), BigRational(0));
  EXPECT_EQ(correlation_ratio(Matroid::uniform(2, 4), 0, 1, unit_weights(4)), q(1, 4));
}

TEST(CorrelationTest, Theorem1Examples) {
  auto d1 = check_theorem1(Matroid::uniform(1, 2), 0, 1, unit_weights(2));
  EXPECT_TRUE(d1.satisfied);
  EXPECT_EQ(d1.bound, 0);
  EXPECT_EQ(d1.sums.s_both * d1.sums.s_neither, 0);

  auto st = example_steiner();
  auto r = check_theorem1(st.matroid, st.i, st.j, unit_weights(24));
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(r.bound, q(5, 3));
  EXPECT_NEAR(r.ratio->get_d(), 1.0298, 1e-4);

  auto sp = spike(2, 5);
  auto s = check_theorem1(sp.matroid, 0, 1, unit_weights(10));
  EXPECT_EQ(*s.ratio, q(8, 7));
  EXPECT_EQ(s.bound, q(8, 5));
  EXPECT_TRUE(s.satisfied);
  EXPECT_FALSE(s.free_pair);
}

TEST(CorrelationTest, Theorem2Examples) {
  Matroid m = Matroid::uniform(2, 4).free_extend(2);
  auto r = check_theorem2(m, 4, 5, unit_weights(6));
  EXPECT_EQ(r.sums.s_both, 1);
  EXPECT_EQ(r.sums.s_i_only, 4);
  EXPECT_EQ(r.sums.s_j_only, 4);
  EXPECT_EQ(r.sums.s_neither, 6);
  EXPECT_EQ(r.bound, q(1, 2));
  EXPECT_TRUE(r.satisfied);
  EXPECT_TRUE(r.free_pair);

  // Rank one: no basis contains both, equality 0 = 0.
  auto one = check_theorem2(Matroid::uniform(1, 3).free_extend(2), 3, 4, unit_weights(5));
  EXPECT_EQ(one.bound, 0);
  EXPECT_TRUE(one.satisfied);

  Matroid b3 = Matroid::uniform(3, 3).truncate(2);
  auto prof = independence_profile(b3).counts;
  auto t = check_theorem2(b3.free_extend(2), 3, 4, unit_weights(5));
  EXPECT_EQ(t.sums.s_both, prof[0]);
  EXPECT_EQ(t.sums.s_neither, prof[2]);
  EXPECT_TRUE(t.satisfied);
  EXPECT_LE(BigRational(prof[0] * prof[2]), q(1, 2) * BigRational(prof[1] * prof[1]));

  EXPECT_THROW(check_theorem2(spike(2, 4).matroid, 0, 1, unit_weights(8)), DomainError);
}

TEST(CorrelationTest, ExactBoundEvaluation) {
  WeightedPartitionSums s;
  s.d = 2;
  s.s_both = 1;
  s.s_neither = 2;
  s.s_i_only = 2;
  s.s_j_only = 1;
  // ratio exactly 1 against bound 1: satisfied at equality.
  auto r = evaluate_bound(s, BigRational(1));
  EXPECT_TRUE(r.satisfied);
  EXPECT_FALSE(evaluate_bound(s, q(999999, 1000000)).satisfied);
  EXPECT_EQ(theorem1_bound(6), q(5, 3));
  EXPECT_EQ(theorem2_bound(6), q(5, 6));
}

TEST(CorrelationTest, Errors) {
  Matroid sum = Matroid::uniform(1, 1).direct_sum(Matroid::uniform(1, 2));
  try {
    correlation_ratio(sum, 0, 1, unit_weights(3));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("element 0"), std::string::npos);
  }
  Matroid loop = Matroid::linear_gfp(PrimeFieldMatrix(2, 1, {{1}, {1}, {0}}));
  EXPECT_THROW(check_theorem1(loop, 0, 2, unit_weights(3)), DomainError);
  EXPECT_THROW(check_theorem1(loop, 0, 0, unit_weights(3)), InputError);
  EXPECT_THROW(check_theorem1(loop, 0, 1, {1, 0, 1}), InputError);
  EXPECT_THROW(alpha_lower_bound(Matroid::uniform(3, 3)), DomainError);
  EXPECT_THROW(parse_strategy("simplex"), InputError);
}

TEST(CorrelationTest, Prop41) {
  auto b2 = check_prop41({1, 2, 1});
  EXPECT_EQ(b2.lhs, 4);
  EXPECT_EQ(b2.rhs, 2);
  EXPECT_TRUE(b2.satisfied);
  auto u23 = check_prop41({1, 3, 3});
  EXPECT_EQ(u23.lhs, 9);
  EXPECT_EQ(u23.rhs, 6);
  EXPECT_THROW(check_prop41({1, 1}), InputError);
  auto prof = independence_profile(example_steiner().matroid).counts;
  std::vector<BigRational> w(prof.begin(), prof.end());
  auto st = check_prop41(w);
  EXPECT_EQ(st.d, 6);
  EXPECT_TRUE(st.satisfied);
  EXPECT_EQ(st.rhs, q(6, 5) * w[4] * w[6]);
}

TEST(CorrelationTest, Prop41WeightedRandom) {
  gen::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    Matroid m = gen::any(rng, 10);
    if (m.rank() < 2) continue;
    auto prof = weighted_profile(m, gen::weights(rng, m.size()));
    ASSERT_TRUE(check_prop41(prof).satisfied) << m.kind();
  }
}

TEST(CorrelationSweep, Theorem1OnCatalog) {
  std::size_t checked = 0;
  for (const auto& e : catalog()) {
    auto cases = weight_cases(e.matroid.size(), 20);
    ASSERT_EQ(cases.size(), 21u);
    EnumerationOptions o;
    o.workers = 2;
    for (const auto& r : theorem1_sweep(e.matroid, cases, o)) {
      ASSERT_TRUE(r.report.satisfied) << e.name << " " << r.report.i << "," << r.report.j;
      const auto& s = r.report.sums;
      if (s.s_i_only * s.s_j_only == 0) {
        ASSERT_EQ(s.s_both * s.s_neither, 0) << e.name;
        ASSERT_FALSE(r.report.ratio.has_value());
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 10000u);
}

TEST(CorrelationSweep, Theorem2RandomExtensions) {
  auto cases = theorem2_sweep(50);
  EXPECT_EQ(cases.size(), 100u);
  for (const auto& c : cases) {
    EXPECT_LE(c.base.size(), 10);
    EXPECT_TRUE(c.report.free_pair);
    EXPECT_TRUE(c.report.satisfied) << c.index;
    EXPECT_EQ(c.extended.element_status(c.report.i), ElementStatus::kFree);
  }
}

TEST(CorrelationSweep, RandomMatroidsTheorem1) {
  gen::Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    Matroid m = gen::any(rng, 10);
    auto el = eligible_elements(m);
    if (el.size() < 2) continue;
    auto w = gen::weights(rng, m.size());
    auto o = oracle::partition(m, el[0], el[1], w);
    auto r = check_theorem1(m, el[0], el[1], w);
    ASSERT_TRUE(r.satisfied);
    ASSERT_LE(o.both * o.neither, theorem1_bound(m.rank()) * o.i_only * o.j_only);
  }
}

TEST(CorrelationSweep, RatioDuality) {
  for (const auto& e : catalog()) {
    if (e.matroid.size() > 16) continue;
    auto el = eligible_elements(e.matroid);
    for (std::size_t a = 0; a < el.size(); ++a) {
      for (std::size_t b = a + 1; b < el.size(); ++b) {
        auto x = correlation_ratio(e.matroid, el[a], el[b], unit_weights(e.matroid.size()));
        auto y = correlation_ratio(e.matroid.dual(), el[a], el[b], unit_weights(e.matroid.size()));
        ASSERT_EQ(x.has_value(), y.has_value());
        if (x) ASSERT_EQ(*x, *y) << e.name;
      }
    }
  }
}

TEST(AlphaTest, Examples) {
  auto sp = alpha_lower_bound(spike(2, 5).matroid);
  EXPECT_GE(sp.best_ratio, q(8, 7));
  EXPECT_EQ(sp.strategy, "unit");
  EXPECT_EQ(alpha_lower_bound(Matroid::uniform(2, 4)).best_ratio, q(1, 4));
  auto ds = Matroid::uniform(1, 2).direct_sum(Matroid::uniform(1, 2));
  EXPECT_EQ(alpha_lower_bound(ds).best_ratio, 1);
}

TEST(AlphaTest, StrategiesAreCertified) {
  std::vector<Matroid> ms{s8().matroid, spike(3, 3).matroid, Matroid::uniform(2, 5),
                          transversal_family(2, 4).matroid};
  for (const auto& m : ms) {
    AlphaEstimate unit = alpha_lower_bound(m);
    for (auto s : {AlphaStrategy::kGrid, AlphaStrategy::kAscent}) {
      AlphaOptions a;
      a.strategy = s;
      a.levels = 2;
      a.max_iter = 5;
      auto est = alpha_lower_bound(m, a);
      EXPECT_GE(est.best_ratio, unit.best_ratio);
      EXPECT_LE(est.best_ratio, 2);
      EXPECT_GT(est.evaluations, 0);
      auto again = correlation_ratio(m, est.i, est.j, est.weights);
      ASSERT_TRUE(again);
      EXPECT_EQ(*again, est.best_ratio);
    }
  }
  EXPECT_EQ(to_string(parse_strategy("ascent")), "ascent");
}

TEST(RandomWeightsTest, FixedSeed) {
  auto a = random_weight_vectors(10, 3);
  auto b = random_weight_vectors(10, 3, 0xC0FFEE);
  EXPECT_EQ(a, b);
  for (const auto& v : a) {
    for (const auto& x : v) {
      EXPECT_GT(x, 0);
      EXPECT_LE(x.get_num(), 64);
      EXPECT_LE(x.get_den(), 64);
    }
  }
  EXPECT_NE(random_weight_vectors(10, 1, 1), random_weight_vectors(10, 1, 2));
}

}  // namespace
}  // namespace matcor
