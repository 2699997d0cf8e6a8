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

#include <cmath>

#include "generators.hpp"
#include "matcor/certificates.hpp"
#include "matcor/constructions.hpp"
#include "matcor/correlation.hpp"
#include "matcor/errors.hpp"
#include "matcor/sweeps.hpp"

namespace matcor {
namespace {

RationalSquare square(std::initializer_list<std::initializer_list<long>> rows) {
  RationalSquare out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long x : r) out.back().emplace_back(x);
  }
  return out;
}

// Cyclic Jacobi rotations on a symmetric matrix; returns eigenvalues.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1 : -1) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(a[k][k]);
  return out;
}

TEST(CertificateTest, HijExample) {
  auto h = hij_matrix(Matroid::uniform(2, 4), 0, 1, unit_weights(4));
  EXPECT_EQ(h.entries, square({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}));
  EXPECT_EQ(h.det, 6);
  EXPECT_EQ(h.signature, (Signature{1, 2, 0}));
  EXPECT_EQ(to_string(h.kind), "Hij");
  EXPECT_EQ(format_matrix(h.entries), "[[0/1, 1/1, 2/1], [1/1, 0/1, 2/1], [2/1, 2/1, 2/1]]");
  auto s = weighted_partition(Matroid::uniform(2, 4), 0, 1, unit_weights(4));
  EXPECT_EQ(hij_det_formula(s), 6);
}

TEST(CertificateTest, HijSpike) {
  auto h = hij_matrix(spike(2, 4).matroid, 0, 1, unit_weights(8));
  EXPECT_EQ(h.entries[0][1], 24);
  EXPECT_EQ(h.entries[0][2], 48);
  EXPECT_EQ(h.entries[1][2], 96);
  EXPECT_EQ(h.entries[2][2], 288);
  EXPECT_EQ(h.signature.plus, 1);
}

TEST(CertificateTest, HijRankTwoUsesRawBoth) {
  WeightedPartitionSums s;
  s.d = 2;
  s.s_both = BigRational(7, 3);
  s.s_i_only = 1;
  s.s_j_only = 1;
  s.s_neither = 1;
  EXPECT_EQ(hij_from_sums(s).entries[0][1], BigRational(7, 3));
}

TEST(CertificateTest, H0Examples) {
  auto b2 = h0_from_profile({1, 2, 1});
  EXPECT_EQ(b2.entries, square({{1, 2}, {2, 2}}));
  EXPECT_EQ(b2.det, -2);
  EXPECT_EQ(b2.signature, (Signature{1, 1, 0}));
  EXPECT_EQ(h0_det_formula({1, 2, 1}), -2);
  auto u23 = h0_matrix(Matroid::uniform(2, 3), unit_weights(3));
  EXPECT_EQ(u23.entries, square({{1, 3}, {3, 6}}));
  EXPECT_EQ(u23.det, -3);
  EXPECT_EQ(to_string(u23.kind), "H0");
  gen::Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    Matroid m = gen::gfp(rng, 6, 2, 3);
    if (m.rank() != 2) continue;
    EXPECT_EQ(h0_matrix(m, gen::weights(rng, 6)).entries[0][0], 1);
  }
  EXPECT_THROW(h0_from_profile({1, 3}), InputError);
}

TEST(CertificateTest, SignatureExamples) {
  EXPECT_EQ(eigen_signature(square({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}})), (Signature{1, 2, 0}));
  EXPECT_EQ(eigen_signature(square({{1, 0}, {0, 1}})), (Signature{2, 0, 0}));
  EXPECT_EQ(eigen_signature(square({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})), (Signature{0, 0, 3}));
  EXPECT_EQ(eigen_signature(square({{1, 1}, {1, 1}})), (Signature{1, 0, 1}));
  EXPECT_THROW(eigen_signature(square({{1, 2}, {3, 1}})), InputError);
  auto cp = characteristic_polynomial(square({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}));
  ASSERT_EQ(cp.size(), 4u);
  EXPECT_EQ(cp[0], 1);
  EXPECT_EQ(cp[1], -2);    // -trace
  EXPECT_EQ(cp[2], -9);    // sum of principal 2x2 minors
  EXPECT_EQ(cp[3], -6);    // -det
}

TEST(CertificateTest, SignatureMatchesJacobi) {
  gen::Rng rng(52);
  int compared = 0;
  for (int t = 0; t < 2000; ++t) {
    const int n = gen::between(rng, 1, 3);
    RationalSquare a(n, std::vector<BigRational>(n));
    if (rng() % 4 == 0) {
      // Rank one, so zero eigenvalues appear.
      std::vector<long> v(n);
      for (auto& x : v) x = gen::between(rng, -3, 3);
      const long sgn = rng() & 1 ? 1 : -1;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = sgn * v[r] * v[c];
    } else {
      for (int r = 0; r < n; ++r) {
        for (int c = r; c < n; ++c) {
          BigRational x(gen::between(rng, -6, 6), gen::between(rng, 1, 3));
          x.canonicalize();
          a[r][c] = a[c][r] = x;
        }
      }
    }
    std::vector<std::vector<double>> f(n, std::vector<double>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) f[r][c] = a[r][c].get_d();
    Signature want;
    bool ambiguous = false;
    for (double ev : jacobi_eigenvalues(f)) {
      if (std::fabs(ev) < 1e-9) {
        ++want.zero;
      } else if (std::fabs(ev) < 1e-6) {
        ambiguous = true;
      } else {
        ++(ev > 0 ? want.plus : want.minus);
      }
    }
    if (ambiguous) continue;
    Signature got = eigen_signature(a);
    ASSERT_EQ(got.plus + got.minus + got.zero, n);
    ASSERT_EQ(got, want) << format_matrix(a);
    ++compared;
  }
  EXPECT_GT(compared, 1900);
}

TEST(CertificateTest, SymbolicDeterminantIdentities) {
  gen::Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    WeightedPartitionSums s;
    s.d = gen::between(rng, 2, 10);
    auto w = gen::weights(rng, 4);
    s.s_both = w[0];
    s.s_i_only = w[1];
    s.s_j_only = w[2];
    s.s_neither = w[3];
    auto h = hij_from_sums(s);
    const BigRational& a = h.entries[0][1];
    const BigRational& b = h.entries[0][2];
    const BigRational& c = h.entries[1][2];
    const BigRational& d = h.entries[2][2];
    // Cofactor expansion along the first row.
    ASSERT_EQ(h.det, a * (2 * b * c - a * d));
    ASSERT_EQ(h.det, determinant(h.entries));
    ASSERT_EQ(h.det, hij_det_formula(s));
    ASSERT_EQ(h.entries[0][0], 0);
    ASSERT_EQ(h.entries[1][1], 0);

    std::vector<BigRational> prof = gen::weights(rng, s.d + 1);
    auto h0 = h0_from_profile(prof);
    ASSERT_EQ(h0.det, h0.entries[0][0] * h0.entries[1][1] - h0.entries[0][1] * h0.entries[1][0]);
    ASSERT_EQ(h0.det, h0_det_formula(prof));
  }
}

TEST(CertificateTest, Errors) {
  WeightedPartitionSums s;
  s.d = 3;
  s.s_both = 0;
  s.s_i_only = 1;
  s.s_j_only = 1;
  s.s_neither = 1;
  EXPECT_THROW(hij_from_sums(s), DomainError);
  s.s_both = 1;
  s.s_neither = 0;
  EXPECT_THROW(hij_from_sums(s), DomainError);
  s.d = 1;
  s.s_neither = 1;
  EXPECT_THROW(hij_from_sums(s), InputError);
  EXPECT_THROW(certify(Matroid::uniform(1, 3), 0, 1, unit_weights(3)), InputError);
}

TEST(CertificateTest, SteinerPair) {
  auto e = example_steiner();
  auto r = certify(e.matroid, e.i, e.j, unit_weights(24));
  EXPECT_EQ(r.hij.signature.plus, 1);
  EXPECT_TRUE(r.passed());
}

TEST(CertificateSweep, CatalogPasses) {
  std::size_t checked = 0;
  for (const auto& e : catalog()) {
    if (e.matroid.rank() < 2) continue;
    for (const auto& r : certificate_sweep(e.matroid, weight_cases(e.matroid.size(), 5))) {
      ASSERT_TRUE(r.report.passed()) << e.name << " " << r.i << "," << r.j << " "
                                     << format_matrix(r.report.hij.entries);
      // Agreement with the direct checks.
      auto t1 = evaluate_bound(r.sums, theorem1_bound(r.sums.d));
      ASSERT_EQ(r.report.hij.det >= 0, t1.satisfied);
      ASSERT_EQ(r.report.h0.det <= 0, check_prop41(r.profile).satisfied);
      ++checked;
    }
  }
  EXPECT_GT(checked, 3000u);
}

TEST(CertificateSweep, DeterminantSignAgreesOnViolations) {
  // Sums outside any matroid: the two criteria still agree.
  gen::Rng rng(54);
  int violated = 0;
  for (int t = 0; t < 300; ++t) {
    WeightedPartitionSums s;
    s.d = gen::between(rng, 2, 6);
    s.s_both = gen::between(rng, 1, 30);
    s.s_neither = gen::between(rng, 1, 30);
    s.s_i_only = gen::between(rng, 1, 5);
    s.s_j_only = gen::between(rng, 1, 5);
    auto h = hij_from_sums(s);
    bool ok = evaluate_bound(s, theorem1_bound(s.d)).satisfied;
    ASSERT_EQ(h.det >= 0, ok);
    if (!ok) {
      ++violated;
      // Negative determinant with positive trace forces two positive eigenvalues.
      std::vector<BigRational> prof(s.d + 1, BigRational(1));
      auto rep = evaluate_certificates(s, prof);
      ASSERT_EQ(rep.hij.signature.plus, 2);
      ASSERT_FALSE(rep.hij_one_positive);
      ASSERT_FALSE(rep.passed());
    }
  }
  EXPECT_GT(violated, 10);
}

}  // namespace
}  // namespace matcor
