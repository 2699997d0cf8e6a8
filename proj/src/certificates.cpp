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

#include "matcor/certificates.hpp"

#include "matcor/errors.hpp"

namespace matcor {
namespace {

void check_square(const RationalSquare& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) throw InputError("matrix is not square");
  }
  if (a.size() > 3) throw InputError("only dimensions up to 3 are supported");
}

int sign(const BigRational& x) { return sgn(x); }

int sign_changes(const std::vector<BigRational>& c) {
  int changes = 0, last = 0;
  for (const auto& x : c) {
    int s = sign(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RationalSquare minor(const RationalSquare& a, const std::vector<int>& idx) {
  RationalSquare out(idx.size(), std::vector<BigRational>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) out[r][c] = a[idx[r]][idx[c]];
  }
  return out;
}

void require_rank2(int d) {
  if (d < 2) throw InputError("certificate matrices need rank >= 2, got " + std::to_string(d));
}

}  // namespace

std::string to_string(CertificateKind kind) { return kind == CertificateKind::kHij ? "Hij" : "H0"; }

BigRational determinant(const RationalSquare& a) {
  check_square(a);
  switch (a.size()) {
    case 0:
      return 1;
    case 1:
      return a[0][0];
    case 2:
      return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    default:
      return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
             a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
             a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }
}

std::vector<BigRational> characteristic_polynomial(const RationalSquare& a) {
  check_square(a);
  const int n = static_cast<int>(a.size());
  // Coefficient of x^(n-k) is (-1)^k times the sum of k x k principal minors.
  std::vector<BigRational> c(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int r = 0; r < n; ++r) {
      if (mask >> r & 1) idx.push_back(r);
    }
    const int k = static_cast<int>(idx.size());
    BigRational m = determinant(minor(a, idx));
    c[k] += (k % 2 ? -m : m);
  }
  return c;
}

Signature eigen_signature(const RationalSquare& a) {
  check_square(a);
  const int n = static_cast<int>(a.size());
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      if (a[r][c] != a[c][r]) throw InputError("matrix is not symmetric");
    }
  }
  std::vector<BigRational> p = characteristic_polynomial(a);
  Signature s;
  while (s.zero < n && p[n - s.zero] == 0) ++s.zero;
  std::vector<BigRational> q = p;
  for (int k = 0; k <= n; ++k) {
    // p(-x): coefficient of x^(n-k) picks up (-1)^(n-k).
    if ((n - k) % 2) q[k] = -q[k];
  }
  s.plus = sign_changes(p);
  s.minus = sign_changes(q);
  return s;
}

CertificateMatrix hij_from_sums(const WeightedPartitionSums& s) {
  require_rank2(s.d);
  if (s.s_both <= 0 || s.s_neither <= 0) {
    throw DomainError("pair (" + std::to_string(s.i) + ", " + std::to_string(s.j) +
                      ") has no basis containing both or none; the certificate is vacuous");
  }
  const unsigned d = static_cast<unsigned>(s.d);
  BigRational a = BigRational(factorial(d - 2)) * s.s_both;
  BigRational b = BigRational(factorial(d - 1)) * s.s_i_only;
  BigRational c = BigRational(factorial(d - 1)) * s.s_j_only;
  BigRational dd = BigRational(factorial(d)) * s.s_neither;
  CertificateMatrix m;
  m.kind = CertificateKind::kHij;
  m.d = s.d;
  m.entries = {{0, a, b}, {a, 0, c}, {b, c, dd}};
  m.signature = eigen_signature(m.entries);
  m.det = determinant(m.entries);
  return m;
}

CertificateMatrix hij_matrix(const Matroid& m, int i, int j, const std::vector<BigRational>& weights,
                             const EnumerationOptions& options) {
  require_rank2(m.rank());
  return hij_from_sums(weighted_partition(m, i, j, weights, options));
}

BigRational hij_det_formula(const WeightedPartitionSums& s) {
  const unsigned d = static_cast<unsigned>(s.d);
  BigInt f = factorial(d - 2);
  BigRational scale = BigRational(f * f * factorial(d));
  BigRational inner = BigRational(2 * (s.d - 1), s.d) * s.s_i_only * s.s_j_only -
                      s.s_both * s.s_neither;
  return scale * s.s_both * inner;
}

CertificateMatrix h0_from_profile(const std::vector<BigRational>& w) {
  const int d = static_cast<int>(w.size()) - 1;
  require_rank2(d);
  const unsigned u = static_cast<unsigned>(d);
  BigRational a = BigRational(factorial(u - 2)) * w[d - 2];
  BigRational b = BigRational(factorial(u - 1)) * w[d - 1];
  BigRational c = BigRational(factorial(u)) * w[d];
  CertificateMatrix m;
  m.kind = CertificateKind::kH0;
  m.d = d;
  m.entries = {{a, b}, {b, c}};
  m.signature = eigen_signature(m.entries);
  m.det = determinant(m.entries);
  return m;
}

CertificateMatrix h0_matrix(const Matroid& m, const std::vector<BigRational>& weights,
                            const EnumerationOptions& options) {
  require_rank2(m.rank());
  return h0_from_profile(weighted_profile(m, weights, options));
}

BigRational h0_det_formula(const std::vector<BigRational>& w) {
  const int d = static_cast<int>(w.size()) - 1;
  require_rank2(d);
  const unsigned u = static_cast<unsigned>(d);
  BigRational scale(factorial(u - 2) * factorial(u));
  return scale * (w[d - 2] * w[d] - BigRational(d - 1, d) * w[d - 1] * w[d - 1]);
}

CertificateReport evaluate_certificates(const WeightedPartitionSums& s,
                                        const std::vector<BigRational>& profile) {
  CertificateReport r;
  r.hij = hij_from_sums(s);
  r.h0 = h0_from_profile(profile);
  r.hij_one_positive = r.hij.signature.plus == 1;
  r.hij_diagonal_zero = r.hij.entries[0][0] == 0 && r.hij.entries[1][1] == 0;
  r.hij_det_identity = r.hij.det == hij_det_formula(s);
  r.h0_one_positive = r.h0.signature.plus == 1;
  r.h0_det_identity = r.h0.det == h0_det_formula(profile);
  r.h0_det_nonpositive = r.h0.det <= 0;
  return r;
}

CertificateReport certify(const Matroid& m, int i, int j, const std::vector<BigRational>& weights,
                          const EnumerationOptions& options) {
  require_rank2(m.rank());
  CertificateReport r = evaluate_certificates(weighted_partition(m, i, j, weights, options),
                                              weighted_profile(m, weights, options));
  if (!r.hij_one_positive || !r.hij_diagonal_zero || !r.hij_det_identity) {
    throw CertificateError("H_ij assertion failed: " + format_matrix(r.hij.entries));
  }
  if (!r.h0_one_positive || !r.h0_det_identity || !r.h0_det_nonpositive) {
    throw CertificateError("H_0 assertion failed: " + format_matrix(r.h0.entries));
  }
  return r;
}

std::string format_matrix(const RationalSquare& a) {
  std::string out = "[";
  for (std::size_t r = 0; r < a.size(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < a[r].size(); ++c) {
      if (c) out += ", ";
      out += to_ratio_string(a[r][c]);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace matcor
