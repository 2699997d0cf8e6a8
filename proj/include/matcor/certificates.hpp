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

#include <string>
#include <vector>

#include "matcor/enumeration.hpp"
#include "matcor/matroid.hpp"

namespace matcor {

using RationalSquare = std::vector<std::vector<BigRational>>;

struct Signature {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

enum class CertificateKind { kHij, kH0 };
std::string to_string(CertificateKind kind);

struct CertificateMatrix {
  CertificateKind kind = CertificateKind::kHij;
  int d = 0;
  RationalSquare entries;
  Signature signature;
  BigRational det;
};

BigRational determinant(const RationalSquare& a);
// Coefficients of det(x I - A), leading coefficient first.
std::vector<BigRational> characteristic_polynomial(const RationalSquare& a);
// Exact signature of a symmetric matrix of dimension <= 3 by sign changes of
// its (real-rooted) characteristic polynomial. Throws InputError if asymmetric.
Signature eigen_signature(const RationalSquare& a);

// [[0, A, B], [A, 0, C], [B, C, D]] with A = (d-2)! S_both, B = (d-1)! S_i_only,
// C = (d-1)! S_j_only, D = d! S_neither. Needs d >= 2, S_both > 0, S_neither > 0.
CertificateMatrix hij_from_sums(const WeightedPartitionSums& s);
CertificateMatrix hij_matrix(const Matroid& m, int i, int j, const std::vector<BigRational>& weights,
                             const EnumerationOptions& options = {});
// ((d-2)!)^2 d! S_both (2(1 - 1/d) S_i S_j - S_both S_neither).
BigRational hij_det_formula(const WeightedPartitionSums& s);

// [[(d-2)! W_{d-2}, (d-1)! W_{d-1}], [(d-1)! W_{d-1}, d! W_d]] from W_0..W_d.
CertificateMatrix h0_from_profile(const std::vector<BigRational>& profile);
CertificateMatrix h0_matrix(const Matroid& m, const std::vector<BigRational>& weights,
                            const EnumerationOptions& options = {});
// (d-2)! d! (W_{d-2} W_d - (1 - 1/d) W_{d-1}^2).
BigRational h0_det_formula(const std::vector<BigRational>& profile);

struct CertificateReport {
  CertificateMatrix hij;
  CertificateMatrix h0;
  bool hij_one_positive = false;
  bool hij_diagonal_zero = false;
  bool hij_det_identity = false;
  bool h0_one_positive = false;
  bool h0_det_identity = false;
  bool h0_det_nonpositive = false;
  bool passed() const {
    return hij_one_positive && hij_diagonal_zero && hij_det_identity && h0_one_positive &&
           h0_det_identity && h0_det_nonpositive;
  }
};

// Evaluates every assertion without throwing.
CertificateReport evaluate_certificates(const WeightedPartitionSums& s,
                                        const std::vector<BigRational>& profile);
// Same, but throws CertificateError with the offending matrix on failure.
CertificateReport certify(const Matroid& m, int i, int j, const std::vector<BigRational>& weights,
                          const EnumerationOptions& options = {});

std::string format_matrix(const RationalSquare& a);

}  // namespace matcor
