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

#include "matcor/analytics.hpp"

#include <cmath>
#include <numbers>

#include "matcor/errors.hpp"

namespace matcor {
namespace {

constexpr double kTolerance = 1.0 / (1 << 20);

bool is_boolean(const Matroid& m) {
  const auto* u = as_uniform(m);
  return u && u->r == u->n;
}

}  // namespace

bool MasonReport::all_1() const {
  for (const auto& r : records) {
    if (!r.holds_1) return false;
  }
  return true;
}

bool MasonReport::all_2() const {
  for (const auto& r : records) {
    if (!r.holds_2) return false;
  }
  return true;
}

bool MasonReport::all_3() const {
  for (const auto& r : records) {
    if (!r.holds_3) return false;
  }
  return true;
}

MasonReport mason_check(const IndependenceProfile& profile, int n) {
  MasonReport out;
  out.n = n;
  out.d = profile.d;
  const auto& c = profile.counts;
  for (int k = 1; k + 1 < static_cast<int>(c.size()); ++k) {
    MasonRecord r;
    r.k = k;
    const BigInt sq = c[k] * c[k];
    const BigInt prod = c[k - 1] * c[k + 1];
    r.margin_1 = sq - prod;
    r.margin_2 = k * sq - (k + 1) * prod;
    r.margin_3 = BigInt(k) * (n - k) * sq - BigInt(k + 1) * (n - k + 1) * prod;
    r.holds_1 = r.margin_1 >= 0;
    r.holds_2 = r.margin_2 >= 0;
    r.holds_3 = r.margin_3 >= 0;
    out.records.push_back(std::move(r));
  }
  return out;
}

double entropy_bits(const std::vector<BigRational>& p) {
  double h = 0;
  for (const auto& x : p) {
    if (x <= 0) continue;
    const double v = to_double(x);
    h -= v * std::log2(v);
  }
  return h;
}

double poisson_entropy(double lambda) {
  if (!(lambda > 0)) throw InputError("Poisson parameter must be positive");
  const double log_lambda = std::log(lambda);
  double h = 0;  // nats
  for (int k = 0;; ++k) {
    const double log_p = -lambda + k * log_lambda - std::lgamma(k + 1.0);
    const double p = std::exp(log_p);
    h -= p * log_p;
    // Past the mode the remaining mass is at most p * r / (1 - r).
    const double r = lambda / (k + 1.0);
    if (r < 1 && p * r / (1 - r) < std::ldexp(1.0, -60)) break;
  }
  return h / std::numbers::ln2;
}

double poisson_upper_bound(double x) {
  return 0.5 * std::log2(2 * std::numbers::pi * std::numbers::e * (x + 1.0 / 12));
}

double boolean_lower_bound(int d) { return 0.5 * std::log2(std::numbers::pi * d / 2); }

Concentration concentration_check(const IndependenceProfile& profile) {
  const BigInt total = profile.total();
  Concentration out;
  for (int k = 0; k < static_cast<int>(profile.counts.size()); ++k) {
    if (profile.counts[k] > profile.counts[out.k]) out.k = k;
  }
  out.p = BigRational(profile.counts[out.k], total);
  out.p.canonicalize();
  const int d = std::max(profile.d, 1);
  out.holds = 25 * d * out.p * out.p > 1;
  return out;
}

Concentration concentration_check(const Matroid& m, const EnumerationOptions& options) {
  return concentration_check(independence_profile(m, options));
}

EntropyReport entropy_report(const IndependenceProfile& profile, bool boolean) {
  EntropyReport r;
  r.d = profile.d;
  const BigInt total = profile.total();
  r.mean = 0;
  for (int k = 0; k < static_cast<int>(profile.counts.size()); ++k) {
    BigRational p(profile.counts[k], total);
    p.canonicalize();
    r.mean += k * p;
    r.distribution.push_back(p);
  }
  r.entropy = entropy_bits(r.distribution);
  r.lambda = to_double(r.mean);
  r.poisson = r.lambda > 0 ? poisson_entropy(r.lambda) : 0.0;
  r.upper_bound = poisson_upper_bound(r.d);
  if (boolean) r.lower_chain = boolean_lower_bound(r.d);
  r.concentration = concentration_check(profile);
  r.concentration_threshold = 1 / (5 * std::sqrt(static_cast<double>(std::max(r.d, 1))));
  r.poisson_ok = r.entropy <= r.poisson + kTolerance;
  r.upper_ok = r.poisson <= r.upper_bound + kTolerance;
  r.max_prob_ok = to_double(r.concentration.p) >= std::exp2(-r.entropy) * (1 - 1e-12);
  return r;
}

EntropyReport entropy_report(const Matroid& m, const EnumerationOptions& options) {
  return entropy_report(independence_profile(m, options), is_boolean(m));
}

}  // namespace matcor
