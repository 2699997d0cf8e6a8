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

#include "matcor/correlation.hpp"

#include <cmath>

#include "matcor/errors.hpp"
#include "matcor/prime_field.hpp"

namespace matcor {
namespace {

bool is_loop(const Matroid& m, int e) { return m.rank(SubsetMask().with(e)) == 0; }

bool is_coloop(const Matroid& m, int e) {
  return m.rank(m.ground_set().without(e)) == m.rank() - 1;
}

void check_distinct(const Matroid& m, int i, int j) {
  for (int e : {i, j}) {
    if (e < 0 || e >= m.size()) {
      throw InputError("element " + std::to_string(e) + " is out of range");
    }
  }
  if (i == j) throw InputError("i and j must differ");
}

struct Best {
  bool found = false;
  BigRational ratio;
  int i = 0, j = 0;
};

Best best_pair(const PairTable& table, const std::vector<int>& eligible) {
  Best b;
  for (std::size_t a = 0; a < eligible.size(); ++a) {
    for (std::size_t c = a + 1; c < eligible.size(); ++c) {
      auto r = ratio_of(table.pair(eligible[a], eligible[c]));
      if (!r) continue;
      if (!b.found || *r > b.ratio) {
        b = {true, *r, eligible[a], eligible[c]};
      }
    }
  }
  return b;
}

double best_pair_approx(const PairTableApprox& t, const std::vector<int>& eligible) {
  double best = 0;
  const int n = t.n;
  for (std::size_t a = 0; a < eligible.size(); ++a) {
    for (std::size_t c = a + 1; c < eligible.size(); ++c) {
      const int i = eligible[a], j = eligible[c];
      const double both = t.both[i * n + j];
      const double si = t.single[i] - both;
      const double sj = t.single[j] - both;
      const double sn = t.total - t.single[i] - t.single[j] + both;
      if (si <= 0 || sj <= 0) continue;
      best = std::max(best, both * sn / (si * sj));
    }
  }
  return best;
}

}  // namespace

std::vector<int> eligible_elements(const Matroid& m) {
  std::vector<int> out;
  for (int e = 0; e < m.size(); ++e) {
    if (!is_loop(m, e) && !is_coloop(m, e)) out.push_back(e);
  }
  return out;
}

void require_eligible(const Matroid& m, int e) {
  if (is_loop(m, e)) throw DomainError("element " + std::to_string(e) + " is a loop");
  if (is_coloop(m, e)) throw DomainError("element " + std::to_string(e) + " is a coloop");
}

std::optional<BigRational> ratio_of(const WeightedPartitionSums& s) {
  BigRational den = s.s_i_only * s.s_j_only;
  if (den == 0) return std::nullopt;
  BigRational r = s.s_both * s.s_neither / den;
  return r;
}

std::optional<BigRational> correlation_ratio(const Matroid& m, int i, int j,
                                             const std::vector<BigRational>& weights,
                                             const EnumerationOptions& options) {
  check_distinct(m, i, j);
  require_eligible(m, i);
  require_eligible(m, j);
  auto s = weighted_partition(m, i, j, weights, options);
  auto r = ratio_of(s);
  if (!r && s.s_both * s.s_neither != 0) {
    throw CertificateError("zero denominator with a nonzero numerator for pair (" +
                           std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  return r;
}

BigRational theorem1_bound(int d) {
  BigRational b(2 * (d - 1), d);
  b.canonicalize();
  return b;
}

BigRational theorem2_bound(int d) {
  BigRational b(d - 1, d);
  b.canonicalize();
  return b;
}

CorrelationReport evaluate_bound(const WeightedPartitionSums& s, const BigRational& bound) {
  CorrelationReport r;
  r.i = s.i;
  r.j = s.j;
  r.d = s.d;
  r.sums = s;
  r.ratio = ratio_of(s);
  r.bound = bound;
  r.satisfied = s.s_both * s.s_neither <= bound * s.s_i_only * s.s_j_only;
  return r;
}

CorrelationReport check_theorem1(const Matroid& m, int i, int j,
                                 const std::vector<BigRational>& weights,
                                 const EnumerationOptions& options) {
  check_distinct(m, i, j);
  if (m.rank() < 1) throw InputError("the 2(1 - 1/d) bound needs positive rank");
  require_eligible(m, i);
  require_eligible(m, j);
  auto r = evaluate_bound(weighted_partition(m, i, j, weights, options), theorem1_bound(m.rank()));
  r.free_pair = m.element_status(i) == ElementStatus::kFree &&
                m.element_status(j) == ElementStatus::kFree;
  return r;
}

CorrelationReport check_theorem2(const Matroid& m, int i, int j,
                                 const std::vector<BigRational>& weights,
                                 const EnumerationOptions& options) {
  check_distinct(m, i, j);
  if (m.rank() < 1) throw InputError("the (1 - 1/d) bound needs positive rank");
  for (int e : {i, j}) {
    ElementStatus s = m.element_status(e);
    if (s != ElementStatus::kFree) {
      throw DomainError("element " + std::to_string(e) + " is " + to_string(s) + ", not free");
    }
  }
  auto r = evaluate_bound(weighted_partition(m, i, j, weights, options), theorem2_bound(m.rank()));
  r.free_pair = true;
  return r;
}

Prop41Report check_prop41(const std::vector<BigRational>& profile) {
  const int d = static_cast<int>(profile.size()) - 1;
  if (d < 2) throw InputError("the independent-set inequality needs rank >= 2");
  Prop41Report r;
  r.d = d;
  r.lhs = profile[d - 1] * profile[d - 1];
  r.rhs = BigRational(d, d - 1) * profile[d - 2] * profile[d];
  r.rhs.canonicalize();
  r.satisfied = r.lhs >= r.rhs;
  return r;
}

AlphaStrategy parse_strategy(const std::string& name) {
  if (name == "unit") return AlphaStrategy::kUnit;
  if (name == "grid") return AlphaStrategy::kGrid;
  if (name == "ascent") return AlphaStrategy::kAscent;
  throw InputError("unknown strategy \"" + name + "\" (unit, grid, ascent)");
}

std::string to_string(AlphaStrategy s) {
  switch (s) {
    case AlphaStrategy::kUnit:
      return "unit";
    case AlphaStrategy::kGrid:
      return "grid";
    case AlphaStrategy::kAscent:
      return "ascent";
  }
  return "unit";
}

AlphaEstimate alpha_lower_bound(const Matroid& m, const AlphaOptions& alpha,
                                const EnumerationOptions& options) {
  const std::vector<int> eligible = eligible_elements(m);
  if (eligible.size() < 2) {
    throw DomainError("alpha needs two elements that are neither loops nor coloops");
  }
  const int n = m.size();
  AlphaEstimate out;
  out.weights = unit_weights(n);
  out.evaluations = 1;

  Best best = best_pair(pair_table(m, out.weights, options), eligible);
  if (!best.found) throw DomainError("no eligible pair has a nonzero denominator");
  std::string descriptor = to_string(alpha.strategy);

  if (alpha.strategy == AlphaStrategy::kGrid) {
    if (alpha.levels < 0 || alpha.levels > 30) throw InputError("levels must be in 0..30");
    descriptor += "(levels=" + std::to_string(alpha.levels) + ")";
    std::vector<BigRational> w = out.weights;
    for (int sweep = 0; sweep < alpha.max_iter; ++sweep) {
      bool improved = false;
      for (int e = 0; e < n; ++e) {
        const BigRational keep = w[e];
        BigRational chosen = keep;
        for (int k = 0; k <= alpha.levels; ++k) {
          BigRational v(BigInt(1) << k);
          if (v == keep) continue;
          w[e] = v;
          ++out.evaluations;
          Best b = best_pair(pair_table(m, w, options), eligible);
          if (b.found && b.ratio > best.ratio) {
            best = b;
            chosen = v;
            improved = true;
          }
        }
        w[e] = chosen;
      }
      out.weights = w;
      if (!improved) break;
    }
  } else if (alpha.strategy == AlphaStrategy::kAscent) {
    descriptor += "(tol=" + std::to_string(alpha.tol) + ",max_iter=" +
                  std::to_string(alpha.max_iter) + ")";
    constexpr double kRadius = 4.0;
    constexpr double kClamp = 10.0;
    const double phi = (std::sqrt(5.0) - 1) / 2;
    std::vector<double> x(n, 0.0), w(n, 1.0);
    auto f = [&](const std::vector<double>& xs) {
      for (int e = 0; e < n; ++e) w[e] = std::exp(xs[e]);
      ++out.evaluations;
      return best_pair_approx(pair_table_approx(m, w, options), eligible);
    };
    double current = f(x);
    for (int sweep = 0; sweep < alpha.max_iter; ++sweep) {
      const double start = current;
      for (int e = 0; e < n; ++e) {
        double lo = std::max(-kClamp, x[e] - kRadius), hi = std::min(kClamp, x[e] + kRadius);
        std::vector<double> y = x;
        double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
        y[e] = a;
        double fa = f(y);
        y[e] = b;
        double fb = f(y);
        for (int it = 0; it < 40 && hi - lo > 1e-7; ++it) {
          if (fa >= fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - phi * (hi - lo);
            y[e] = a;
            fa = f(y);
          } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + phi * (hi - lo);
            y[e] = b;
            fb = f(y);
          }
        }
        const double cand_x = fa >= fb ? a : b;
        const double cand_f = std::max(fa, fb);
        if (cand_f > current) {
          x[e] = cand_x;
          current = cand_f;
        }
      }
      if (current - start <= alpha.tol * std::max(start, 1e-300)) break;
    }
    std::vector<BigRational> q(n);
    for (int e = 0; e < n; ++e) {
      q[e] = approximate_rational(std::exp(x[e]), 1000000);
      if (q[e] <= 0) q[e] = BigRational(1, 1000000);
    }
    ++out.evaluations;
    Best b = best_pair(pair_table(m, q, options), eligible);
    if (b.found && b.ratio > best.ratio) {
      best = b;
      out.weights = q;
    }
  }
  out.best_ratio = best.ratio;
  out.i = best.i;
  out.j = best.j;
  out.strategy = descriptor;
  return out;
}

std::vector<BigRational> random_weights(std::mt19937_64& rng, int n) {
  std::vector<BigRational> out;
  out.reserve(n);
  for (int e = 0; e < n; ++e) {
    const unsigned long num = 1 + rng() % 64;
    const unsigned long den = 1 + rng() % 64;
    BigRational w(num, den);
    w.canonicalize();
    out.push_back(w);
  }
  return out;
}

std::vector<std::vector<BigRational>> random_weight_vectors(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<BigRational>> out;
  for (int c = 0; c < count; ++c) out.push_back(random_weights(rng, n));
  return out;
}

Matroid random_gf2_matroid(std::mt19937_64& rng, int n, int max_rows) {
  if (n < 1 || max_rows < 1) throw InputError("random matroid needs n >= 1 and rows >= 1");
  for (;;) {
    const int rows = 1 + static_cast<int>(rng() % max_rows);
    std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(rows));
    for (auto& c : cols) {
      for (auto& x : c) x = static_cast<std::int64_t>(rng() & 1);
    }
    Matroid m = Matroid::linear_gfp(PrimeFieldMatrix(2, rows, cols));
    if (m.rank() >= 1) return m;
  }
}

}  // namespace matcor
