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

#include "matcor/enumeration.hpp"

#include <atomic>
#include <mutex>
#include <string>
#include <thread>

#include "matcor/errors.hpp"

namespace matcor {
namespace {

void check_enumerable(const Matroid& m) {
  if (m.size() > kMaxEnumerationSize) {
    throw CapacityError("exhaustive enumeration needs n <= " +
                        std::to_string(kMaxEnumerationSize) + ", got n = " +
                        std::to_string(m.size()));
  }
}

void check_pair(const Matroid& m, int i, int j) {
  for (int e : {i, j}) {
    if (e < 0 || e >= m.size()) {
      throw InputError("element " + std::to_string(e) + " is not in a ground set of size " +
                       std::to_string(m.size()));
    }
  }
  if (i == j) throw InputError("the pair needs two distinct elements, got i = j = " + std::to_string(i));
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Weights rewritten over a common denominator: w_e = numerators[e] / denominator.
struct ScaledWeights {
  std::vector<BigInt> numerators;
  BigInt denominator = 1;
};

ScaledWeights scale(const std::vector<BigRational>& weights) {
  ScaledWeights out;
  for (const auto& w : weights) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), w.get_den_mpz_t());
  }
  out.numerators.reserve(weights.size());
  for (const auto& w : weights) {
    out.numerators.push_back(w.get_num() * (out.denominator / w.get_den()));
  }
  return out;
}

BigRational unscale(const BigInt& sum, const ScaledWeights& s, int level) {
  BigRational out(sum, power(s.denominator, static_cast<unsigned>(level)));
  out.canonicalize();
  return out;
}

// Depth-first search over independent sets in ascending element order.
// Visitors see enter(e)/leave() around every accepted element and visit(path)
// once per independent set.
template <class Visitor>
class Search {
 public:
  Search(const Matroid& m, int max_depth, int target_depth)
      : m_(m), n_(m.size()), max_depth_(max_depth), target_depth_(target_depth) {}

  void dfs(IndependenceCursor& cursor, Visitor& v, std::vector<int>& path, int start) const {
    v.visit(path);
    if (static_cast<int>(path.size()) == max_depth_) return;
    const int need = target_depth_ - static_cast<int>(path.size());
    for (int e = start; e < n_; ++e) {
      if (n_ - e < need) break;
      if (!cursor.push(e)) continue;
      path.push_back(e);
      v.enter(e);
      dfs(cursor, v, path, e + 1);
      v.leave();
      path.pop_back();
      cursor.pop();
    }
  }

  void collect(IndependenceCursor& cursor, Visitor& v, std::vector<int>& path, int start,
               int split, std::vector<std::vector<int>>& jobs) const {
    if (static_cast<int>(path.size()) == split) {
      jobs.push_back(path);
      return;
    }
    v.visit(path);
    const int need = target_depth_ - static_cast<int>(path.size());
    for (int e = start; e < n_; ++e) {
      if (n_ - e < need) break;
      if (!cursor.push(e)) continue;
      path.push_back(e);
      v.enter(e);
      collect(cursor, v, path, e + 1, split, jobs);
      v.leave();
      path.pop_back();
      cursor.pop();
    }
  }

  void run_job(const std::vector<int>& job, Visitor& v) const {
    auto cursor = m_.cursor();
    for (int e : job) {
      cursor->push(e);
      v.enter(e);
    }
    std::vector<int> path = job;
    dfs(*cursor, v, path, job.empty() ? 0 : job.back() + 1);
    for (std::size_t k = 0; k < job.size(); ++k) v.leave();
  }

 private:
  const Matroid& m_;
  int n_;
  int max_depth_;
  int target_depth_;
};

// Runs the search and returns visitors in a deterministic order: the master
// (nodes above the split depth) first, then one per job in job order. When
// `per_job` is false the jobs share one visitor per worker, which is fine
// for visitors whose merge is exact addition.
template <class Visitor>
std::vector<Visitor> run_search(const Matroid& m, int max_depth, int target_depth,
                                const Visitor& prototype, const EnumerationOptions& options,
                                bool per_job,
                                const std::function<void(Visitor&)>& on_job_done = nullptr) {
  check_enumerable(m);
  Search<Visitor> search(m, max_depth, target_depth);
  const int split = std::max(0, std::min(options.split_depth, max_depth));

  std::vector<Visitor> out;
  out.push_back(prototype);
  std::vector<std::vector<int>> jobs;
  {
    auto cursor = m.cursor();
    std::vector<int> path;
    search.collect(*cursor, out.front(), path, 0, split, jobs);
  }
  if (on_job_done) on_job_done(out.front());

  const int workers = std::min<int>(resolve_workers(options.workers),
                                    std::max<std::size_t>(1, jobs.size()));
  const std::size_t slots = per_job ? jobs.size() : static_cast<std::size_t>(workers);
  std::vector<Visitor> results(slots, prototype);
  std::mutex done_mutex;
  auto finish = [&](Visitor& v) {
    if (!on_job_done) return;
    std::lock_guard<std::mutex> lock(done_mutex);
    on_job_done(v);
  };

  if (workers <= 1) {
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      Visitor& v = results[per_job ? k : 0];
      search.run_job(jobs[k], v);
      if (per_job) finish(v);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (;;) {
          std::size_t k = next.fetch_add(1);
          if (k >= jobs.size()) break;
          Visitor& v = results[per_job ? k : static_cast<std::size_t>(w)];
          search.run_job(jobs[k], v);
          if (per_job) finish(v);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& r : results) out.push_back(std::move(r));
  return out;
}

struct CountVisitor {
  std::vector<std::uint64_t> counts;
  std::uint64_t nodes = 0;
  void enter(int) {}
  void leave() {}
  void visit(const std::vector<int>& path) {
    ++counts[path.size()];
    ++nodes;
  }
};

struct BasisVisitor {
  int d = 0;
  std::vector<SubsetMask> bases;
  void enter(int) {}
  void leave() {}
  void visit(const std::vector<int>& path) {
    if (static_cast<int>(path.size()) == d) bases.push_back(SubsetMask::from_elements(path));
  }
};

struct PartitionVisitor {
  int d = 0, i = 0, j = 0;
  std::uint64_t both = 0, i_only = 0, j_only = 0, neither = 0;
  int has_i = 0, has_j = 0;
  void enter(int e) {
    has_i += e == i;
    has_j += e == j;
  }
  void leave() {}
  void visit(const std::vector<int>& path) {
    if (static_cast<int>(path.size()) != d) return;
    bool a = false, b = false;
    for (int e : path) {
      a |= e == i;
      b |= e == j;
    }
    (a ? (b ? both : i_only) : (b ? j_only : neither)) += 1;
  }
};

// Keeps the running product of scaled weights along the current path.
struct ProductStack {
  const std::vector<BigInt>* numerators = nullptr;
  std::vector<BigInt> stack{BigInt(1)};
  void enter(int e) { stack.push_back(stack.back() * (*numerators)[e]); }
  void leave() { stack.pop_back(); }
  const BigInt& top() const { return stack.back(); }
};

struct LevelSumVisitor {
  ProductStack product;
  std::vector<BigInt> sums;
  void enter(int e) { product.enter(e); }
  void leave() { product.leave(); }
  void visit(const std::vector<int>& path) { sums[path.size()] += product.top(); }
};

struct WeightedPartitionVisitor {
  ProductStack product;
  int d = 0, i = 0, j = 0;
  BigInt both, i_only, j_only, neither;
  void enter(int e) { product.enter(e); }
  void leave() { product.leave(); }
  void visit(const std::vector<int>& path) {
    if (static_cast<int>(path.size()) != d) return;
    bool a = false, b = false;
    for (int e : path) {
      a |= e == i;
      b |= e == j;
    }
    (a ? (b ? both : i_only) : (b ? j_only : neither)) += product.top();
  }
};

struct UnitPairVisitor {
  int n = 0, d = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> single, both;
  void enter(int) {}
  void leave() {}
  void visit(const std::vector<int>& path) {
    if (static_cast<int>(path.size()) != d) return;
    ++total;
    for (std::size_t a = 0; a < path.size(); ++a) {
      ++single[path[a]];
      for (std::size_t b = a + 1; b < path.size(); ++b) ++both[path[a] * n + path[b]];
    }
  }
};

struct WeightedPairVisitor {
  ProductStack product;
  int n = 0, d = 0;
  BigInt total;
  std::vector<BigInt> single, both;
  void enter(int e) { product.enter(e); }
  void leave() { product.leave(); }
  void visit(const std::vector<int>& path) {
    if (static_cast<int>(path.size()) != d) return;
    const BigInt& p = product.top();
    total += p;
    for (std::size_t a = 0; a < path.size(); ++a) {
      single[path[a]] += p;
      for (std::size_t b = a + 1; b < path.size(); ++b) both[path[a] * n + path[b]] += p;
    }
  }
};

struct ApproxPairVisitor {
  const std::vector<double>* weights = nullptr;
  std::vector<double> stack{1.0};
  int n = 0, d = 0;
  double total = 0;
  std::vector<double> single, both;
  void enter(int e) { stack.push_back(stack.back() * (*weights)[e]); }
  void leave() { stack.pop_back(); }
  void visit(const std::vector<int>& path) {
    if (static_cast<int>(path.size()) != d) return;
    double p = stack.back();
    total += p;
    for (std::size_t a = 0; a < path.size(); ++a) {
      single[path[a]] += p;
      for (std::size_t b = a + 1; b < path.size(); ++b) both[path[a] * n + path[b]] += p;
    }
  }
};

}  // namespace

BigInt IndependenceProfile::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

WeightedPartitionSums WeightedPartitionSums::from_counts(const BasisPartitionCounts& c) {
  return {c.i, c.j, c.d, BigRational(c.s_both), BigRational(c.s_i_only),
          BigRational(c.s_j_only), BigRational(c.s_neither)};
}

std::vector<BigRational> unit_weights(int n) { return std::vector<BigRational>(n, BigRational(1)); }

bool is_unit(const std::vector<BigRational>& weights) {
  for (const auto& w : weights) {
    if (w != 1) return false;
  }
  return true;
}

void validate_weights(const std::vector<BigRational>& weights, int n) {
  if (static_cast<int>(weights.size()) != n) {
    throw InputError("expected " + std::to_string(n) + " weights, got " +
                     std::to_string(weights.size()));
  }
  for (std::size_t e = 0; e < weights.size(); ++e) {
    if (weights[e] <= 0) {
      throw InputError("weight of element " + std::to_string(e) + " must be positive, got " +
                       to_ratio_string(weights[e]));
    }
  }
}

void for_each_basis(const Matroid& m, const std::function<void(const SubsetMask&)>& sink,
                    const EnumerationOptions& options) {
  BasisVisitor proto{m.rank(), {}};
  if (options.ordered) {
    auto parts = run_search(m, m.rank(), m.rank(), proto, options, true);
    for (const auto& part : parts) {
      for (const auto& b : part.bases) sink(b);
    }
    return;
  }
  auto deliver = [&](BasisVisitor& v) {
    for (const auto& b : v.bases) sink(b);
    v.bases.clear();
  };
  run_search<BasisVisitor>(m, m.rank(), m.rank(), proto, options, true, deliver);
}

std::vector<SubsetMask> enumerate_bases(const Matroid& m, const EnumerationOptions& options) {
  std::vector<SubsetMask> out;
  EnumerationOptions ordered = options;
  ordered.ordered = true;
  for_each_basis(m, [&](const SubsetMask& b) { out.push_back(b); }, ordered);
  return out;
}

IndependenceProfile independence_profile(const Matroid& m, const EnumerationOptions& options) {
  if (const auto* u = as_uniform(m)) {
    // Every set of size <= r is independent.
    IndependenceProfile out;
    out.d = u->r;
    for (int k = 0; k <= u->r; ++k) {
      out.counts.push_back(binomial(static_cast<unsigned>(u->n), static_cast<unsigned>(k)));
    }
    out.nodes_visited = 0;
    return out;
  }
  const int d = m.rank();
  CountVisitor proto{std::vector<std::uint64_t>(d + 1, 0), 0};
  auto parts = run_search(m, d, 0, proto, options, false);
  IndependenceProfile out;
  out.d = d;
  std::vector<std::uint64_t> counts(d + 1, 0);
  for (const auto& p : parts) {
    for (int k = 0; k <= d; ++k) counts[k] += p.counts[k];
    out.nodes_visited += p.nodes;
  }
  for (auto c : counts) out.counts.push_back(to_big(c));
  return out;
}

std::vector<BigRational> weighted_profile(const Matroid& m, const std::vector<BigRational>& weights,
                                          const EnumerationOptions& options) {
  validate_weights(weights, m.size());
  const int d = m.rank();
  if (is_unit(weights)) {
    auto profile = independence_profile(m, options);
    std::vector<BigRational> out;
    for (const auto& c : profile.counts) out.emplace_back(c);
    return out;
  }
  ScaledWeights s = scale(weights);
  LevelSumVisitor proto;
  proto.product.numerators = &s.numerators;
  proto.sums.assign(d + 1, BigInt(0));
  auto parts = run_search(m, d, 0, proto, options, false);
  std::vector<BigInt> sums(d + 1, BigInt(0));
  for (const auto& p : parts) {
    for (int k = 0; k <= d; ++k) sums[k] += p.sums[k];
  }
  std::vector<BigRational> out;
  for (int k = 0; k <= d; ++k) out.push_back(unscale(sums[k], s, k));
  return out;
}

BasisPartitionCounts basis_partition(const Matroid& m, int i, int j,
                                     const EnumerationOptions& options) {
  check_pair(m, i, j);
  const int d = m.rank();
  PartitionVisitor proto;
  proto.d = d;
  proto.i = i;
  proto.j = j;
  auto parts = run_search(m, d, d, proto, options, false);
  std::uint64_t both = 0, i_only = 0, j_only = 0, neither = 0;
  for (const auto& p : parts) {
    both += p.both;
    i_only += p.i_only;
    j_only += p.j_only;
    neither += p.neither;
  }
  return {i, j, d, to_big(both), to_big(i_only), to_big(j_only), to_big(neither)};
}

WeightedPartitionSums weighted_partition(const Matroid& m, int i, int j,
                                         const std::vector<BigRational>& weights,
                                         const EnumerationOptions& options) {
  check_pair(m, i, j);
  validate_weights(weights, m.size());
  if (is_unit(weights)) return WeightedPartitionSums::from_counts(basis_partition(m, i, j, options));
  const int d = m.rank();
  ScaledWeights s = scale(weights);
  WeightedPartitionVisitor proto;
  proto.product.numerators = &s.numerators;
  proto.d = d;
  proto.i = i;
  proto.j = j;
  auto parts = run_search(m, d, d, proto, options, false);
  BigInt both = 0, i_only = 0, j_only = 0, neither = 0;
  for (const auto& p : parts) {
    both += p.both;
    i_only += p.i_only;
    j_only += p.j_only;
    neither += p.neither;
  }
  return {i, j, d, unscale(both, s, d), unscale(i_only, s, d), unscale(j_only, s, d),
          unscale(neither, s, d)};
}

PairTable::PairTable(int n, int d, BigRational total, std::vector<BigRational> single,
                     std::vector<BigRational> both)
    : n_(n), d_(d), total_(std::move(total)), single_(std::move(single)), both_(std::move(both)) {}

WeightedPartitionSums PairTable::pair(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) {
    throw InputError("invalid pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  const BigRational& both = both_[i * n_ + j];
  WeightedPartitionSums out;
  out.i = i;
  out.j = j;
  out.d = d_;
  out.s_both = both;
  out.s_i_only = single_[i] - both;
  out.s_j_only = single_[j] - both;
  out.s_neither = total_ - single_[i] - single_[j] + both;
  return out;
}

PairTable pair_table(const Matroid& m, const std::vector<BigRational>& weights,
                     const EnumerationOptions& options) {
  validate_weights(weights, m.size());
  const int n = m.size();
  const int d = m.rank();
  std::vector<BigRational> single(n), both(static_cast<std::size_t>(n) * n);
  BigRational total;
  auto symmetrize = [&] {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) both[b * n + a] = both[a * n + b];
    }
  };
  if (is_unit(weights)) {
    UnitPairVisitor proto{n, d, 0, std::vector<std::uint64_t>(n, 0),
                          std::vector<std::uint64_t>(static_cast<std::size_t>(n) * n, 0)};
    auto parts = run_search(m, d, d, proto, options, false);
    std::uint64_t t = 0;
    std::vector<std::uint64_t> s(n, 0), b(static_cast<std::size_t>(n) * n, 0);
    for (const auto& p : parts) {
      t += p.total;
      for (int e = 0; e < n; ++e) s[e] += p.single[e];
      for (std::size_t k = 0; k < b.size(); ++k) b[k] += p.both[k];
    }
    total = BigRational(to_big(t));
    for (int e = 0; e < n; ++e) single[e] = BigRational(to_big(s[e]));
    for (std::size_t k = 0; k < b.size(); ++k) both[k] = BigRational(to_big(b[k]));
    symmetrize();
    return PairTable(n, d, total, std::move(single), std::move(both));
  }
  ScaledWeights s = scale(weights);
  WeightedPairVisitor proto;
  proto.product.numerators = &s.numerators;
  proto.n = n;
  proto.d = d;
  proto.single.assign(n, BigInt(0));
  proto.both.assign(static_cast<std::size_t>(n) * n, BigInt(0));
  auto parts = run_search(m, d, d, proto, options, false);
  BigInt t = 0;
  std::vector<BigInt> si(n, BigInt(0)), bi(static_cast<std::size_t>(n) * n, BigInt(0));
  for (const auto& p : parts) {
    t += p.total;
    for (int e = 0; e < n; ++e) si[e] += p.single[e];
    for (std::size_t k = 0; k < bi.size(); ++k) bi[k] += p.both[k];
  }
  total = unscale(t, s, d);
  for (int e = 0; e < n; ++e) single[e] = unscale(si[e], s, d);
  for (std::size_t k = 0; k < bi.size(); ++k) both[k] = unscale(bi[k], s, d);
  symmetrize();
  return PairTable(n, d, total, std::move(single), std::move(both));
}

PairTableApprox pair_table_approx(const Matroid& m, const std::vector<double>& weights,
                                  const EnumerationOptions& options) {
  const int n = m.size();
  const int d = m.rank();
  if (static_cast<int>(weights.size()) != n) throw InputError("weight vector length mismatch");
  ApproxPairVisitor proto;
  proto.weights = &weights;
  proto.n = n;
  proto.d = d;
  proto.single.assign(n, 0.0);
  proto.both.assign(static_cast<std::size_t>(n) * n, 0.0);
  // Floating sums depend on summation order, so keep one visitor per job.
  auto parts = run_search(m, d, d, proto, options, true);
  PairTableApprox out;
  out.n = n;
  out.single.assign(n, 0.0);
  out.both.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& p : parts) {
    out.total += p.total;
    for (int e = 0; e < n; ++e) out.single[e] += p.single[e];
    for (std::size_t k = 0; k < out.both.size(); ++k) out.both[k] += p.both[k];
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) out.both[b * n + a] = out.both[a * n + b];
  }
  return out;
}

}  // namespace matcor
