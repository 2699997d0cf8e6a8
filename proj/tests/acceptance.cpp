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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "matcor/analytics.hpp"
#include "matcor/certificates.hpp"
#include "matcor/constructions.hpp"
#include "matcor/correlation.hpp"
#include "matcor/sweeps.hpp"

namespace matcor {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

BasisPartitionCounts counts(long a, long b, long c, long d) {
  BasisPartitionCounts out;
  out.s_both = a;
  out.s_i_only = b;
  out.s_j_only = c;
  out.s_neither = d;
  return out;
}

bool same_counts(const BasisPartitionCounts& x, const BasisPartitionCounts& y) {
  return x.s_both == y.s_both && x.s_i_only == y.s_i_only && x.s_j_only == y.s_j_only &&
         x.s_neither == y.s_neither;
}

Outcome examples() {
  Outcome o;
  struct Case {
    CatalogEntry entry;
    BasisPartitionCounts want;
    long total;
  };
  std::vector<Case> cases{{example_simplicial(), counts(11664, 11640, 11640, 11664), 46608},
                          {example_graphic(), counts(80, 32, 192, 80), 384},
                          {example_transversal(), counts(33, 36, 114, 126), 309},
                          {example_steiner(), counts(7315, 22638, 22638, 72149), 124740}};
  for (const auto& c : cases) {
    auto got = basis_partition(c.entry.matroid, c.entry.i, c.entry.j);
    o.require(same_counts(got, c.want), c.entry.name + " partition");
    o.require(got.total() == c.total, c.entry.name + " total");
  }
  o.detail = o.ok ? "4/4 bit-exact" : o.detail;
  return o;
}

Outcome spikes() {
  Outcome o;
  for (int p : {2, 3}) {
    for (int d = 2; d <= 5; ++d) {
      auto e = spike(p, d);
      auto got = basis_partition(e.matroid, e.i, e.j);
      auto want = spike_closed_form(p, d);
      o.require(same_counts(got, want), "closed form p=" + std::to_string(p) + " d=" + std::to_string(d));
      auto r = correlation_ratio(e.matroid, e.i, e.j, unit_weights(e.matroid.size()));
      BigRational formula((d - 1) * (d - 1), d * d - 3 * d + 4);
      formula.canonicalize();
      o.require(r && *r == formula, "ratio formula");
    }
  }
  int argmax = 2;
  for (int d = 2; d <= 100; ++d) {
    if (spike_ratio(d) > spike_ratio(argmax)) argmax = d;
  }
  o.require(argmax == 5 && spike_ratio(5) == BigRational(8, 7), "maximum over d <= 100");
  if (o.ok) o.detail = "8 (p, d) cases exact; max 8/7 at d = 5";
  return o;
}

Outcome theorem_sweeps() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& e : catalog()) {
    for (const auto& r : theorem1_sweep(e.matroid, weight_cases(e.matroid.size(), 20))) {
      o.require(r.report.satisfied, "theorem 1 violated on " + e.name);
      ++checks;
    }
  }
  std::size_t free_checks = 0;
  for (const auto& c : theorem2_sweep(50)) {
    o.require(c.report.satisfied && c.report.free_pair, "theorem 2 violated");
    ++free_checks;
  }
  if (o.ok) {
    o.detail = std::to_string(checks) + " pair checks, " + std::to_string(free_checks) +
               " free-pair checks, 0 violations";
  }
  return o;
}

Outcome certificates() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& e : catalog()) {
    if (e.matroid.rank() < 2) continue;
    for (const auto& r : certificate_sweep(e.matroid, weight_cases(e.matroid.size(), 20))) {
      o.require(r.report.passed(), "certificate failed on " + e.name + ": " +
                                       format_matrix(r.report.hij.entries));
      ++checks;
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " H_ij/H_0 pairs certified";
  return o;
}

Outcome golay() {
  Outcome o;
  auto r = golay_self_check(10000);
  o.require(r.octads == 759, "octad count");
  o.require(r.through_point_min == 253 && r.through_point_max == 253, "octads per point");
  o.require(r.through_pair_min == 77 && r.through_pair_max == 77, "octads per pair");
  o.require(r.steiner_blocks == 352, "|V|");
  o.require(r.five_subsets_checked == 10000 && r.five_subsets_bad == 0, "5-subset coverage");
  o.require(r.intersections_ok, "intersection sizes");
  if (o.ok) o.detail = "759 / 253 / 77 / 352; 10000 random 5-subsets covered once";
  return o;
}

Outcome mason() {
  Outcome o;
  for (const auto& e : catalog()) {
    o.require(mason_check(independence_profile(e.matroid), e.matroid.size()).all_2(), e.name);
  }
  for (const auto& c : mason_sweep(100)) {
    o.require(c.matroid.size() <= 12 && c.report.all_2(), "random case " + std::to_string(c.index));
  }
  if (o.ok) o.detail = std::to_string(catalog().size()) + " catalog + 100 random profiles";
  return o;
}

Outcome entropy() {
  Outcome o;
  for (const auto& e : catalog()) {
    auto r = entropy_report(e.matroid);
    o.require(r.poisson_ok, e.name + " H <= H(Poisson)");
    o.require(r.upper_ok, e.name + " H(Poisson) <= upper bound");
    o.require(r.concentration.holds, e.name + " concentration");
  }
  for (int d = 2; d <= 64; ++d) {
    auto r = entropy_report(Matroid::uniform(d, d));
    o.require(r.lower_chain && *r.lower_chain <= r.entropy, "boolean lower chain d=" + std::to_string(d));
  }
  if (o.ok) o.detail = "catalog chain and concentration; boolean d = 2..64";
  return o;
}

Outcome s8_positive() {
  Outcome o;
  auto e = s8();
  auto r = correlation_ratio(e.matroid, e.i, e.j, unit_weights(8));
  o.require(r && *r == BigRational(9, 8), "S8 ratio");
  o.require(r && *r > 1, "positive correlation");
  o.require(r && *r == spike_ratio(4), "matches spike(2,4)");
  if (o.ok) o.detail = "ratio 9/8 at pair (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> runs = {
      {"verify-examples"},
      {"ratio", "--catalog", "all", "--all-pairs"},
      {"theorem1", "--catalog", "all", "--sweep", "2"},
      {"theorem2", "--random", "20"},
      {"mason", "--catalog", "all"},
      {"hodge", "--catalog", "all", "--sweep", "1"},
      {"entropy", "--catalog", "all"},
      {"spike", "--p", "3", "--d", "5", "--compare"},
      {"alpha", "--catalog", "s8", "--strategy", "ascent"},
  };
  int compared = 0;
  for (const auto& args : runs) {
    for (const char* format : {"json", "csv"}) {
      std::string first;
      for (const char* w : {"1", "2", "8"}) {
        auto a = args;
        a.insert(a.end(), {"--workers", w, "--format", format});
        std::ostringstream out, err;
        int code = run_cli(a, out, err);
        o.require(code == 0, args[0] + " exit " + std::to_string(code));
        if (std::string(w) == "1") {
          first = out.str();
        } else {
          o.require(out.str() == first, args[0] + " differs at workers " + w);
          ++compared;
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(runs.size()) + " commands x 2 formats byte-identical at 1/2/8 workers";
  return o;
}

}  // namespace
}  // namespace matcor

int main() {
  using namespace matcor;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"example reproduction", examples},
      {"spike closed forms", spikes},
      {"theorem sweeps", theorem_sweeps},
      {"certificate suite", certificates},
      {"golay/steiner self-check", golay},
      {"mason form 2", mason},
      {"entropy suite", entropy},
      {"S8 positive correlation", s8_positive},
      {"determinism", determinism},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", index, name.c_str(),
                o.detail.c_str(), secs);
    failed += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
