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

#include "cli.hpp"

#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "matcor/analytics.hpp"
#include "matcor/certificates.hpp"
#include "matcor/constructions.hpp"
#include "matcor/correlation.hpp"
#include "matcor/errors.hpp"
#include "matcor/io.hpp"
#include "matcor/report.hpp"
#include "matcor/sweeps.hpp"

namespace matcor {
namespace {

const std::vector<std::string> kExamples = {"simplicial", "graphic", "transversal", "steiner"};

struct Config {
  std::string catalog;
  std::string matroid_file;
  std::optional<int> i, j;
  std::string weights = "unit";
  std::string format = "json";
  int workers = 1;
  std::string seed = "0xC0FFEE";
  std::string only;
  bool corrupt = false;
  int sweep = -1;
  int random = -1;
  bool free_extend = false;
  bool all_pairs = false;
  int p = 2, d = 4;
  std::optional<int> m;
  bool closed_form = false, enumerate = false, compare = false;
  std::string strategy = "unit";
  int levels = 4;
  double tol = 1e-6;
  int max_iter = 50;
};

struct Source {
  std::string name;
  Matroid matroid;
  int i;
  int j;
};

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InputError("seed must be an integer such as 0xC0FFEE, got \"" + text + "\"");
  }
}

std::vector<Source> sources(const Config& c, bool allow_all) {
  std::vector<Source> out;
  if (!c.matroid_file.empty() && !c.catalog.empty()) {
    throw InputError("pass either --matroid or --catalog, not both");
  }
  if (!c.matroid_file.empty()) {
    out.push_back({c.matroid_file, load_matroid_file(c.matroid_file), 0, 1});
  } else if (c.catalog == "all") {
    if (!allow_all) throw InputError("this command needs a single matroid");
    for (auto& e : catalog()) out.push_back({e.name, e.matroid, e.i, e.j});
  } else if (!c.catalog.empty()) {
    auto e = catalog_entry(c.catalog);
    out.push_back({e.name, e.matroid, e.i, e.j});
  } else {
    throw InputError("pass --matroid FILE or --catalog NAME");
  }
  for (auto& s : out) {
    if (c.i) s.i = *c.i;
    if (c.j) s.j = *c.j;
  }
  return out;
}

std::vector<BigRational> load_weights(const Config& c, int n) {
  if (c.weights == "unit") return unit_weights(n);
  return load_weights_file(c.weights, n);
}

EnumerationOptions enum_options(const Config& c) {
  EnumerationOptions o;
  o.workers = c.workers;
  return o;
}

std::string ratio_text(const std::optional<BigRational>& r) {
  return r ? to_ratio_string(*r) : "undefined";
}

double ratio_approx(const std::optional<BigRational>& r) { return r ? to_double(*r) : 0.0; }

std::string signature_text(const Signature& s) {
  return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + "," +
         std::to_string(s.zero) + ")";
}

std::string join_rationals(const std::vector<BigRational>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ';';
    out += to_ratio_string(v[k]);
  }
  return out;
}

void put_sums(Record& r, const WeightedPartitionSums& s) {
  r["s_both"] = to_ratio_string(s.s_both);
  r["s_i_only"] = to_ratio_string(s.s_i_only);
  r["s_j_only"] = to_ratio_string(s.s_j_only);
  r["s_neither"] = to_ratio_string(s.s_neither);
}

void put_counts(Record& r, const BasisPartitionCounts& s) {
  r["s_both"] = to_decimal_string(s.s_both);
  r["s_i_only"] = to_decimal_string(s.s_i_only);
  r["s_j_only"] = to_decimal_string(s.s_j_only);
  r["s_neither"] = to_decimal_string(s.s_neither);
}

Record pair_header(const std::string& name, const WeightedPartitionSums& s,
                   const std::string& weights) {
  Record r = Record::object();
  r["matroid"] = name;
  r["i"] = s.i;
  r["j"] = s.j;
  r["d"] = s.d;
  r["weights"] = weights;
  put_sums(r, s);
  return r;
}

int cmd_verify_examples(const Config& c, std::ostream& out, std::ostream& err) {
  RecordWriter w(out, parse_format(c.format), schema_for("verify-examples"));
  std::vector<std::string> names;
  for (const auto& n : kExamples) {
    if (c.only.empty() || c.only == n) names.push_back(n);
  }
  if (names.empty()) throw InputError("unknown example \"" + c.only + "\"");
  int passed = 0;
  for (const auto& name : names) {
    CatalogEntry e = catalog_entry(name);
    BasisPartitionCounts expected = *e.expected;
    if (c.corrupt) expected.s_both += 1;
    BasisPartitionCounts got = basis_partition(e.matroid, e.i, e.j, enum_options(c));
    const bool match = got == expected;
    Record r = Record::object();
    r["example"] = name;
    r["n"] = e.matroid.size();
    r["d"] = e.matroid.rank();
    r["i"] = e.i;
    r["j"] = e.j;
    put_counts(r, got);
    r["total"] = to_decimal_string(got.total());
    r["expected"] = to_decimal_string(expected.s_both) + "," + to_decimal_string(expected.s_i_only) +
                    "," + to_decimal_string(expected.s_j_only) + "," +
                    to_decimal_string(expected.s_neither);
    r["match"] = match;
    w.write(r);
    if (match) {
      ++passed;
    } else {
      err << name << ": expected (" << expected.s_both << ", " << expected.s_i_only << ", "
          << expected.s_j_only << ", " << expected.s_neither << ") got (" << got.s_both << ", "
          << got.s_i_only << ", " << got.s_j_only << ", " << got.s_neither << ")\n";
    }
  }
  err << passed << "/" << names.size() << (passed == static_cast<int>(names.size()) ? " PASS" : " FAIL")
      << "\n";
  return passed == static_cast<int>(names.size()) ? 0 : 1;
}

int cmd_ratio(const Config& c, std::ostream& out) {
  RecordWriter w(out, parse_format(c.format), schema_for("ratio"));
  for (const auto& s : sources(c, true)) {
    auto weights = load_weights(c, s.matroid.size());
    std::vector<WeightedPartitionSums> rows;
    if (c.all_pairs) {
      PairTable t = pair_table(s.matroid, weights, enum_options(c));
      auto el = eligible_elements(s.matroid);
      for (std::size_t a = 0; a < el.size(); ++a) {
        for (std::size_t b = a + 1; b < el.size(); ++b) rows.push_back(t.pair(el[a], el[b]));
      }
    } else {
      correlation_ratio(s.matroid, s.i, s.j, weights, enum_options(c));
      rows.push_back(weighted_partition(s.matroid, s.i, s.j, weights, enum_options(c)));
    }
    for (const auto& sums : rows) {
      Record r = pair_header(s.name, sums, c.weights);
      auto ratio = ratio_of(sums);
      r["ratio"] = ratio_text(ratio);
      r["ratio_approx"] = ratio_approx(ratio);
      w.write(r);
    }
  }
  return 0;
}

int cmd_theorem1(const Config& c, std::ostream& out) {
  RecordWriter w(out, parse_format(c.format), schema_for("theorem1"));
  bool ok = true;
  for (const auto& s : sources(c, true)) {
    std::vector<PairResult> results;
    if (c.sweep >= 0) {
      results = theorem1_sweep(s.matroid, weight_cases(s.matroid.size(), c.sweep, parse_seed(c.seed)),
                               enum_options(c));
    } else {
      auto weights = load_weights(c, s.matroid.size());
      results.push_back({c.weights, check_theorem1(s.matroid, s.i, s.j, weights, enum_options(c))});
    }
    for (const auto& pr : results) {
      Record r = pair_header(s.name, pr.report.sums, pr.weights);
      r["ratio"] = ratio_text(pr.report.ratio);
      r["bound"] = to_ratio_string(pr.report.bound);
      r["satisfied"] = pr.report.satisfied;
      r["ratio_approx"] = ratio_approx(pr.report.ratio);
      ok = ok && pr.report.satisfied;
      w.write(r);
    }
  }
  return ok ? 0 : 1;
}

int cmd_theorem2(const Config& c, std::ostream& out) {
  RecordWriter w(out, parse_format(c.format), schema_for("theorem2"));
  bool ok = true;
  auto emit = [&](const std::string& name, const std::string& weights, const CorrelationReport& rep) {
    Record r = pair_header(name, rep.sums, weights);
    r["ratio"] = ratio_text(rep.ratio);
    r["bound"] = to_ratio_string(rep.bound);
    r["satisfied"] = rep.satisfied;
    r["free_pair"] = rep.free_pair;
    ok = ok && rep.satisfied;
    w.write(r);
  };
  if (c.random >= 0) {
    for (const auto& fc : theorem2_sweep(c.random, parse_seed(c.seed), 10, enum_options(c))) {
      emit("random-" + std::to_string(fc.index), fc.weights, fc.report);
    }
    return ok ? 0 : 1;
  }
  for (auto s : sources(c, false)) {
    if (c.free_extend) {
      s.i = s.matroid.size();
      s.j = s.i + 1;
      s.matroid = s.matroid.free_extend(2);
      s.name += "+2free";
    }
    auto weights = load_weights(c, s.matroid.size());
    emit(s.name, c.weights, check_theorem2(s.matroid, s.i, s.j, weights, enum_options(c)));
  }
  return ok ? 0 : 1;
}

int cmd_mason(const Config& c, std::ostream& out) {
  RecordWriter w(out, parse_format(c.format), schema_for("mason"));
  bool ok = true;
  auto emit = [&](const std::string& name, const IndependenceProfile& prof, const MasonReport& rep) {
    for (const auto& rec : rep.records) {
      Record r = Record::object();
      r["matroid"] = name;
      r["n"] = rep.n;
      r["d"] = rep.d;
      r["k"] = rec.k;
      r["i_prev"] = to_decimal_string(prof.counts[rec.k - 1]);
      r["i_k"] = to_decimal_string(prof.counts[rec.k]);
      r["i_next"] = to_decimal_string(prof.counts[rec.k + 1]);
      r["holds_1"] = rec.holds_1;
      r["holds_2"] = rec.holds_2;
      r["holds_3"] = rec.holds_3;
      r["margin_2"] = to_decimal_string(rec.margin_2);
      w.write(r);
    }
    ok = ok && rep.all_2();
  };
  if (c.random >= 0) {
    for (const auto& mc : mason_sweep(c.random, parse_seed(c.seed), 12, enum_options(c))) {
      emit("random-" + std::to_string(mc.index), independence_profile(mc.matroid, enum_options(c)),
           mc.report);
    }
    return ok ? 0 : 1;
  }
  for (const auto& s : sources(c, true)) {
    auto prof = independence_profile(s.matroid, enum_options(c));
    emit(s.name, prof, mason_check(prof, s.matroid.size()));
  }
  return ok ? 0 : 1;
}

int cmd_hodge(const Config& c, std::ostream& out) {
  RecordWriter w(out, parse_format(c.format), schema_for("hodge"));
  bool ok = true;
  for (const auto& s : sources(c, true)) {
    std::vector<CertificateResult> results;
    if (c.sweep >= 0) {
      results = certificate_sweep(s.matroid,
                                  weight_cases(s.matroid.size(), c.sweep, parse_seed(c.seed)),
                                  enum_options(c));
    } else {
      if (s.matroid.rank() < 2) throw InputError("certificates need rank >= 2");
      auto weights = load_weights(c, s.matroid.size());
      auto sums = weighted_partition(s.matroid, s.i, s.j, weights, enum_options(c));
      auto prof = weighted_profile(s.matroid, weights, enum_options(c));
      results.push_back({c.weights, s.i, s.j, sums, prof, evaluate_certificates(sums, prof)});
    }
    for (const auto& cr : results) {
      Record r = Record::object();
      r["matroid"] = s.name;
      r["i"] = cr.i;
      r["j"] = cr.j;
      r["d"] = s.matroid.rank();
      r["weights"] = cr.weights;
      r["hij"] = format_matrix(cr.report.hij.entries);
      r["hij_signature"] = signature_text(cr.report.hij.signature);
      r["hij_det"] = to_ratio_string(cr.report.hij.det);
      r["hij_det_formula"] = to_ratio_string(hij_det_formula(cr.sums));
      r["h0"] = format_matrix(cr.report.h0.entries);
      r["h0_signature"] = signature_text(cr.report.h0.signature);
      r["h0_det"] = to_ratio_string(cr.report.h0.det);
      r["h0_det_formula"] = to_ratio_string(h0_det_formula(cr.profile));
      r["passed"] = cr.report.passed();
      ok = ok && cr.report.passed();
      w.write(r);
    }
  }
  return ok ? 0 : 1;
}

int cmd_entropy(const Config& c, std::ostream& out) {
  RecordWriter w(out, parse_format(c.format), schema_for("entropy"));
  bool ok = true;
  for (const auto& s : sources(c, true)) {
    EntropyReport e = entropy_report(s.matroid, enum_options(c));
    Record r = Record::object();
    r["matroid"] = s.name;
    r["d"] = e.d;
    r["distribution"] = join_rationals(e.distribution);
    r["mean"] = to_ratio_string(e.mean);
    r["entropy"] = e.entropy;
    r["lambda"] = e.lambda;
    r["poisson_entropy"] = e.poisson;
    r["upper_bound"] = e.upper_bound;
    r["boolean"] = e.lower_chain.has_value();
    r["lower_chain"] = e.lower_chain.value_or(0.0);
    r["argmax"] = e.concentration.k;
    r["max_prob"] = to_ratio_string(e.concentration.p);
    r["concentration"] = e.concentration.holds;
    r["poisson_ok"] = e.poisson_ok;
    r["upper_ok"] = e.upper_ok;
    ok = ok && e.concentration.holds && e.poisson_ok && e.upper_ok;
    w.write(r);
  }
  return ok ? 0 : 1;
}

int cmd_spike(const Config& c, std::ostream& out) {
  RecordWriter w(out, parse_format(c.format), schema_for("spike"));
  const bool transversal = c.m.has_value();
  const int q = transversal ? *c.m : c.p;
  const bool closed = c.closed_form || c.compare || !c.enumerate;
  const bool enumerate = c.enumerate || c.compare;
  CatalogEntry e = transversal ? transversal_family(q, c.d) : spike(q, c.d);
  const BasisPartitionCounts formula =
      transversal ? transversal_closed_form(q, c.d) : spike_closed_form(q, c.d);
  const BigRational target = spike_ratio(c.d);
  std::optional<BasisPartitionCounts> counted;
  if (enumerate) counted = basis_partition(e.matroid, e.i, e.j, enum_options(c));
  bool ok = true;
  auto emit = [&](const std::string& source, const BasisPartitionCounts& k) {
    auto ratio = ratio_of(WeightedPartitionSums::from_counts(k));
    bool match = true;
    if (!transversal) match = ratio && *ratio == target;
    if (c.compare && counted) match = match && *counted == formula;
    ok = ok && match;
    Record r = Record::object();
    r["family"] = transversal ? "transversal" : "spike";
    r["p"] = q;
    r["d"] = c.d;
    r["source"] = source;
    put_counts(r, k);
    r["total"] = to_decimal_string(k.total());
    r["ratio"] = ratio_text(ratio);
    r["formula_ratio"] = to_ratio_string(target);
    r["match"] = match;
    w.write(r);
  };
  if (closed) emit("closed-form", formula);
  if (counted) emit("enumerate", *counted);
  return ok ? 0 : 1;
}

int cmd_alpha(const Config& c, std::ostream& out) {
  RecordWriter w(out, parse_format(c.format), schema_for("alpha"));
  AlphaOptions a;
  a.strategy = parse_strategy(c.strategy);
  a.levels = c.levels;
  a.tol = c.tol;
  a.max_iter = c.max_iter;
  for (const auto& s : sources(c, true)) {
    AlphaEstimate est = alpha_lower_bound(s.matroid, a, enum_options(c));
    Record r = Record::object();
    r["matroid"] = s.name;
    r["strategy"] = est.strategy;
    r["i"] = est.i;
    r["j"] = est.j;
    r["best_ratio"] = to_ratio_string(est.best_ratio);
    r["best_ratio_approx"] = to_double(est.best_ratio);
    r["weights"] = join_rationals(est.weights);
    r["evaluations"] = est.evaluations;
    w.write(r);
  }
  return 0;
}

int cmd_export(const Config& c, std::ostream& out) {
  for (const auto& s : sources(c, true)) {
    nlohmann::ordered_json doc = {{"name", s.name}, {"i", s.i}, {"j", s.j}};
    doc["matroid"] = matroid_to_json(s.matroid);
    out << doc.dump() << '\n';
  }
  return 0;
}

void add_source(CLI::App* sub, Config& c) {
  sub->add_option("--matroid", c.matroid_file, "Matroid JSON file");
  sub->add_option("--catalog", c.catalog, "Catalog entry name (or 'all')");
}

void add_pair(CLI::App* sub, Config& c) {
  sub->add_option("--i", c.i, "First element");
  sub->add_option("--j", c.j, "Second element");
}

void add_weights(CLI::App* sub, Config& c) {
  sub->add_option("--weights", c.weights, "Weight file or 'unit'");
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--workers", c.workers, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", c.seed, "Seed for random sweeps");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact matroid correlation toolkit", "matcor"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify-examples", "Recompute the four published examples");
  verify->add_option("--only", c.only, "Run a single example");
  verify->add_flag("--corrupt-expected", c.corrupt, "Perturb the stored expectation (test mode)")
      ->group("");
  add_common(verify, c);

  auto* ratio = app.add_subcommand("ratio", "Correlation ratio of a pair");
  add_source(ratio, c);
  add_pair(ratio, c);
  add_weights(ratio, c);
  ratio->add_flag("--all-pairs", c.all_pairs, "Every eligible pair");
  add_common(ratio, c);

  auto* t1 = app.add_subcommand("theorem1", "Check the 2(1-1/d) bound");
  add_source(t1, c);
  add_pair(t1, c);
  add_weights(t1, c);
  t1->add_option("--sweep", c.sweep, "All eligible pairs, unit plus N random weight vectors");
  add_common(t1, c);

  auto* t2 = app.add_subcommand("theorem2", "Check the (1-1/d) bound for free pairs");
  add_source(t2, c);
  add_pair(t2, c);
  add_weights(t2, c);
  t2->add_flag("--free-extend", c.free_extend, "Extend by two free elements and use them");
  t2->add_option("--random", c.random, "Sweep N random binary matroids");
  add_common(t2, c);

  auto* mason = app.add_subcommand("mason", "Log-concavity forms of the independence profile");
  add_source(mason, c);
  mason->add_option("--random", c.random, "Sweep N random binary matroids");
  add_common(mason, c);

  auto* hodge = app.add_subcommand("hodge", "Certificate matrices H_ij and H_0");
  add_source(hodge, c);
  add_pair(hodge, c);
  add_weights(hodge, c);
  hodge->add_option("--sweep", c.sweep, "All pairs, unit plus N random weight vectors");
  add_common(hodge, c);

  auto* entropy = app.add_subcommand("entropy", "Entropy and concentration of the profile");
  add_source(entropy, c);
  add_common(entropy, c);

  auto* sp = app.add_subcommand("spike", "Spike family counts");
  sp->add_option("--p", c.p, "Field size");
  sp->add_option("--d", c.d, "Rank");
  sp->add_option("--m", c.m, "Use the transversal family with blocks of size m");
  sp->add_flag("--closed-form", c.closed_form, "Closed-form counts");
  sp->add_flag("--enumerate", c.enumerate, "Enumerated counts");
  sp->add_flag("--compare", c.compare, "Both, and require equality");
  add_common(sp, c);

  auto* alpha = app.add_subcommand("alpha", "Certified lower bound for alpha(M)");
  add_source(alpha, c);
  alpha->add_option("--strategy", c.strategy, "unit, grid or ascent")
      ->check(CLI::IsMember({"unit", "grid", "ascent"}));
  alpha->add_option("--levels", c.levels, "Grid ladder 1..2^levels");
  alpha->add_option("--tol", c.tol, "Ascent stopping tolerance");
  alpha->add_option("--max-iter", c.max_iter, "Maximum coordinate sweeps");
  add_common(alpha, c);

  auto* exp = app.add_subcommand("export", "Print matroid documents");
  add_source(exp, c);

  auto* list = app.add_subcommand("catalog", "List catalog names");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub->get_help_ptr() && sub->get_help_ptr()->count()) {
      out << sub->help();
      return 0;
    }
  }

  if (*verify) return cmd_verify_examples(c, out, err);
  if (*ratio) return cmd_ratio(c, out);
  if (*t1) return cmd_theorem1(c, out);
  if (*t2) return cmd_theorem2(c, out);
  if (*mason) return cmd_mason(c, out);
  if (*hodge) return cmd_hodge(c, out);
  if (*entropy) return cmd_entropy(c, out);
  if (*sp) return cmd_spike(c, out);
  if (*alpha) return cmd_alpha(c, out);
  if (*exp) return cmd_export(c, out);
  if (*list) {
    for (const auto& n : catalog_names()) out << n << '\n';
    return 0;
  }
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const CertificateError& e) {
    err << "certificate error: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace matcor
