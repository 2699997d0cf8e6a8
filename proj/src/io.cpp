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

#include "matcor/io.hpp"

#include <fstream>
#include <sstream>

#include "matcor/errors.hpp"

namespace matcor {
namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string("matroid document is missing \"") + key + "\"");
  }
  return doc.at(key);
}

int require_int(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<std::vector<int>> int_lists(const json& v, const char* key) {
  if (!v.is_array()) throw InputError(std::string("\"") + key + "\" must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : v) {
    if (!row.is_array()) throw InputError(std::string("\"") + key + "\" rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InputError(std::string("\"") + key + "\" entries must be integers");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

BigRational rational_from_json(const json& v) {
  if (v.is_number_integer()) return BigRational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("expected an integer or a \"p/q\" string, got " + v.dump());
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

Matroid parse_matroid(const json& doc) {
  const std::string type = require(doc, "type").get<std::string>();
  if (type == "linear_gfp") {
    int p = require_int(doc, "p");
    if (p < 2) throw ConfigError("modulus must be at least 2");
    const json& cols = require(doc, "columns");
    std::vector<std::vector<std::int64_t>> columns;
    for (const auto& c : cols) columns.push_back(c.get<std::vector<std::int64_t>>());
    int rows = doc.contains("rows") ? require_int(doc, "rows")
                                    : (columns.empty() ? 0 : static_cast<int>(columns[0].size()));
    return Matroid::linear_gfp(PrimeFieldMatrix(static_cast<std::uint32_t>(p), rows, columns));
  }
  if (type == "linear_q") {
    const json& cols = require(doc, "columns");
    std::vector<std::vector<BigRational>> columns;
    for (const auto& c : cols) {
      std::vector<BigRational> col;
      for (const auto& x : c) col.push_back(rational_from_json(x));
      columns.push_back(std::move(col));
    }
    int rows = doc.contains("rows") ? require_int(doc, "rows")
                                    : (columns.empty() ? 0 : static_cast<int>(columns[0].size()));
    return Matroid::linear_rational(RationalMatrix(rows, columns));
  }
  if (type == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : int_lists(require(doc, "edges"), "edges")) {
      if (e.size() != 2) throw InputError("graphic edges must have two endpoints");
      edges.emplace_back(e[0], e[1]);
    }
    return Matroid::graphic(require_int(doc, "vertices"), std::move(edges));
  }
  if (type == "transversal") {
    return Matroid::transversal(require_int(doc, "n"), int_lists(require(doc, "sets"), "sets"));
  }
  if (type == "uniform") {
    return Matroid::uniform(require_int(doc, "r"), require_int(doc, "n"));
  }
  if (type == "paving") {
    return Matroid::paving(require_int(doc, "n"), require_int(doc, "d"),
                           int_lists(require(doc, "forbidden"), "forbidden"));
  }
  if (type == "derived") {
    const std::string op = require(doc, "op").get<std::string>();
    Matroid inner = parse_matroid(require(doc, "inner"));
    if (op == "dual") return inner.dual();
    if (op == "delete" || op == "contract") {
      std::vector<int> elems = require(doc, "elements").get<std::vector<int>>();
      SubsetMask s;
      for (int e : elems) {
        if (e < 0 || e >= inner.size()) throw InputError("element " + std::to_string(e) + " out of range");
        s.set(e);
      }
      return op == "delete" ? inner.delete_elements(s) : inner.contract(s);
    }
    if (op == "truncate") return inner.truncate(require_int(doc, "k"));
    if (op == "free_extend") return inner.free_extend(require_int(doc, "t"));
    if (op == "parallel") return inner.parallel(require_int(doc, "element"), require_int(doc, "copies"));
    if (op == "direct_sum") return inner.direct_sum(parse_matroid(require(doc, "other")));
    throw InputError("unknown derived operator \"" + op + "\"");
  }
  throw InputError("unknown matroid type \"" + type + "\"");
}

}  // namespace

Matroid matroid_from_json(const json& doc) {
  try {
    return parse_matroid(doc);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed matroid document: ") + e.what());
  }
}

json matroid_to_json(const Matroid& m) {
  if (const auto* g = as_linear_gfp(m)) {
    json cols = json::array();
    for (int c = 0; c < g->cols(); ++c) {
      auto col = g->column(c);
      cols.push_back(std::vector<std::uint32_t>(col.begin(), col.end()));
    }
    return {{"type", "linear_gfp"}, {"p", g->modulus()}, {"rows", g->rows()}, {"columns", cols}};
  }
  if (const auto* q = as_linear_rational(m)) {
    json cols = json::array();
    for (int c = 0; c < q->cols(); ++c) {
      json col = json::array();
      for (int r = 0; r < q->rows(); ++r) col.push_back(to_ratio_string(q->at(r, c)));
      cols.push_back(col);
    }
    return {{"type", "linear_q"}, {"rows", q->rows()}, {"columns", cols}};
  }
  if (const auto* g = as_graphic(m)) {
    json edges = json::array();
    for (auto [u, v] : g->edges) edges.push_back({u, v});
    return {{"type", "graphic"}, {"vertices", g->vertices}, {"edges", edges}};
  }
  if (const auto* t = as_transversal(m)) {
    return {{"type", "transversal"}, {"n", t->n}, {"sets", t->sets}};
  }
  if (const auto* u = as_uniform(m)) {
    return {{"type", "uniform"}, {"r", u->r}, {"n", u->n}};
  }
  if (const auto* p = as_paving(m)) {
    return {{"type", "paving"}, {"n", p->n}, {"d", p->d}, {"forbidden", p->forbidden}};
  }
  if (const auto* info = derived_info(m)) {
    json out = {{"type", "derived"}, {"op", info->op}};
    if (info->op == "delete" || info->op == "contract") out["elements"] = info->elements;
    if (info->op == "truncate") out["k"] = info->parameter;
    if (info->op == "free_extend") out["t"] = info->parameter;
    if (info->op == "parallel") {
      out["element"] = info->element;
      out["copies"] = info->parameter;
    }
    out["inner"] = matroid_to_json(info->inner);
    if (info->op == "direct_sum") out["other"] = matroid_to_json(info->others.front());
    return out;
  }
  throw InputError("matroid representation \"" + m.kind() + "\" is not serializable");
}

Matroid load_matroid_file(const std::string& path) {
  return matroid_from_json(read_json_file(path));
}

std::vector<BigRational> weights_from_json(const json& doc, int n) {
  if (!doc.is_array()) throw InputError("weights must be a JSON array");
  if (static_cast<int>(doc.size()) != n) {
    throw InputError("expected " + std::to_string(n) + " weights, got " +
                     std::to_string(doc.size()));
  }
  std::vector<BigRational> out;
  out.reserve(n);
  for (const auto& v : doc) {
    BigRational w = rational_from_json(v);
    if (w <= 0) throw InputError("weights must be positive, got " + to_ratio_string(w));
    out.push_back(w);
  }
  return out;
}

std::vector<BigRational> load_weights_file(const std::string& path, int n) {
  return weights_from_json(read_json_file(path), n);
}

}  // namespace matcor
