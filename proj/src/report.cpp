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

#include "matcor/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>

#include "matcor/errors.hpp"

namespace matcor {
namespace {

constexpr FieldType S = FieldType::kString;
constexpr FieldType I = FieldType::kInt;
constexpr FieldType B = FieldType::kBool;
constexpr FieldType D = FieldType::kDouble;

const Schema kPartition = {{"s_both", S}, {"s_i_only", S}, {"s_j_only", S}, {"s_neither", S}};

Schema join(std::initializer_list<Schema> parts) {
  Schema out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const std::map<std::string, Schema>& schemas() {
  static const std::map<std::string, Schema> table = {
      {"verify-examples",
       join({{{"example", S}, {"n", I}, {"d", I}, {"i", I}, {"j", I}},
             kPartition,
             {{"total", S}, {"expected", S}, {"match", B}}})},
      {"ratio", join({{{"matroid", S}, {"i", I}, {"j", I}, {"d", I}, {"weights", S}},
                      kPartition,
                      {{"ratio", S}, {"ratio_approx", D}}})},
      {"theorem1", join({{{"matroid", S}, {"i", I}, {"j", I}, {"d", I}, {"weights", S}},
                         kPartition,
                         {{"ratio", S}, {"bound", S}, {"satisfied", B}, {"ratio_approx", D}}})},
      {"theorem2", join({{{"matroid", S}, {"i", I}, {"j", I}, {"d", I}, {"weights", S}},
                         kPartition,
                         {{"ratio", S}, {"bound", S}, {"satisfied", B}, {"free_pair", B}}})},
      {"mason", {{"matroid", S}, {"n", I}, {"d", I}, {"k", I}, {"i_prev", S}, {"i_k", S},
                 {"i_next", S}, {"holds_1", B}, {"holds_2", B}, {"holds_3", B},
                 {"margin_2", S}}},
      {"hodge", {{"matroid", S}, {"i", I}, {"j", I}, {"d", I}, {"weights", S},
                 {"hij", S}, {"hij_signature", S}, {"hij_det", S}, {"hij_det_formula", S},
                 {"h0", S}, {"h0_signature", S}, {"h0_det", S}, {"h0_det_formula", S},
                 {"passed", B}}},
      {"entropy", {{"matroid", S}, {"d", I}, {"distribution", S}, {"mean", S},
                   {"entropy", D}, {"lambda", D}, {"poisson_entropy", D}, {"upper_bound", D},
                   {"boolean", B}, {"lower_chain", D}, {"argmax", I}, {"max_prob", S},
                   {"concentration", B}, {"poisson_ok", B}, {"upper_ok", B}}},
      {"spike", join({{{"family", S}, {"p", I}, {"d", I}, {"source", S}},
                      kPartition,
                      {{"total", S}, {"ratio", S}, {"formula_ratio", S}, {"match", B}}})},
      {"alpha", {{"matroid", S}, {"strategy", S}, {"i", I}, {"j", I}, {"best_ratio", S},
                 {"best_ratio_approx", D}, {"weights", S}, {"evaluations", I}}},
  };
  return table;
}

bool has_type(const nlohmann::ordered_json& v, FieldType t) {
  switch (t) {
    case FieldType::kString:
      return v.is_string();
    case FieldType::kInt:
      return v.is_number_integer();
    case FieldType::kBool:
      return v.is_boolean();
    case FieldType::kDouble:
      return v.is_number_float();
  }
  return false;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw InputError("unknown format \"" + name + "\" (json, csv)");
}

const Schema& schema_for(const std::string& command) {
  auto it = schemas().find(command);
  if (it == schemas().end()) throw InputError("no record schema for \"" + command + "\"");
  return it->second;
}

std::vector<std::string> schema_commands() {
  std::vector<std::string> out;
  for (const auto& [k, v] : schemas()) out.push_back(k);
  return out;
}

void check_record(const Record& record, const Schema& schema) {
  if (!record.is_object() || record.size() != schema.size()) {
    throw InputError("record does not match its schema: " + record.dump());
  }
  std::size_t k = 0;
  for (auto it = record.begin(); it != record.end(); ++it, ++k) {
    if (it.key() != schema[k].name || !has_type(it.value(), schema[k].type)) {
      throw InputError("field \"" + it.key() + "\" does not match the schema");
    }
  }
}

std::string to_json_line(const Record& record) { return record.dump(); }

std::string csv_header(const Schema& schema) {
  std::string out;
  for (std::size_t k = 0; k < schema.size(); ++k) {
    if (k) out += ',';
    out += schema[k].name;
  }
  return out;
}

std::string to_csv_row(const Record& record, const Schema& schema) {
  check_record(record, schema);
  std::string out;
  for (std::size_t k = 0; k < schema.size(); ++k) {
    if (k) out += ',';
    const auto& v = record[schema[k].name];
    switch (schema[k].type) {
      case FieldType::kString:
        out += quote_csv(v.get<std::string>());
        break;
      case FieldType::kInt:
        out += std::to_string(v.get<long long>());
        break;
      case FieldType::kBool:
        out += v.get<bool>() ? "true" : "false";
        break;
      case FieldType::kDouble:
        out += format_double(v.get<double>());
        break;
    }
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        out.back() += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

Record from_csv_row(const std::string& line, const Schema& schema) {
  auto cells = split_csv(line);
  if (cells.size() != schema.size()) throw InputError("CSV row has the wrong number of cells");
  Record out = Record::object();
  for (std::size_t k = 0; k < schema.size(); ++k) {
    const std::string& c = cells[k];
    switch (schema[k].type) {
      case FieldType::kString:
        out[schema[k].name] = c;
        break;
      case FieldType::kInt:
        out[schema[k].name] = std::stoll(c);
        break;
      case FieldType::kBool:
        if (c != "true" && c != "false") throw InputError("bad boolean cell \"" + c + "\"");
        out[schema[k].name] = c == "true";
        break;
      case FieldType::kDouble:
        out[schema[k].name] = std::strtod(c.c_str(), nullptr);
        break;
    }
  }
  return out;
}

void RecordWriter::write(const Record& record) {
  check_record(record, schema_);
  if (format_ == OutputFormat::kJson) {
    out_ << to_json_line(record) << '\n';
    return;
  }
  if (!header_written_) {
    out_ << csv_header(schema_) << '\n';
    header_written_ = true;
  }
  out_ << to_csv_row(record, schema_) << '\n';
}

}  // namespace matcor
