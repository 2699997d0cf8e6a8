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

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace matcor {

enum class FieldType { kString, kInt, kBool, kDouble };

struct Field {
  std::string name;
  FieldType type;
};
using Schema = std::vector<Field>;
using Record = nlohmann::ordered_json;

enum class OutputFormat { kJson, kCsv };
OutputFormat parse_format(const std::string& name);

// Record layout of every command's machine output. Throws InputError for an
// unknown command.
const Schema& schema_for(const std::string& command);
std::vector<std::string> schema_commands();

// Throws InputError when fields are missing, extra, out of order or mistyped.
void check_record(const Record& record, const Schema& schema);

std::string to_json_line(const Record& record);
std::string csv_header(const Schema& schema);
std::string to_csv_row(const Record& record, const Schema& schema);
Record from_csv_row(const std::string& line, const Schema& schema);
std::vector<std::string> split_csv(const std::string& line);

// Writes records as JSON lines or CSV (header before the first row).
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format, const Schema& schema)
      : out_(out), format_(format), schema_(schema) {}
  void write(const Record& record);

 private:
  std::ostream& out_;
  OutputFormat format_;
  const Schema& schema_;
  bool header_written_ = false;
};

}  // namespace matcor
