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

#include "json.hpp"
#include "matcor/bigint.hpp"
#include "matcor/matroid.hpp"

namespace matcor {

// Matroid documents:
//   {"type":"linear_gfp","p":2,"columns":[[...],...]}
//   {"type":"linear_q","columns":[["3/2",...],...]}
//   {"type":"graphic","vertices":8,"edges":[[0,1],...]}
//   {"type":"transversal","n":13,"sets":[[...],...]}
//   {"type":"uniform","r":2,"n":4}
//   {"type":"paving","n":24,"d":6,"forbidden":[[...],...]}
//   {"type":"derived","op":"truncate","k":6,"inner":{...}}
// Derived operators and their extra keys: dual; delete/contract "elements";
// truncate "k"; free_extend "t"; parallel "element","copies";
// direct_sum "other".
Matroid matroid_from_json(const nlohmann::json& doc);
nlohmann::json matroid_to_json(const Matroid& m);
Matroid load_matroid_file(const std::string& path);

// JSON array of integers or "p/q" strings, length n, all positive.
std::vector<BigRational> weights_from_json(const nlohmann::json& doc, int n);
std::vector<BigRational> load_weights_file(const std::string& path, int n);

}  // namespace matcor
