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

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "matcor/prime_field.hpp"
#include "matcor/rational_matrix.hpp"
#include "matcor/subset_mask.hpp"

namespace matcor {

enum class ElementStatus { kLoop, kColoop, kFree, kOrdinary };

std::string to_string(ElementStatus status);

// Depth-first independence state over a growing set S. push(e) adds e and
// returns true when S + e is independent; otherwise S is unchanged and it
// returns false. pop() removes the most recently accepted element.
class IndependenceCursor {
 public:
  virtual ~IndependenceCursor() = default;
  virtual bool push(int e) = 0;
  virtual void pop() = 0;
};

// Representation behind a Matroid handle.
class MatroidImpl {
 public:
  virtual ~MatroidImpl() = default;
  virtual int size() const = 0;
  virtual int rank_of(const SubsetMask& s) const = 0;
  virtual std::unique_ptr<IndependenceCursor> cursor() const;
  // Short name of the representation ("linear_gfp", "derived", ...).
  virtual std::string kind() const = 0;
};

// Immutable, cheaply copyable matroid value exposing a rank oracle.
class Matroid {
 public:
  static Matroid linear_gfp(PrimeFieldMatrix matrix);
  static Matroid linear_rational(RationalMatrix matrix);
  static Matroid graphic(int vertices, std::vector<std::pair<int, int>> edges);
  static Matroid transversal(int n, std::vector<std::vector<int>> sets);
  static Matroid uniform(int r, int n);
  // Rank-d paving matroid on n elements whose rank-(d-1) hyperplanes of
  // size >= d are `forbidden`. Any two must share at most d - 2 elements.
  static Matroid paving(int n, int d, std::vector<std::vector<int>> forbidden);

  Matroid dual() const;
  Matroid delete_elements(const SubsetMask& s) const;
  Matroid contract(const SubsetMask& s) const;
  Matroid truncate(int k) const;
  // Appends t elements, each free in the matroid built so far.
  Matroid free_extend(int t) const;
  // Appends `copies` elements parallel to e.
  Matroid parallel(int e, int copies) const;
  // Elements of `other` follow those of *this.
  Matroid direct_sum(const Matroid& other) const;

  int size() const { return n_; }
  int rank() const { return d_; }
  int rank(const SubsetMask& s) const;
  bool is_independent(const SubsetMask& s) const;
  SubsetMask closure(const SubsetMask& s) const;
  ElementStatus element_status(int e) const;
  SubsetMask ground_set() const { return SubsetMask::full(n_); }

  std::unique_ptr<IndependenceCursor> cursor() const { return impl_->cursor(); }
  const MatroidImpl& impl() const { return *impl_; }
  std::string kind() const { return impl_->kind(); }

  explicit Matroid(std::shared_ptr<const MatroidImpl> impl);

 private:
  void check_subset(const SubsetMask& s) const;
  void check_element(int e) const;

  std::shared_ptr<const MatroidImpl> impl_;
  int n_;
  int d_;
};

// Which derived operator produced a handle, plus its operands. Exposed for
// serialization and for reports that trace elements back to the operand.
struct DerivedInfo {
  std::string op;  // dual, delete, contract, truncate, free_extend, parallel, direct_sum
  Matroid inner;
  std::vector<Matroid> others;  // direct_sum right operand
  std::vector<int> elements;    // delete / contract set
  int parameter = 0;            // truncate k, free_extend t, parallel copies
  int element = -1;             // parallel source element
  // For delete/contract: new index -> index in `inner`.
  std::vector<int> kept;
};

// Non-null only when the handle is a derived matroid.
const DerivedInfo* derived_info(const Matroid& m);

// For delete/contract handles: old index -> new index, -1 for removed.
std::vector<int> relabel_map(const Matroid& m);

// Accessors for serialization of the base representations.
const PrimeFieldMatrix* as_linear_gfp(const Matroid& m);
const RationalMatrix* as_linear_rational(const Matroid& m);
struct GraphicData {
  int vertices;
  std::vector<std::pair<int, int>> edges;
};
const GraphicData* as_graphic(const Matroid& m);
struct TransversalData {
  int n;
  std::vector<std::vector<int>> sets;
};
const TransversalData* as_transversal(const Matroid& m);
struct UniformData {
  int r;
  int n;
};
const UniformData* as_uniform(const Matroid& m);
struct PavingData {
  int n;
  int d;
  std::vector<std::vector<int>> forbidden;
};
const PavingData* as_paving(const Matroid& m);

}  // namespace matcor
