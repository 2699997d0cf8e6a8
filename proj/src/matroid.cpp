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

#include "matcor/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "matcor/errors.hpp"

namespace matcor {
namespace {

void check_ground_size(int n) {
  if (n < 0) throw InputError("negative ground-set size");
  if (n > kMaxGroundSize) {
    throw CapacityError("ground set of size " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxGroundSize));
  }
}

// Rank-oracle fallback: one oracle call per push.
class OracleCursor final : public IndependenceCursor {
 public:
  explicit OracleCursor(const MatroidImpl& impl) : impl_(impl) {}
  bool push(int e) override {
    SubsetMask next = stack_.empty() ? SubsetMask{} : stack_.back();
    next.set(e);
    int size = static_cast<int>(stack_.size()) + 1;
    if (impl_.rank_of(next) != size) return false;
    stack_.push_back(next);
    return true;
  }
  void pop() override { stack_.pop_back(); }

 private:
  const MatroidImpl& impl_;
  std::vector<SubsetMask> stack_;
};

// ---------------------------------------------------------------- linear

class LinearGfpImpl final : public MatroidImpl {
 public:
  explicit LinearGfpImpl(PrimeFieldMatrix matrix) : matrix_(std::move(matrix)) {
    check_ground_size(matrix_.cols());
  }
  int size() const override { return matrix_.cols(); }
  int rank_of(const SubsetMask& s) const override { return rank_mod_p(matrix_, s); }
  std::string kind() const override { return "linear_gfp"; }
  std::unique_ptr<IndependenceCursor> cursor() const override;
  const PrimeFieldMatrix& matrix() const { return matrix_; }

 private:
  PrimeFieldMatrix matrix_;
};

class Gf2Cursor final : public IndependenceCursor {
 public:
  explicit Gf2Cursor(const PrimeFieldMatrix& m) : m_(m), echelon_(m.words_per_column()) {}
  bool push(int e) override { return echelon_.push(m_.packed_column(e)); }
  void pop() override { echelon_.pop(); }

 private:
  const PrimeFieldMatrix& m_;
  Gf2Echelon echelon_;
};

class GfpCursor final : public IndependenceCursor {
 public:
  explicit GfpCursor(const PrimeFieldMatrix& m) : m_(m), echelon_(m.arith(), m.rows()) {}
  bool push(int e) override { return echelon_.push(m_.column(e)); }
  void pop() override { echelon_.pop(); }

 private:
  const PrimeFieldMatrix& m_;
  GfpEchelon echelon_;
};

std::unique_ptr<IndependenceCursor> LinearGfpImpl::cursor() const {
  if (matrix_.modulus() == 2) return std::make_unique<Gf2Cursor>(matrix_);
  return std::make_unique<GfpCursor>(matrix_);
}

class LinearRationalImpl final : public MatroidImpl {
 public:
  explicit LinearRationalImpl(RationalMatrix matrix) : matrix_(std::move(matrix)) {
    check_ground_size(matrix_.cols());
  }
  int size() const override { return matrix_.cols(); }
  int rank_of(const SubsetMask& s) const override { return rank_rational(matrix_, s); }
  std::string kind() const override { return "linear_q"; }
  std::unique_ptr<IndependenceCursor> cursor() const override;
  const RationalMatrix& matrix() const { return matrix_; }

 private:
  RationalMatrix matrix_;
};

class RationalCursor final : public IndependenceCursor {
 public:
  explicit RationalCursor(const RationalMatrix& m) : m_(m), echelon_(m.rows()) {}
  bool push(int e) override { return echelon_.push(m_.integer_column(e)); }
  void pop() override { echelon_.pop(); }

 private:
  const RationalMatrix& m_;
  RationalEchelon echelon_;
};

std::unique_ptr<IndependenceCursor> LinearRationalImpl::cursor() const {
  return std::make_unique<RationalCursor>(matrix_);
}

// ---------------------------------------------------------------- graphic

class GraphicImpl final : public MatroidImpl {
 public:
  explicit GraphicImpl(GraphicData data) : data_(std::move(data)) {
    if (data_.vertices < 0) throw InputError("negative vertex count");
    check_ground_size(static_cast<int>(data_.edges.size()));
    for (std::size_t k = 0; k < data_.edges.size(); ++k) {
      auto [u, v] = data_.edges[k];
      if (u < 0 || v < 0 || u >= data_.vertices || v >= data_.vertices) {
        throw InputError("edge " + std::to_string(k) + " references a missing vertex");
      }
    }
  }
  int size() const override { return static_cast<int>(data_.edges.size()); }
  int rank_of(const SubsetMask& s) const override;
  std::string kind() const override { return "graphic"; }
  std::unique_ptr<IndependenceCursor> cursor() const override;
  const GraphicData& data() const { return data_; }

 private:
  GraphicData data_;
};

// Union by size without path compression, so unions can be rolled back.
class ForestCursor final : public IndependenceCursor {
 public:
  explicit ForestCursor(const GraphicData& g)
      : g_(g), parent_(g.vertices), size_(g.vertices, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  bool push(int e) override {
    auto [u, v] = g_.edges[e];
    int a = find(u), b = find(v);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void pop() override {
    int b = history_.back();
    history_.pop_back();
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  const GraphicData& g_;
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

int GraphicImpl::rank_of(const SubsetMask& s) const {
  ForestCursor forest(data_);
  int rank = 0;
  for (int e : s.elements()) rank += forest.push(e) ? 1 : 0;
  return rank;
}

std::unique_ptr<IndependenceCursor> GraphicImpl::cursor() const {
  return std::make_unique<ForestCursor>(data_);
}

// ------------------------------------------------------------- transversal

class TransversalImpl final : public MatroidImpl {
 public:
  explicit TransversalImpl(TransversalData data) : data_(std::move(data)) {
    check_ground_size(data_.n);
    incidence_.assign(data_.n, {});
    for (std::size_t k = 0; k < data_.sets.size(); ++k) {
      for (int e : data_.sets[k]) {
        if (e < 0 || e >= data_.n) {
          throw InputError("set " + std::to_string(k) + " contains out-of-range element " +
                           std::to_string(e));
        }
        auto& inc = incidence_[e];
        if (std::find(inc.begin(), inc.end(), static_cast<int>(k)) == inc.end()) {
          inc.push_back(static_cast<int>(k));
        }
      }
    }
  }
  int size() const override { return data_.n; }
  int rank_of(const SubsetMask& s) const override;
  std::string kind() const override { return "transversal"; }
  std::unique_ptr<IndependenceCursor> cursor() const override;
  const TransversalData& data() const { return data_; }
  const std::vector<std::vector<int>>& incidence() const { return incidence_; }

 private:
  TransversalData data_;
  std::vector<std::vector<int>> incidence_;  // element -> sets containing it
};

// Augmenting-path matching of the current elements into distinct sets.
class MatchingCursor final : public IndependenceCursor {
 public:
  explicit MatchingCursor(const TransversalImpl& t)
      : t_(t), owner_(t.data().sets.size(), -1), seen_(t.data().sets.size(), 0) {}
  bool push(int e) override {
    saved_.push_back(owner_);
    ++stamp_;
    if (augment(e)) return true;
    owner_ = std::move(saved_.back());
    saved_.pop_back();
    return false;
  }
  void pop() override {
    owner_ = std::move(saved_.back());
    saved_.pop_back();
  }

 private:
  bool augment(int e) {
    for (int set : t_.incidence()[e]) {
      if (seen_[set] == stamp_) continue;
      seen_[set] = stamp_;
      if (owner_[set] < 0 || augment(owner_[set])) {
        owner_[set] = e;
        return true;
      }
    }
    return false;
  }
  const TransversalImpl& t_;
  std::vector<int> owner_;  // set -> element representing it, or -1
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  std::vector<std::vector<int>> saved_;
};

int TransversalImpl::rank_of(const SubsetMask& s) const {
  MatchingCursor matching(*this);
  int rank = 0;
  for (int e : s.elements()) rank += matching.push(e) ? 1 : 0;
  return rank;
}

std::unique_ptr<IndependenceCursor> TransversalImpl::cursor() const {
  return std::make_unique<MatchingCursor>(*this);
}

// ----------------------------------------------------------------- uniform

class UniformImpl final : public MatroidImpl {
 public:
  explicit UniformImpl(UniformData data) : data_(data) {
    check_ground_size(data_.n);
    if (data_.r < 0 || data_.r > data_.n) {
      throw InputError("uniform matroid needs 0 <= r <= n");
    }
  }
  int size() const override { return data_.n; }
  int rank_of(const SubsetMask& s) const override { return std::min(s.count(), data_.r); }
  std::string kind() const override { return "uniform"; }
  std::unique_ptr<IndependenceCursor> cursor() const override;
  const UniformData& data() const { return data_; }

 private:
  UniformData data_;
};

class CountingCursor final : public IndependenceCursor {
 public:
  explicit CountingCursor(int cap) : cap_(cap) {}
  bool push(int) override {
    if (size_ >= cap_) return false;
    ++size_;
    return true;
  }
  void pop() override { --size_; }

 private:
  int cap_;
  int size_ = 0;
};

std::unique_ptr<IndependenceCursor> UniformImpl::cursor() const {
  return std::make_unique<CountingCursor>(data_.r);
}

// ------------------------------------------------------------------ paving

class PavingImpl final : public MatroidImpl {
 public:
  explicit PavingImpl(PavingData data) : data_(std::move(data)) {
    check_ground_size(data_.n);
    if (data_.d < 1 || data_.d > data_.n) throw InputError("paving matroid needs 1 <= d <= n");
    const std::size_t blocks = data_.forbidden.size();
    words_ = std::max<std::size_t>(1, (blocks + 63) / 64);
    membership_.assign(static_cast<std::size_t>(data_.n) * words_, 0);
    masks_.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      SubsetMask mask;
      for (int e : data_.forbidden[b]) {
        if (e < 0 || e >= data_.n) {
          throw InputError("forbidden set " + std::to_string(b) +
                           " contains out-of-range element " + std::to_string(e));
        }
        mask.set(e);
      }
      if (mask.count() < data_.d) {
        throw InputError("forbidden set " + std::to_string(b) + " has fewer than d elements");
      }
      for (int e : mask.elements()) membership_[e * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
      masks_.push_back(mask);
    }
    for (std::size_t a = 0; a < blocks; ++a) {
      for (std::size_t b = a + 1; b < blocks; ++b) {
        if ((masks_[a] & masks_[b]).count() > data_.d - 2) {
          throw InputError("forbidden sets " + std::to_string(a) + " and " + std::to_string(b) +
                           " share more than d - 2 elements");
        }
      }
    }
  }
  int size() const override { return data_.n; }
  int rank_of(const SubsetMask& s) const override {
    int k = s.count();
    if (k < data_.d) return k;
    for (const auto& block : masks_) {
      if (s.is_subset_of(block)) return data_.d - 1;
    }
    return data_.d;
  }
  std::string kind() const override { return "paving"; }
  std::unique_ptr<IndependenceCursor> cursor() const override;
  const PavingData& data() const { return data_; }
  std::size_t words() const { return words_; }
  const std::uint64_t* membership(int e) const { return membership_.data() + e * words_; }

 private:
  PavingData data_;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> membership_;  // element -> bitset of blocks containing it
  std::vector<SubsetMask> masks_;
};

// Sets below size d are independent; a d-set is dependent iff the blocks
// containing each of its elements have a common member.
class PavingCursor final : public IndependenceCursor {
 public:
  explicit PavingCursor(const PavingImpl& p) : p_(p), w_(p.words()) {
    common_.assign(w_, ~std::uint64_t{0});
  }
  bool push(int e) override {
    const int size = static_cast<int>(common_.size() / w_) - 1;
    if (size >= p_.data().d) return false;
    const std::uint64_t* mem = p_.membership(e);
    const std::size_t base = common_.size();
    common_.resize(base + w_);
    std::uint64_t any = 0;
    for (std::size_t w = 0; w < w_; ++w) {
      common_[base + w] = common_[base - w_ + w] & mem[w];
      any |= common_[base + w];
    }
    if (size + 1 == p_.data().d && any) {
      common_.resize(base);
      return false;
    }
    return true;
  }
  void pop() override { common_.resize(common_.size() - w_); }

 private:
  const PavingImpl& p_;
  std::size_t w_;
  std::vector<std::uint64_t> common_;  // one bitset per depth
};

std::unique_ptr<IndependenceCursor> PavingImpl::cursor() const {
  return std::make_unique<PavingCursor>(*this);
}

// ----------------------------------------------------------------- derived

class DerivedImpl : public MatroidImpl {
 public:
  explicit DerivedImpl(DerivedInfo info) : info_(std::move(info)) {}
  std::string kind() const override { return "derived"; }
  const DerivedInfo& info() const { return info_; }

 protected:
  const Matroid& inner() const { return info_.inner; }
  DerivedInfo info_;
};

class DualImpl final : public DerivedImpl {
 public:
  using DerivedImpl::DerivedImpl;
  int size() const override { return inner().size(); }
  int rank_of(const SubsetMask& s) const override {
    return s.count() - inner().rank() + inner().rank(inner().ground_set() - s);
  }
};

class MappedCursor final : public IndependenceCursor {
 public:
  MappedCursor(std::unique_ptr<IndependenceCursor> inner, const std::vector<int>& map)
      : inner_(std::move(inner)), map_(map) {}
  bool push(int e) override { return inner_->push(map_[e]); }
  void pop() override { inner_->pop(); }

 private:
  std::unique_ptr<IndependenceCursor> inner_;
  const std::vector<int>& map_;
};

class DeleteImpl final : public DerivedImpl {
 public:
  using DerivedImpl::DerivedImpl;
  int size() const override { return static_cast<int>(info_.kept.size()); }
  int rank_of(const SubsetMask& s) const override { return inner().rank(lift(s)); }
  std::unique_ptr<IndependenceCursor> cursor() const override {
    return std::make_unique<MappedCursor>(inner().cursor(), info_.kept);
  }
  SubsetMask lift(const SubsetMask& s) const {
    SubsetMask out;
    for (int e : s.elements()) out.set(info_.kept[e]);
    return out;
  }
};

class ContractImpl final : public DerivedImpl {
 public:
  explicit ContractImpl(DerivedInfo info) : DerivedImpl(std::move(info)) {
    contracted_ = SubsetMask::from_elements(info_.elements);
    contracted_rank_ = inner().rank(contracted_);
  }
  int size() const override { return static_cast<int>(info_.kept.size()); }
  int rank_of(const SubsetMask& s) const override {
    SubsetMask lifted = contracted_;
    for (int e : s.elements()) lifted.set(info_.kept[e]);
    return inner().rank(lifted) - contracted_rank_;
  }
  std::unique_ptr<IndependenceCursor> cursor() const override {
    auto base = inner().cursor();
    // Preload a basis of the contracted set.
    for (int e : info_.elements) base->push(e);
    return std::make_unique<MappedCursor>(std::move(base), info_.kept);
  }

 private:
  SubsetMask contracted_;
  int contracted_rank_ = 0;
};

class TruncateImpl final : public DerivedImpl {
 public:
  using DerivedImpl::DerivedImpl;
  int size() const override { return inner().size(); }
  int rank_of(const SubsetMask& s) const override {
    return std::min(inner().rank(s), info_.parameter);
  }
  std::unique_ptr<IndependenceCursor> cursor() const override;
};

class CappedCursor final : public IndependenceCursor {
 public:
  CappedCursor(std::unique_ptr<IndependenceCursor> inner, int cap)
      : inner_(std::move(inner)), cap_(cap) {}
  bool push(int e) override {
    if (size_ >= cap_ || !inner_->push(e)) return false;
    ++size_;
    return true;
  }
  void pop() override {
    inner_->pop();
    --size_;
  }

 private:
  std::unique_ptr<IndependenceCursor> inner_;
  int cap_;
  int size_ = 0;
};

std::unique_ptr<IndependenceCursor> TruncateImpl::cursor() const {
  return std::make_unique<CappedCursor>(inner().cursor(), info_.parameter);
}

// S + F' (F' among the new elements) is independent iff S is independent in
// the operand and |S| + |F'| <= d.
class FreeExtendImpl final : public DerivedImpl {
 public:
  using DerivedImpl::DerivedImpl;
  int size() const override { return inner().size() + info_.parameter; }
  int rank_of(const SubsetMask& s) const override {
    const int base = inner().size();
    SubsetMask old = s & SubsetMask::full(base);
    int added = s.count() - old.count();
    return std::min(inner().rank(old) + added, inner().rank());
  }
  std::unique_ptr<IndependenceCursor> cursor() const override;
};

class FreeCursor final : public IndependenceCursor {
 public:
  FreeCursor(std::unique_ptr<IndependenceCursor> inner, int base, int rank)
      : inner_(std::move(inner)), base_(base), rank_(rank) {}
  bool push(int e) override {
    if (static_cast<int>(stack_.size()) >= rank_) return false;
    bool old = e < base_;
    if (old && !inner_->push(e)) return false;
    stack_.push_back(old);
    return true;
  }
  void pop() override {
    if (stack_.back()) inner_->pop();
    stack_.pop_back();
  }

 private:
  std::unique_ptr<IndependenceCursor> inner_;
  int base_;
  int rank_;
  std::vector<bool> stack_;
};

std::unique_ptr<IndependenceCursor> FreeExtendImpl::cursor() const {
  return std::make_unique<FreeCursor>(inner().cursor(), inner().size(), inner().rank());
}

class ParallelImpl final : public DerivedImpl {
 public:
  explicit ParallelImpl(DerivedInfo info) : DerivedImpl(std::move(info)) {
    const int base = inner().size();
    source_.resize(base + info_.parameter);
    std::iota(source_.begin(), source_.begin() + base, 0);
    std::fill(source_.begin() + base, source_.end(), info_.element);
  }
  int size() const override { return static_cast<int>(source_.size()); }
  int rank_of(const SubsetMask& s) const override {
    SubsetMask lifted;
    for (int e : s.elements()) lifted.set(source_[e]);
    return inner().rank(lifted);
  }
  std::unique_ptr<IndependenceCursor> cursor() const override;

 private:
  std::vector<int> source_;  // element -> operand element it copies
};

class ParallelCursor final : public IndependenceCursor {
 public:
  ParallelCursor(std::unique_ptr<IndependenceCursor> inner, const std::vector<int>& source,
                 int base)
      : inner_(std::move(inner)), source_(source), used_(base, 0) {}
  bool push(int e) override {
    int u = source_[e];
    if (used_[u] || !inner_->push(u)) return false;
    used_[u] = 1;
    stack_.push_back(u);
    return true;
  }
  void pop() override {
    used_[stack_.back()] = 0;
    stack_.pop_back();
    inner_->pop();
  }

 private:
  std::unique_ptr<IndependenceCursor> inner_;
  const std::vector<int>& source_;
  std::vector<char> used_;
  std::vector<int> stack_;
};

std::unique_ptr<IndependenceCursor> ParallelImpl::cursor() const {
  return std::make_unique<ParallelCursor>(inner().cursor(), source_, inner().size());
}

class DirectSumImpl final : public DerivedImpl {
 public:
  using DerivedImpl::DerivedImpl;
  int size() const override { return inner().size() + other().size(); }
  int rank_of(const SubsetMask& s) const override {
    const int base = inner().size();
    SubsetMask left, right;
    for (int e : s.elements()) {
      if (e < base) {
        left.set(e);
      } else {
        right.set(e - base);
      }
    }
    return inner().rank(left) + other().rank(right);
  }
  std::unique_ptr<IndependenceCursor> cursor() const override;

 private:
  const Matroid& other() const { return info_.others.front(); }
};

class SumCursor final : public IndependenceCursor {
 public:
  SumCursor(std::unique_ptr<IndependenceCursor> left, std::unique_ptr<IndependenceCursor> right,
            int base)
      : left_(std::move(left)), right_(std::move(right)), base_(base) {}
  bool push(int e) override {
    bool is_left = e < base_;
    bool ok = is_left ? left_->push(e) : right_->push(e - base_);
    if (ok) stack_.push_back(is_left);
    return ok;
  }
  void pop() override {
    (stack_.back() ? left_ : right_)->pop();
    stack_.pop_back();
  }

 private:
  std::unique_ptr<IndependenceCursor> left_, right_;
  int base_;
  std::vector<bool> stack_;
};

std::unique_ptr<IndependenceCursor> DirectSumImpl::cursor() const {
  return std::make_unique<SumCursor>(inner().cursor(), other().cursor(), inner().size());
}

std::vector<int> complement_of(const SubsetMask& s, int n) {
  std::vector<int> kept;
  for (int e = 0; e < n; ++e) {
    if (!s.test(e)) kept.push_back(e);
  }
  return kept;
}

}  // namespace

std::string to_string(ElementStatus status) {
  switch (status) {
    case ElementStatus::kLoop:
      return "loop";
    case ElementStatus::kColoop:
      return "coloop";
    case ElementStatus::kFree:
      return "free";
    case ElementStatus::kOrdinary:
      return "ordinary";
  }
  return "unknown";
}

std::unique_ptr<IndependenceCursor> MatroidImpl::cursor() const {
  return std::make_unique<OracleCursor>(*this);
}

Matroid::Matroid(std::shared_ptr<const MatroidImpl> impl) : impl_(std::move(impl)) {
  n_ = impl_->size();
  check_ground_size(n_);
  d_ = impl_->rank_of(SubsetMask::full(n_));
}

Matroid Matroid::linear_gfp(PrimeFieldMatrix matrix) {
  return Matroid(std::make_shared<LinearGfpImpl>(std::move(matrix)));
}

Matroid Matroid::linear_rational(RationalMatrix matrix) {
  return Matroid(std::make_shared<LinearRationalImpl>(std::move(matrix)));
}

Matroid Matroid::graphic(int vertices, std::vector<std::pair<int, int>> edges) {
  return Matroid(std::make_shared<GraphicImpl>(GraphicData{vertices, std::move(edges)}));
}

Matroid Matroid::transversal(int n, std::vector<std::vector<int>> sets) {
  return Matroid(std::make_shared<TransversalImpl>(TransversalData{n, std::move(sets)}));
}

Matroid Matroid::uniform(int r, int n) {
  return Matroid(std::make_shared<UniformImpl>(UniformData{r, n}));
}

Matroid Matroid::paving(int n, int d, std::vector<std::vector<int>> forbidden) {
  return Matroid(std::make_shared<PavingImpl>(PavingData{n, d, std::move(forbidden)}));
}

Matroid Matroid::dual() const {
  return Matroid(std::make_shared<DualImpl>(DerivedInfo{"dual", *this, {}, {}, 0, -1, {}}));
}

Matroid Matroid::delete_elements(const SubsetMask& s) const {
  check_subset(s);
  return Matroid(std::make_shared<DeleteImpl>(
      DerivedInfo{"delete", *this, {}, s.elements(), 0, -1, complement_of(s, n_)}));
}

Matroid Matroid::contract(const SubsetMask& s) const {
  check_subset(s);
  return Matroid(std::make_shared<ContractImpl>(
      DerivedInfo{"contract", *this, {}, s.elements(), 0, -1, complement_of(s, n_)}));
}

Matroid Matroid::truncate(int k) const {
  if (k < 0 || k > d_) {
    throw InputError("truncation rank " + std::to_string(k) + " outside 0.." +
                     std::to_string(d_));
  }
  return Matroid(std::make_shared<TruncateImpl>(DerivedInfo{"truncate", *this, {}, {}, k, -1, {}}));
}

Matroid Matroid::free_extend(int t) const {
  if (t < 0) throw InputError("free extension count must be nonnegative");
  check_ground_size(n_ + t);
  return Matroid(
      std::make_shared<FreeExtendImpl>(DerivedInfo{"free_extend", *this, {}, {}, t, -1, {}}));
}

Matroid Matroid::parallel(int e, int copies) const {
  check_element(e);
  if (copies < 1) throw InputError("parallel copies must be at least 1");
  check_ground_size(n_ + copies);
  return Matroid(
      std::make_shared<ParallelImpl>(DerivedInfo{"parallel", *this, {}, {}, copies, e, {}}));
}

Matroid Matroid::direct_sum(const Matroid& other) const {
  check_ground_size(n_ + other.size());
  return Matroid(
      std::make_shared<DirectSumImpl>(DerivedInfo{"direct_sum", *this, {other}, {}, 0, -1, {}}));
}

void Matroid::check_subset(const SubsetMask& s) const {
  if (s.span() > n_) {
    throw InputError("subset " + s.to_string() + " is not inside a ground set of size " +
                     std::to_string(n_));
  }
}

void Matroid::check_element(int e) const {
  if (e < 0 || e >= n_) {
    throw InputError("element " + std::to_string(e) + " is not in a ground set of size " +
                     std::to_string(n_));
  }
}

int Matroid::rank(const SubsetMask& s) const {
  check_subset(s);
  return impl_->rank_of(s);
}

bool Matroid::is_independent(const SubsetMask& s) const { return rank(s) == s.count(); }

SubsetMask Matroid::closure(const SubsetMask& s) const {
  int base = rank(s);
  SubsetMask out = s;
  for (int e = 0; e < n_; ++e) {
    if (!s.test(e) && impl_->rank_of(s.with(e)) == base) out.set(e);
  }
  return out;
}

namespace {

// True when some independent (target)-subset of the ground set minus e
// fails to stay independent after adding e.
bool blocks_free_element(IndependenceCursor& cursor, int n, int e, int start, int depth,
                         int target) {
  if (depth == target) {
    if (!cursor.push(e)) return true;
    cursor.pop();
    return false;
  }
  for (int f = start; f < n; ++f) {
    if (f == e || n - f < target - depth) continue;
    if (!cursor.push(f)) continue;
    bool hit = blocks_free_element(cursor, n, e, f + 1, depth + 1, target);
    cursor.pop();
    if (hit) return true;
  }
  return false;
}

}  // namespace

ElementStatus Matroid::element_status(int e) const {
  check_element(e);
  if (impl_->rank_of(SubsetMask{e}) == 0) return ElementStatus::kLoop;
  if (impl_->rank_of(ground_set().without(e)) == d_ - 1) return ElementStatus::kColoop;
  if (n_ > kMaxEnumerationSize) {
    throw CapacityError("free-element test needs n <= " + std::to_string(kMaxEnumerationSize));
  }
  auto c = cursor();
  return blocks_free_element(*c, n_, e, 0, 0, d_ - 1) ? ElementStatus::kOrdinary
                                                        : ElementStatus::kFree;
}

const DerivedInfo* derived_info(const Matroid& m) {
  auto* d = dynamic_cast<const DerivedImpl*>(&m.impl());
  return d ? &d->info() : nullptr;
}

std::vector<int> relabel_map(const Matroid& m) {
  const DerivedInfo* info = derived_info(m);
  if (!info || (info->op != "delete" && info->op != "contract")) {
    throw InputError("relabel map exists only for delete/contract handles");
  }
  std::vector<int> out(info->inner.size(), -1);
  for (std::size_t k = 0; k < info->kept.size(); ++k) out[info->kept[k]] = static_cast<int>(k);
  return out;
}

const PrimeFieldMatrix* as_linear_gfp(const Matroid& m) {
  auto* p = dynamic_cast<const LinearGfpImpl*>(&m.impl());
  return p ? &p->matrix() : nullptr;
}
const RationalMatrix* as_linear_rational(const Matroid& m) {
  auto* p = dynamic_cast<const LinearRationalImpl*>(&m.impl());
  return p ? &p->matrix() : nullptr;
}
const GraphicData* as_graphic(const Matroid& m) {
  auto* p = dynamic_cast<const GraphicImpl*>(&m.impl());
  return p ? &p->data() : nullptr;
}
const TransversalData* as_transversal(const Matroid& m) {
  auto* p = dynamic_cast<const TransversalImpl*>(&m.impl());
  return p ? &p->data() : nullptr;
}
const UniformData* as_uniform(const Matroid& m) {
  auto* p = dynamic_cast<const UniformImpl*>(&m.impl());
  return p ? &p->data() : nullptr;
}
const PavingData* as_paving(const Matroid& m) {
  auto* p = dynamic_cast<const PavingImpl*>(&m.impl());
  return p ? &p->data() : nullptr;
}

}  // namespace matcor
