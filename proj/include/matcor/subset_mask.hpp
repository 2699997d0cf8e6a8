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

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace matcor {

// Hard cap on ground-set size for every matroid handle.
inline constexpr int kMaxGroundSize = 128;
// Cap for exhaustive enumeration (bases, profiles, partitions).
inline constexpr int kMaxEnumerationSize = 28;

// Fixed-width bitset over a ground set of at most kMaxGroundSize elements.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  SubsetMask(std::initializer_list<int> elements) {
    for (int e : elements) set(e);
  }

  static SubsetMask from_elements(const std::vector<int>& elements) {
    SubsetMask out;
    for (int e : elements) out.set(e);
    return out;
  }
  // {0, ..., n-1}
  static SubsetMask full(int n) {
    SubsetMask out;
    for (int w = 0; w < kWords; ++w) {
      int lo = w * 64;
      if (n >= lo + 64) {
        out.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        out.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return out;
  }

  bool test(int e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void set(int e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void reset(int e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  SubsetMask with(int e) const {
    SubsetMask out = *this;
    out.set(e);
    return out;
  }
  SubsetMask without(int e) const {
    SubsetMask out = *this;
    out.reset(e);
    return out;
  }

  int count() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const { return (words_[0] | words_[1]) == 0; }
  // Largest element + 1, or 0 for the empty set.
  int span() const {
    if (words_[1]) return 128 - std::countl_zero(words_[1]);
    if (words_[0]) return 64 - std::countl_zero(words_[0]);
    return 0;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  bool is_subset_of(const SubsetMask& other) const {
    return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
  }

  SubsetMask operator|(const SubsetMask& o) const {
    return SubsetMask(words_[0] | o.words_[0], words_[1] | o.words_[1]);
  }
  SubsetMask operator&(const SubsetMask& o) const {
    return SubsetMask(words_[0] & o.words_[0], words_[1] & o.words_[1]);
  }
  // Set difference.
  SubsetMask operator-(const SubsetMask& o) const {
    return SubsetMask(words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]);
  }
  SubsetMask& operator|=(const SubsetMask& o) { return *this = *this | o; }
  SubsetMask& operator&=(const SubsetMask& o) { return *this = *this & o; }

  bool operator==(const SubsetMask&) const = default;
  // Numeric order of the 128-bit value.
  bool operator<(const SubsetMask& o) const {
    if (words_[1] != o.words_[1]) return words_[1] < o.words_[1];
    return words_[0] < o.words_[0];
  }

  std::uint64_t word(int w) const { return words_[w]; }

  // "{0,3,5}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

 private:
  static constexpr int kWords = 2;
  constexpr SubsetMask(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}
  std::array<std::uint64_t, kWords> words_{};
};

struct SubsetMaskHash {
  std::size_t operator()(const SubsetMask& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.word(0) * 0x9E3779B97F4A7C15ull ^ m.word(1));
  }
};

}  // namespace matcor
