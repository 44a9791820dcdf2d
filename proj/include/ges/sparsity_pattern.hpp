// ges/sparsity_pattern.hpp

// Copyright 2026  The ges authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef GES_SPARSITY_PATTERN_HPP_
#define GES_SPARSITY_PATTERN_HPP_

#include <cstdint>
#include <vector>

#include "ges/common.hpp"
#include "ges/edge_index.hpp"

namespace ges {

/// A binary vector over the p(p-1)/2 edge slots; the model index of a
/// candidate graph. Bit k set means the edge owning slot k is present.
class SparsityPattern {
 public:
  SparsityPattern() = default;

  /// Empty pattern on p nodes.
  explicit SparsityPattern(int p);

  /// Pattern with every slot set.
  static SparsityPattern full(int p);

  /// Pattern with exactly the given slots set; slots must be in range.
  static SparsityPattern from_slots(int p, const std::vector<int> &slots);

  /// Pattern of the nonzero off-diagonal support of a symmetric matrix.
  static SparsityPattern from_matrix_support(const Matrix &a, double tol = 0.0);

  int nodes() const { return p_; }
  int slots() const { return slots_; }

  bool test(int k) const {
    return (words_[static_cast<std::size_t>(k) >> 6] >>
            (static_cast<std::size_t>(k) & 63)) & 1ULL;
  }
  void set(int k, bool value = true) {
    const std::uint64_t mask = 1ULL << (static_cast<std::size_t>(k) & 63);
    if (value)
      words_[static_cast<std::size_t>(k) >> 6] |= mask;
    else
      words_[static_cast<std::size_t>(k) >> 6] &= ~mask;
  }
  void flip(int k) {
    words_[static_cast<std::size_t>(k) >> 6] ^= 1ULL
        << (static_cast<std::size_t>(k) & 63);
  }

  /// Number of set bits, |m|_1.
  int count() const;

  /// Set slots in increasing order.
  std::vector<int> edge_slots() const;

  /// True when every set bit of this pattern is also set in other.
  bool subset_of(const SparsityPattern &other) const;

  /// Symmetric 0/1 adjacency matrix with zero diagonal.
  Matrix adjacency() const;

  const std::vector<std::uint64_t> &words() const { return words_; }

  friend bool operator==(const SparsityPattern &a, const SparsityPattern &b) {
    return a.p_ == b.p_ && a.words_ == b.words_;
  }

 private:
  int p_ = 0;
  int slots_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PatternHash {
  std::size_t operator()(const SparsityPattern &m) const;
};

/// All patterns at Manhattan distance one from m: exactly p(p-1)/2 of them,
/// one per flipped slot.
std::vector<SparsityPattern> pattern_neighbors(const SparsityPattern &m);

}  // namespace ges

#endif  // GES_SPARSITY_PATTERN_HPP_
