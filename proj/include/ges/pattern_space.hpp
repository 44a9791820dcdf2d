// ges/pattern_space.hpp

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

#ifndef GES_PATTERN_SPACE_HPP_
#define GES_PATTERN_SPACE_HPP_

#include <cstddef>
#include <vector>

#include "ges/sparsity_pattern.hpp"

namespace ges {

enum class PatternSpaceKind { FullHypercube, Restricted, Explicit };

/// A candidate set of sparsity patterns: the full edge hypercube, the
/// product space restricted to candidate slots (the pre-screening case), or
/// an explicit de-duplicated list.
class PatternSpace {
 public:
  static PatternSpace full_hypercube(int p);

  /// Restricted product space: bits may vary only on the given candidate
  /// slots; everywhere else they are pinned to zero. Throws ConfigError on
  /// out-of-range or duplicate slots.
  static PatternSpace restricted(int p, std::vector<int> candidate_slots);

  /// Explicit candidate list; duplicates collapse to a single membership.
  static PatternSpace explicit_list(int p, std::vector<SparsityPattern> members);

  PatternSpaceKind kind() const { return kind_; }
  int nodes() const { return p_; }

  bool contains(const SparsityPattern &m) const;

  /// Slots a Metropolis proposal may flip (full: all; restricted: the
  /// candidates). Throws ConfigError for explicit spaces, whose geometry is
  /// not a product of slot choices.
  const std::vector<int> &proposal_slots() const;

  /// Number of member patterns if it fits in a size_t, otherwise nullopt-like
  /// sentinel: returns false and leaves `out` untouched.
  bool cardinality(std::size_t &out) const;

  /// Materializes every member pattern; throws ConfigError when the space has
  /// more than `cap` members.
  std::vector<SparsityPattern> enumerate(std::size_t cap) const;

 private:
  PatternSpace() = default;

  PatternSpaceKind kind_ = PatternSpaceKind::FullHypercube;
  int p_ = 0;
  std::vector<int> slots_;                  // full/restricted: variable slots
  std::vector<SparsityPattern> members_;    // explicit only
};

/// Spec-level constructor for the restricted space.
inline PatternSpace restrict_space(const std::vector<int> &candidate_slots,
                                   int p) {
  return PatternSpace::restricted(p, candidate_slots);
}

}  // namespace ges

#endif  // GES_PATTERN_SPACE_HPP_
