// ges/pattern_space.cpp

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

#include "ges/pattern_space.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace ges {

PatternSpace PatternSpace::full_hypercube(int p) {
  PatternSpace s;
  s.kind_ = PatternSpaceKind::FullHypercube;
  s.p_ = p;
  s.slots_.resize(static_cast<std::size_t>(num_edge_slots(p)));
  for (int k = 0; k < num_edge_slots(p); ++k)
    s.slots_[static_cast<std::size_t>(k)] = k;
  return s;
}

PatternSpace PatternSpace::restricted(int p, std::vector<int> candidate_slots) {
  const int total = num_edge_slots(p);
  std::unordered_set<int> seen;
  for (int k : candidate_slots) {
    if (k < 0 || k >= total)
      throw ConfigError("restrict_space: slot " + std::to_string(k) +
                        " out of range for p=" + std::to_string(p));
    if (!seen.insert(k).second)
      throw ConfigError("restrict_space: duplicate slot " + std::to_string(k));
  }
  std::sort(candidate_slots.begin(), candidate_slots.end());
  PatternSpace s;
  s.kind_ = PatternSpaceKind::Restricted;
  s.p_ = p;
  s.slots_ = std::move(candidate_slots);
  return s;
}

PatternSpace PatternSpace::explicit_list(int p,
                                         std::vector<SparsityPattern> members) {
  PatternSpace s;
  s.kind_ = PatternSpaceKind::Explicit;
  s.p_ = p;
  std::unordered_set<SparsityPattern, PatternHash> seen;
  for (auto &m : members) {
    if (m.nodes() != p)
      throw ConfigError("PatternSpace: member pattern has wrong node count");
    if (seen.insert(m).second) s.members_.push_back(std::move(m));
  }
  return s;
}

bool PatternSpace::contains(const SparsityPattern &m) const {
  if (m.nodes() != p_) return false;
  switch (kind_) {
    case PatternSpaceKind::FullHypercube:
      return true;
    case PatternSpaceKind::Restricted: {
      // Every set bit must be a candidate slot.
      for (int k : m.edge_slots())
        if (!std::binary_search(slots_.begin(), slots_.end(), k)) return false;
      return true;
    }
    case PatternSpaceKind::Explicit:
      return std::find(members_.begin(), members_.end(), m) != members_.end();
  }
  return false;
}

const std::vector<int> &PatternSpace::proposal_slots() const {
  if (kind_ == PatternSpaceKind::Explicit)
    throw ConfigError("PatternSpace: explicit spaces have no proposal slots");
  return slots_;
}

bool PatternSpace::cardinality(std::size_t &out) const {
  if (kind_ == PatternSpaceKind::Explicit) {
    out = members_.size();
    return true;
  }
  if (slots_.size() >= 8 * sizeof(std::size_t)) return false;
  out = static_cast<std::size_t>(1) << slots_.size();
  return true;
}

std::vector<SparsityPattern> PatternSpace::enumerate(std::size_t cap) const {
  std::size_t n = 0;
  if (!cardinality(n) || n > cap)
    throw ConfigError("PatternSpace: too many patterns to enumerate (cap " +
                      std::to_string(cap) + ")");
  if (kind_ == PatternSpaceKind::Explicit) return members_;

  std::vector<SparsityPattern> out;
  out.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    SparsityPattern m(p_);
    for (std::size_t b = 0; b < slots_.size(); ++b)
      if ((mask >> b) & 1) m.set(slots_[b]);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace ges
