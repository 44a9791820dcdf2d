// ges/sparsity_pattern.cpp

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

#include "ges/sparsity_pattern.hpp"

#include <bit>
#include <string>

namespace ges {

SparsityPattern::SparsityPattern(int p)
    : p_(p), slots_(num_edge_slots(p)),
      words_((static_cast<std::size_t>(slots_) + 63) / 64, 0ULL) {
  if (p < 1) throw ConfigError("SparsityPattern: node count must be >= 1");
}

SparsityPattern SparsityPattern::full(int p) {
  SparsityPattern m(p);
  for (int k = 0; k < m.slots_; ++k) m.set(k);
  return m;
}

SparsityPattern SparsityPattern::from_slots(int p,
                                            const std::vector<int> &slots) {
  SparsityPattern m(p);
  for (int k : slots) {
    if (k < 0 || k >= m.slots_)
      throw ConfigError("SparsityPattern::from_slots: slot " +
                        std::to_string(k) + " out of range for p=" +
                        std::to_string(p));
    m.set(k);
  }
  return m;
}

SparsityPattern SparsityPattern::from_matrix_support(const Matrix &a,
                                                     double tol) {
  const int p = static_cast<int>(a.rows());
  SparsityPattern m(p);
  int k = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j, ++k)
      if (std::abs(a(i, j)) > tol) m.set(k);
  return m;
}

int SparsityPattern::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> SparsityPattern::edge_slots() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<int>(wi * 64) + bit);
      w &= w - 1;
    }
  }
  return out;
}

bool SparsityPattern::subset_of(const SparsityPattern &other) const {
  if (p_ != other.p_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

Matrix SparsityPattern::adjacency() const {
  Matrix a = Matrix::Zero(p_, p_);
  const auto table = slot_table(p_);
  for (int k : edge_slots()) {
    a(table[k].first, table[k].second) = 1.0;
    a(table[k].second, table[k].first) = 1.0;
  }
  return a;
}

std::size_t PatternHash::operator()(const SparsityPattern &m) const {
  // FNV-1a over the words plus the node count.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (i * 8)) & 0xFFULL;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(m.nodes()));
  for (std::uint64_t w : m.words()) mix(w);
  return static_cast<std::size_t>(h);
}

std::vector<SparsityPattern> pattern_neighbors(const SparsityPattern &m) {
  std::vector<SparsityPattern> out;
  out.reserve(static_cast<std::size_t>(m.slots()));
  for (int k = 0; k < m.slots(); ++k) {
    SparsityPattern n = m;
    n.flip(k);
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace ges
