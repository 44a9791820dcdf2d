// ges/edge_index.hpp

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

#ifndef GES_EDGE_INDEX_HPP_
#define GES_EDGE_INDEX_HPP_

#include <utility>
#include <vector>

#include "ges/common.hpp"

namespace ges {

// Vertex pairs (i, j) with 1 <= i < j <= p are listed lexicographically:
// (1,2), (1,3), ..., (1,p), (2,3), ... Each pair owns one linear slot k in
// [0, p(p-1)/2). Vertices are 1-based at this interface and in all reports;
// slots are 0-based everywhere.

/// Number of edge slots for p nodes: p(p-1)/2.
inline int num_edge_slots(int p) { return p * (p - 1) / 2; }

/// Slot of the pair (i, j); throws ConfigError unless 1 <= i < j <= p.
int edge_slot(int i, int j, int p);

/// Inverse of edge_slot: the 1-based pair owning slot k.
std::pair<int, int> edge_from_slot(int k, int p);

/// All pairs in slot order, as 0-based (row, col) indices; slot k maps to
/// table[k]. Built once per p where slot lookups sit in an inner loop.
std::vector<std::pair<int, int>> slot_table(int p);

}  // namespace ges

#endif  // GES_EDGE_INDEX_HPP_
