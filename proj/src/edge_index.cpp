// ges/edge_index.cpp

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

#include "ges/edge_index.hpp"

#include <string>

namespace ges {

int edge_slot(int i, int j, int p) {
  if (p < 2 || i < 1 || j <= i || j > p)
    throw ConfigError("edge_slot: need 1 <= i < j <= p, got (" +
                      std::to_string(i) + "," + std::to_string(j) + ") with p=" +
                      std::to_string(p));
  return (i - 1) * p - i * (i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> edge_from_slot(int k, int p) {
  if (p < 2 || k < 0 || k >= num_edge_slots(p))
    throw ConfigError("edge_from_slot: slot " + std::to_string(k) +
                      " out of range for p=" + std::to_string(p));
  int i = 1;
  int cum = p - 1;  // slots consumed by rows 1..i
  while (k >= cum) {
    ++i;
    cum += p - i;
  }
  const int row_start = cum - (p - i);
  return {i, i + 1 + (k - row_start)};
}

std::vector<std::pair<int, int>> slot_table(int p) {
  std::vector<std::pair<int, int>> table;
  table.reserve(num_edge_slots(p));
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) table.emplace_back(i, j);
  return table;
}

}  // namespace ges
