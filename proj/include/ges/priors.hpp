// ges/priors.hpp

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

#ifndef GES_PRIORS_HPP_
#define GES_PRIORS_HPP_

#include <string>

#include "ges/sparsity_pattern.hpp"

namespace ges {

enum class PriorKind { Complexity, Uniform, Flat };

PriorKind prior_kind_from_string(const std::string &name);
std::string to_string(PriorKind kind);

/// Prior over sparsity patterns; fully determined by the edge count.
struct PriorSpec {
  PriorKind kind = PriorKind::Complexity;
  int nodes = 0;  // p
};

/// Unnormalized log prior as a function of the edge count s = |m|_1.
///   complexity: s * (log s - log(e p(p-1))), with the s = 0 case pinned to
///               0 (the 0^0 = 1 convention the normalization bound uses).
///   uniform:    -log(p(p-1)/2 + 1) - log C(p(p-1)/2, s).
///   flat:       0.
/// Normalization constants are deliberately dropped; every consumer works
/// with ratios.
double log_prior_unnormalized(int edge_count, const PriorSpec &prior);

inline double log_prior_unnormalized(const SparsityPattern &m,
                                     const PriorSpec &prior) {
  return log_prior_unnormalized(m.count(), prior);
}

}  // namespace ges

#endif  // GES_PRIORS_HPP_
