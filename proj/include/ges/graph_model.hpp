// ges/graph_model.hpp

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

#ifndef GES_GRAPH_MODEL_HPP_
#define GES_GRAPH_MODEL_HPP_

#include <string>

#include "ges/common.hpp"
#include "ges/rng.hpp"
#include "ges/sparsity_pattern.hpp"

namespace ges {

enum class GraphModel { AR, Hub, Random };

GraphModel graph_model_from_string(const std::string &name);
std::string to_string(GraphModel model);

/// Ground truth for a synthetic experiment: the graph, the precision matrix
/// built on it, and its inverse.
struct TrueModel {
  Matrix adjacency;   // symmetric 0/1, zero diagonal
  Matrix precision;   // positive definite
  Matrix covariance;  // precision^{-1}

  int nodes() const { return static_cast<int>(adjacency.rows()); }
  SparsityPattern pattern() const {
    return SparsityPattern::from_matrix_support(adjacency);
  }
};

/// Sensible Random-model default: expected edge count ~ p.
inline double default_random_edge_prob(int p) {
  return p > 1 ? 2.0 / static_cast<double>(p - 1) : 0.0;
}

/// Synthetic graph generator.
///   AR:     edge iff |i-j| == 1 (p-1 edges, seed-independent).
///   Hub:    p/10 groups of 10 consecutive vertices; the first vertex of each
///           group connects to the other 9 (seed-independent). Requires p
///           divisible by 10.
///   Random: each slot set independently with probability prob.
Matrix generate_graph(GraphModel model, int p, double prob, Rng &rng);

/// Precision matrix with edge_value on adjacency slots and diag_value on the
/// diagonal. If that matrix is not positive definite, the diagonal is raised
/// to |lambda_min| + 0.1 + diag_value and the check is retried once.
TrueModel synthesize_precision(const Matrix &adjacency, double edge_value = 0.3,
                               double diag_value = 1.0);

/// n rows from N_p(0, covariance): X = Z L^T with L the lower Cholesky
/// factor and Z standard normal filled row by row.
Matrix sample_gaussian(const Matrix &covariance, int n, Rng &rng);

}  // namespace ges

#endif  // GES_GRAPH_MODEL_HPP_
