// ges/graph_model.cpp

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

#include "ges/graph_model.hpp"

namespace ges {

GraphModel graph_model_from_string(const std::string &name) {
  if (name == "AR" || name == "ar") return GraphModel::AR;
  if (name == "Hub" || name == "hub") return GraphModel::Hub;
  if (name == "Random" || name == "random") return GraphModel::Random;
  throw ConfigError("unknown graph model '" + name +
                    "' (expected AR, Hub or Random)");
}

std::string to_string(GraphModel model) {
  switch (model) {
    case GraphModel::AR: return "AR";
    case GraphModel::Hub: return "Hub";
    case GraphModel::Random: return "Random";
  }
  return "?";
}

Matrix generate_graph(GraphModel model, int p, double prob, Rng &rng) {
  if (p < 1) throw ConfigError("generate_graph: p must be >= 1");
  Matrix a = Matrix::Zero(p, p);
  switch (model) {
    case GraphModel::AR:
      for (int i = 0; i + 1 < p; ++i) {
        a(i, i + 1) = 1.0;
        a(i + 1, i) = 1.0;
      }
      break;
    case GraphModel::Hub: {
      if (p % 10 != 0)
        throw ConfigError("generate_graph: Hub requires p divisible by 10, got p=" +
                          std::to_string(p));
      const int groups = p / 10;
      for (int g = 0; g < groups; ++g) {
        const int center = g * 10;
        for (int j = center + 1; j < center + 10; ++j) {
          a(center, j) = 1.0;
          a(j, center) = 1.0;
        }
      }
      break;
    }
    case GraphModel::Random: {
      if (prob < 0.0 || prob > 1.0)
        throw ConfigError("generate_graph: Random needs prob in [0,1], got " +
                          std::to_string(prob));
      // One uniform per slot, in slot order, so the draw sequence is pinned.
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
          if (rng.uniform() < prob) {
            a(i, j) = 1.0;
            a(j, i) = 1.0;
          }
      break;
    }
  }
  return a;
}

TrueModel synthesize_precision(const Matrix &adjacency, double edge_value,
                               double diag_value) {
  if (adjacency.rows() != adjacency.cols())
    throw ConfigError("synthesize_precision: adjacency must be square");
  if (edge_value == 0.0)
    throw ConfigError("synthesize_precision: edge_value must be nonzero");
  const int p = static_cast<int>(adjacency.rows());

  Matrix theta = edge_value * adjacency;
  theta.diagonal().setConstant(diag_value);

  Eigen::LLT<Matrix> llt(theta);
  if (llt.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(theta, Eigen::EigenvaluesOnly);
    const double boosted = std::abs(es.eigenvalues().minCoeff()) + 0.1 + diag_value;
    theta.diagonal().setConstant(boosted);
    llt.compute(theta);
    if (llt.info() != Eigen::Success)
      throw SolverError("synthesize_precision: not positive definite after diagonal boost",
                        0.0);
  }

  TrueModel truth;
  truth.adjacency = adjacency;
  truth.precision = theta;
  truth.covariance = llt.solve(Matrix::Identity(p, p));
  // llt.solve of I is symmetric only up to roundoff; pin it exactly.
  truth.covariance = ((truth.covariance + truth.covariance.transpose()) * 0.5).eval();
  return truth;
}

Matrix sample_gaussian(const Matrix &covariance, int n, Rng &rng) {
  if (n < 1) throw ConfigError("sample_gaussian: n must be >= 1");
  Eigen::LLT<Matrix> llt(covariance);
  if (llt.info() != Eigen::Success)
    throw SolverError("sample_gaussian: covariance is not positive definite", 0.0);
  const int p = static_cast<int>(covariance.rows());
  Matrix z(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) z(i, j) = rng.normal();
  return z * llt.matrixL().toDenseMatrix().transpose();
}

}  // namespace ges
