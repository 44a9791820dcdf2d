// ges/constrained_mle.hpp

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

#ifndef GES_CONSTRAINED_MLE_HPP_
#define GES_CONSTRAINED_MLE_HPP_

#include <limits>
#include <vector>

#include "ges/common.hpp"
#include "ges/covariance.hpp"
#include "ges/sparsity_pattern.hpp"

namespace ges {

struct SolverConfig {
  double tol = 1e-7;    // KKT residual tolerance (max-norm)
  int max_iter = 500;   // sweep cap
  double ridge = 0.0;   // added to the covariance diagonal once on a PD failure
  bool track_objective = false;  // record logdet - tr per sweep
};

/// A fitted pattern-constrained precision matrix. Off-pattern off-diagonal
/// entries are exactly zero by construction, never tolerance-level.
struct PrecisionEstimate {
  Matrix matrix;
  SparsityPattern pattern;
  int iterations = 0;  // sweeps over the constraint set
  double kkt_residual = std::numeric_limits<double>::infinity();
  bool converged = false;
  std::vector<double> objective_trace;  // filled when cfg.track_objective
};

/// Gaussian log-likelihood kernel logdet(theta) - tr(sigma * theta).
double gaussian_objective(const Matrix &theta, const Matrix &sigma);

/// Maximizes logdet(theta) - tr(cov * theta) subject to theta_ij = 0 for
/// every off-pattern pair, by cyclic matching of the inverse to cov on the
/// diagonal and pattern edges (iterative proportional scaling). Each step
/// maximizes the objective exactly along one coordinate direction, so the
/// objective never decreases.
///
/// Nonexistence of the constrained MLE (likelihood unbounded for the
/// pattern at this sample size) shows up as nonconvergence: either a
/// returned estimate with converged == false, or a SolverError if the
/// working matrix loses positive definiteness (after one optional
/// ridge-and-restart when cfg.ridge > 0).
PrecisionEstimate fit_constrained_mle(const CovarianceEstimate &cov,
                                      const SparsityPattern &m,
                                      const SolverConfig &cfg = {});

/// Same fit started from a caller-supplied iterate (off-pattern entries are
/// zeroed first; falls back to the diagonal start if the result is not
/// positive definite). Used to warm-start chains of nearby patterns.
PrecisionEstimate fit_constrained_mle(const CovarianceEstimate &cov,
                                      const SparsityPattern &m,
                                      const SolverConfig &cfg,
                                      const Matrix &warm_start);

/// Stationarity residual of a fit against cov: the largest mismatch between
/// inv(theta) and cov over pattern edges and the diagonal, plus the largest
/// |theta_ij| over off-pattern pairs. Throws on a non-PD estimate.
double kkt_residual(const PrecisionEstimate &estimate,
                    const CovarianceEstimate &cov);

}  // namespace ges

#endif  // GES_CONSTRAINED_MLE_HPP_
