// ges/screening.hpp

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

#ifndef GES_SCREENING_HPP_
#define GES_SCREENING_HPP_

#include <string>
#include <vector>

#include "ges/common.hpp"
#include "ges/covariance.hpp"
#include "ges/rng.hpp"

namespace ges {

/// Graphical lasso solution: minimize -logdet(theta) + tr(S theta) +
/// lambda sum_{i != j} |theta_ij|. The diagonal is never penalized.
struct GlassoFit {
  Matrix theta;  // precision estimate, exact zeros off the support
  Matrix w;      // fitted covariance (the dual iterate)
  double lambda = 0.0;
  int iterations = 0;
  bool converged = false;
  double dual_gap = 0.0;  // |tr(S theta) + lambda |theta|_1,off - p|
  std::vector<double> dual_objective_trace;  // logdet(w) per sweep, ascending
};

/// Block coordinate descent over rows/columns (the classical algorithm: each
/// block solves a lasso subproblem by cyclic coordinate descent, which makes
/// the dual objective logdet(w) nondecreasing per block). Nonconvergence is
/// reported through the flag, not an exception. `tol` bounds the largest
/// entry change of w over a full sweep.
GlassoFit glasso_fit(const CovarianceEstimate &cov, double lambda,
                     double tol = 1e-7, int max_iter = 200);

enum class ScreenMethod { Glasso, CorrThreshold };

std::string to_string(ScreenMethod method);

/// Candidate edge set Q_p from the first subsample.
struct ScreenResult {
  std::vector<int> candidates;     // slots, ascending
  std::vector<double> statistics;  // |statistic| per candidate, same order
  ScreenMethod method = ScreenMethod::Glasso;
  double param = 0.0;  // lambda or tau

  int count() const { return static_cast<int>(candidates.size()); }
};

/// Glasso method: the nonzero off-diagonal support at penalty `param`.
/// CorrThreshold method: slots whose |empirical correlation| >= param.
/// When more than max_candidates slots qualify, the largest statistics win.
ScreenResult prescreen(const Matrix &d1, ScreenMethod method, double param,
                       int max_candidates);

/// Edges kept by the Bonferroni-corrected test of vanishing full-order
/// partial correlations: rho_ij from the normalized inverse covariance,
/// Fisher z with variance 1/(n - p - 1), two-sided, level alpha over
/// p(p-1)/2 comparisons. Requires n > p + 2.
std::vector<int> pcor_test(const Matrix &x, double alpha);

struct GlassoPathPoint {
  double lambda = 0.0;
  int edges = 0;
  double objective = 0.0;  // primal objective at the fit
};

/// Warm-started fits across a penalty grid (descending order recommended).
std::vector<GlassoPathPoint> glasso_path(const CovarianceEstimate &cov,
                                         const std::vector<double> &lambdas,
                                         double tol = 1e-7, int max_iter = 200);

void write_glasso_path_csv(const std::string &path,
                           const std::vector<GlassoPathPoint> &points);
void write_screen_result(const std::string &path, int p,
                         const ScreenResult &screen);

struct GlassoCv {
  double lambda = 0.0;
  std::vector<double> grid;
  std::vector<double> mean_loglik;  // held-out logdet - tr per grid point
};

/// K-fold cross-validation for the glasso penalty, scored by held-out
/// Gaussian log-likelihood. Folds are assigned by row position modulo
/// `folds` after one seeded shuffle.
GlassoCv glasso_cv_lambda(const Matrix &x, const std::vector<double> &grid,
                          int folds, Rng &rng, double tol = 1e-6,
                          int max_iter = 200);

/// Penalty grid for cross-validation: `size` log-spaced values from
/// max|offdiag| down to ratio * max|offdiag|.
std::vector<double> default_lambda_grid(const CovarianceEstimate &cov,
                                        int size = 12, double ratio = 0.02);

}  // namespace ges

#endif  // GES_SCREENING_HPP_
