// ges/metrics.hpp

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

#ifndef GES_METRICS_HPP_
#define GES_METRICS_HPP_

#include <cstddef>
#include <vector>

#include "ges/aggregation.hpp"
#include "ges/common.hpp"
#include "ges/constrained_mle.hpp"
#include "ges/graph_model.hpp"
#include "ges/priors.hpp"

namespace ges {

/// KL loss against the truth: -logdet(theta_hat) + tr(theta_hat Sigma)
/// - (-logdet(Theta) + p). Zero iff theta_hat equals the true precision;
/// may dip a hair below zero in floating point. Throws on non-PD input.
double kl_loss(const Matrix &theta_hat, const TrueModel &truth);

/// Sum of squared entry differences over the whole matrix.
double frobenius_sq(const Matrix &a, const Matrix &b);
double frobenius_sq(const Matrix &theta_hat, const TrueModel &truth);

struct StructureScores {
  double precision = 0.0, recall = 0.0, f1 = 0.0;
  long est_edges = 0, true_edges = 0, common_edges = 0;
};

/// Precision / recall / F1 between two edge sets. Conventions: an empty
/// estimated set scores precision 1 when the true set is empty too, else 0
/// (and symmetrically for recall); F1 is 0 when precision + recall is 0.
StructureScores structure_scores(const SparsityPattern &estimated,
                                 const SparsityPattern &truth);

/// Same, with the estimated edge set read off theta_hat as the slots with
/// |theta_ij| > zero_tol.
StructureScores structure_scores(const Matrix &theta_hat,
                                 const TrueModel &truth,
                                 double zero_tol = 1e-8);

struct EvalReport {
  double frobenius_sq = 0.0;
  double kl = 0.0;
  double precision = 0.0, recall = 0.0, f1 = 0.0;
  long est_edges = 0, true_edges = 0, common_edges = 0;
};

/// Full evaluation with the magnitude edge rule.
EvalReport evaluate(const Matrix &theta_hat, const TrueModel &truth,
                    double zero_tol = 1e-8);

/// Full evaluation with a caller-chosen edge set (the chain frequency rule).
EvalReport evaluate(const Matrix &theta_hat, const SparsityPattern &estimated,
                    const TrueModel &truth);

struct OracleGap {
  double gap = 0.0;        // KL(aggregate) - min_m KL(theta_m)
  double rhs_min = 0.0;    // smallest oracle-inequality right-hand side
  double slack = 0.0;      // rhs_min - KL(aggregate), expected >= 0
  std::size_t best_index = 0;  // argmin KL among the fits
};

/// Excess risk of an enumerated aggregate against the best single fit, plus
/// the oracle-inequality right-hand side min_m { KL(theta_m)
/// + (2/n2) log(1/pi_m) + tr((theta_m - aggregate)(S - Sigma)) } with the
/// prior normalized exactly over the supplied fits.
OracleGap oracle_gap(const AggregationResult &aggregate,
                     const std::vector<PrecisionEstimate> &fits,
                     const TrueModel &truth, const CovarianceEstimate &s,
                     int n2, const PriorSpec &prior);

/// Dictionary-quality probe: true when max tr(theta_m)/p stayed at or below
/// the bound across the run. A false return is a warning, not a failure.
inline bool trace_bound_ok(const AggregationResult &result,
                           double bound = 10.0) {
  return result.max_trace_over_p <= bound;
}

}  // namespace ges

#endif  // GES_METRICS_HPP_
