// ges/metrics.cpp

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

#include "ges/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ges {

double kl_loss(const Matrix &theta_hat, const TrueModel &truth) {
  if (theta_hat.rows() != truth.precision.rows() ||
      theta_hat.cols() != truth.precision.cols())
    throw ConfigError("kl_loss: dimension mismatch");
  const double p = static_cast<double>(theta_hat.rows());
  return -logdet_spd(theta_hat) +
         theta_hat.cwiseProduct(truth.covariance).sum() -
         (-logdet_spd(truth.precision) + p);
}

double frobenius_sq(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ConfigError("frobenius_sq: dimension mismatch");
  return (a - b).squaredNorm();
}

double frobenius_sq(const Matrix &theta_hat, const TrueModel &truth) {
  return frobenius_sq(theta_hat, truth.precision);
}

StructureScores structure_scores(const SparsityPattern &estimated,
                                 const SparsityPattern &truth) {
  if (estimated.nodes() != truth.nodes())
    throw ConfigError("structure_scores: patterns over different node counts");
  StructureScores s;
  s.est_edges = estimated.count();
  s.true_edges = truth.count();
  for (int k : estimated.edge_slots())
    if (truth.test(k)) ++s.common_edges;

  s.precision = s.est_edges == 0
                    ? (s.true_edges == 0 ? 1.0 : 0.0)
                    : static_cast<double>(s.common_edges) / s.est_edges;
  s.recall = s.true_edges == 0
                 ? (s.est_edges == 0 ? 1.0 : 0.0)
                 : static_cast<double>(s.common_edges) / s.true_edges;
  s.f1 = (s.precision + s.recall == 0.0)
             ? 0.0
             : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

StructureScores structure_scores(const Matrix &theta_hat,
                                 const TrueModel &truth, double zero_tol) {
  if (zero_tol < 0.0)
    throw ConfigError("structure_scores: zero_tol must be >= 0");
  return structure_scores(
      SparsityPattern::from_matrix_support(theta_hat, zero_tol),
      truth.pattern());
}

namespace {

EvalReport combine(const Matrix &theta_hat, const TrueModel &truth,
                   const StructureScores &s) {
  EvalReport r;
  r.frobenius_sq = frobenius_sq(theta_hat, truth);
  r.kl = kl_loss(theta_hat, truth);
  r.precision = s.precision;
  r.recall = s.recall;
  r.f1 = s.f1;
  r.est_edges = s.est_edges;
  r.true_edges = s.true_edges;
  r.common_edges = s.common_edges;
  return r;
}

}  // namespace

EvalReport evaluate(const Matrix &theta_hat, const TrueModel &truth,
                    double zero_tol) {
  return combine(theta_hat, truth, structure_scores(theta_hat, truth, zero_tol));
}

EvalReport evaluate(const Matrix &theta_hat, const SparsityPattern &estimated,
                    const TrueModel &truth) {
  return combine(theta_hat, truth, structure_scores(estimated, truth.pattern()));
}

OracleGap oracle_gap(const AggregationResult &aggregate,
                     const std::vector<PrecisionEstimate> &fits,
                     const TrueModel &truth, const CovarianceEstimate &s,
                     int n2, const PriorSpec &prior) {
  if (fits.empty()) throw ConfigError("oracle_gap: no fits supplied");
  if (n2 < 1) throw ConfigError("oracle_gap: n2 must be >= 1");

  // Exact prior normalization over the supplied dictionary.
  std::vector<double> lp(fits.size());
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < fits.size(); ++i) {
    lp[i] = log_prior_unnormalized(fits[i].pattern, prior);
    top = std::max(top, lp[i]);
  }
  double total = 0.0;
  for (double v : lp) total += std::exp(v - top);
  const double log_h = top + std::log(total);

  const double kl_agg = kl_loss(aggregate.estimate, truth);
  const Matrix noise = s.matrix - truth.covariance;

  OracleGap out;
  double kl_best = std::numeric_limits<double>::infinity();
  out.rhs_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < fits.size(); ++i) {
    const double kl_i = kl_loss(fits[i].matrix, truth);
    if (kl_i < kl_best) {
      kl_best = kl_i;
      out.best_index = i;
    }
    const double log_inv_prior = log_h - lp[i];
    const double rhs =
        kl_i + 2.0 / static_cast<double>(n2) * log_inv_prior +
        (fits[i].matrix - aggregate.estimate).cwiseProduct(noise).sum();
    out.rhs_min = std::min(out.rhs_min, rhs);
  }
  out.gap = kl_agg - kl_best;
  out.slack = out.rhs_min - kl_agg;
  return out;
}

}  // namespace ges
