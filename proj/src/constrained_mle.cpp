// ges/constrained_mle.cpp

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

#include "ges/constrained_mle.hpp"

#include <cassert>
#include <cmath>

namespace ges {

double gaussian_objective(const Matrix &theta, const Matrix &sigma) {
  return logdet_spd(theta) - sigma.cwiseProduct(theta).sum();
}

namespace {

struct NotPositiveDefinite {
  double residual;
};

// One IPS pass: for each constrained entry, move theta along the matching
// coordinate direction so that inv(theta) hits sigma there exactly, and
// apply the corresponding low-rank correction to the maintained inverse w.
void sweep(const Matrix &sigma, const std::vector<std::pair<int, int>> &edges,
           Matrix &theta, Matrix &w, double last_residual) {
  const int p = static_cast<int>(sigma.rows());
  Vector wi(p), wj(p);

  for (int i = 0; i < p; ++i) {
    const double a = w(i, i);
    const double s = sigma(i, i);
    if (a <= 0.0) throw NotPositiveDefinite{last_residual};
    const double t = 1.0 / s - 1.0 / a;
    if (t == 0.0) continue;
    theta(i, i) += t;
    const double coef = t / (1.0 + t * a);
    wi = w.col(i);
    w.noalias() -= coef * wi * wi.transpose();
  }

  for (const auto &[i, j] : edges) {
    const double a = w(i, i);
    const double b = w(i, j);
    const double c = w(j, j);
    const double s = sigma(i, j);
    const double d = a * c - b * b;
    if (d <= 0.0 || a <= 0.0 || c <= 0.0)
      throw NotPositiveDefinite{last_residual};

    double t;
    if (s == 0.0) {
      t = b / d;
    } else {
      const double x = 4.0 * s * s * (a * c) / (d * d);
      const double u = -2.0 * s * (a * c) / (d * d * (1.0 + std::sqrt(1.0 + x)));
      t = b / d + u;
    }
    if (t == 0.0) continue;

    const double q = (1.0 + t * b) * (1.0 + t * b) - t * t * a * c;
    if (q <= 0.0) throw NotPositiveDefinite{last_residual};

    theta(i, j) += t;
    theta(j, i) += t;

    // w' = w - [wi wj] g [wi wj]^T with g = M (I + K M)^{-1}.
    const double g11 = -t * t * c / q;
    const double g12 = (t + t * t * b) / q;
    const double g22 = -t * t * a / q;
    wi = w.col(i);
    wj = w.col(j);
    w.noalias() -= g11 * wi * wi.transpose();
    w.noalias() -= g22 * wj * wj.transpose();
    w.noalias() -= g12 * (wi * wj.transpose() + wj * wi.transpose());
  }
}

double residual_on(const Matrix &w, const Matrix &sigma,
                   const std::vector<std::pair<int, int>> &edges) {
  double r = 0.0;
  for (int i = 0; i < static_cast<int>(sigma.rows()); ++i)
    r = std::max(r, std::abs(w(i, i) - sigma(i, i)));
  for (const auto &[i, j] : edges)
    r = std::max(r, std::abs(w(i, j) - sigma(i, j)));
  return r;
}

// Exact inverse of theta; throws NotPositiveDefinite when Cholesky fails.
Matrix exact_inverse(const Matrix &theta, double last_residual) {
  Eigen::LLT<Matrix> llt(theta);
  if (llt.info() != Eigen::Success) throw NotPositiveDefinite{last_residual};
  const Matrix inv =
      llt.solve(Matrix::Identity(theta.rows(), theta.cols()));
  return ((inv + inv.transpose()) * 0.5).eval();
}

PrecisionEstimate fit_once(const Matrix &sigma, const SparsityPattern &m,
                           const SolverConfig &cfg, const Matrix *warm) {
  const int p = static_cast<int>(sigma.rows());

  PrecisionEstimate est;
  est.pattern = m;

  // Closed forms for the two extreme patterns.
  if (m.count() == m.slots()) {
    est.matrix = exact_inverse(sigma, est.kkt_residual);
    est.iterations = 0;
    est.kkt_residual = residual_on(exact_inverse(est.matrix, 0.0), sigma,
                                   slot_table(p));
    est.converged = est.kkt_residual < cfg.tol;
    return est;
  }
  if (m.count() == 0) {
    est.matrix = Matrix::Zero(p, p);
    for (int i = 0; i < p; ++i) est.matrix(i, i) = 1.0 / sigma(i, i);
    est.iterations = 0;
    est.kkt_residual = 0.0;
    for (int i = 0; i < p; ++i)
      est.kkt_residual = std::max(
          est.kkt_residual, std::abs(1.0 / est.matrix(i, i) - sigma(i, i)));
    est.converged = true;
    return est;
  }

  const auto table = slot_table(p);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m.count()));
  for (int k : m.edge_slots()) edges.push_back(table[k]);

  Matrix theta, w;
  bool warm_ok = false;
  if (warm != nullptr && warm->rows() == p && warm->cols() == p) {
    theta = Matrix::Zero(p, p);
    theta.diagonal() = warm->diagonal();
    for (const auto &[i, j] : edges) {
      theta(i, j) = (*warm)(i, j);
      theta(j, i) = (*warm)(j, i);
    }
    Eigen::LLT<Matrix> llt(theta);
    if (llt.info() == Eigen::Success) {
      w = llt.solve(Matrix::Identity(p, p));
      w = ((w + w.transpose()) * 0.5).eval();
      warm_ok = true;
    }
  }
  if (!warm_ok) {
    theta = Matrix::Zero(p, p);
    w = Matrix::Zero(p, p);
    for (int i = 0; i < p; ++i) {
      theta(i, i) = 1.0 / sigma(i, i);
      w(i, i) = sigma(i, i);
    }
  }

  double resid = std::numeric_limits<double>::infinity();
  int sweeps = 0;
  constexpr int kRefreshEvery = 16;
  while (sweeps < cfg.max_iter) {
    sweep(sigma, edges, theta, w, resid);
    ++sweeps;
    resid = residual_on(w, sigma, edges);

    if (cfg.track_objective)
      est.objective_trace.push_back(gaussian_objective(theta, sigma));

    if (resid < cfg.tol) {
      // Confirm against the exact inverse before declaring convergence;
      // the maintained w can drift over many low-rank updates.
      w = exact_inverse(theta, resid);
      resid = residual_on(w, sigma, edges);
      if (resid < cfg.tol) break;
    } else if (sweeps % kRefreshEvery == 0) {
      w = exact_inverse(theta, resid);
      resid = residual_on(w, sigma, edges);
      if (resid < cfg.tol) break;
    }
  }

  if (resid >= cfg.tol) {
    w = exact_inverse(theta, resid);
    resid = residual_on(w, sigma, edges);
  }

  est.matrix = std::move(theta);
  est.iterations = sweeps;
  est.kkt_residual = resid;
  est.converged = resid < cfg.tol;
  return est;
}

PrecisionEstimate fit_impl(const CovarianceEstimate &cov,
                           const SparsityPattern &m, const SolverConfig &cfg,
                           const Matrix *warm) {
  const Matrix &sigma = cov.matrix;
  const int p = static_cast<int>(sigma.rows());
  if (sigma.cols() != p)
    throw ConfigError("fit_constrained_mle: covariance must be square");
  if (m.nodes() != p)
    throw ConfigError("fit_constrained_mle: pattern is over " +
                      std::to_string(m.nodes()) + " nodes but covariance is " +
                      std::to_string(p) + "x" + std::to_string(p));
  for (int i = 0; i < p; ++i)
    if (!(sigma(i, i) > 0.0))
      throw ConfigError("fit_constrained_mle: covariance diagonal must be "
                        "strictly positive (entry " + std::to_string(i + 1) +
                        ")");

  try {
    return fit_once(sigma, m, cfg, warm);
  } catch (const NotPositiveDefinite &e) {
    if (cfg.ridge > 0.0) {
      const Matrix ridged =
          sigma + cfg.ridge * Matrix::Identity(p, p);
      try {
        return fit_once(ridged, m, cfg, warm);
      } catch (const NotPositiveDefinite &e2) {
        throw SolverError(
            "fit_constrained_mle: working matrix lost positive definiteness "
            "even after ridge restart",
            e2.residual);
      }
    }
    throw SolverError(
        "fit_constrained_mle: working matrix lost positive definiteness "
        "(constrained MLE may not exist for this pattern at this sample size)",
        e.residual);
  }
}

}  // namespace

PrecisionEstimate fit_constrained_mle(const CovarianceEstimate &cov,
                                      const SparsityPattern &m,
                                      const SolverConfig &cfg) {
  return fit_impl(cov, m, cfg, nullptr);
}

PrecisionEstimate fit_constrained_mle(const CovarianceEstimate &cov,
                                      const SparsityPattern &m,
                                      const SolverConfig &cfg,
                                      const Matrix &warm_start) {
  return fit_impl(cov, m, cfg, &warm_start);
}

double kkt_residual(const PrecisionEstimate &estimate,
                    const CovarianceEstimate &cov) {
  const Matrix &theta = estimate.matrix;
  const int p = static_cast<int>(theta.rows());
  Eigen::LLT<Matrix> llt(theta);
  if (llt.info() != Eigen::Success)
    throw SolverError("kkt_residual: estimate is not positive definite", 0.0);
  const Matrix w = llt.solve(Matrix::Identity(p, p));

  const auto table = slot_table(p);
  double on_pattern = 0.0;
  for (int i = 0; i < p; ++i)
    on_pattern = std::max(on_pattern, std::abs(w(i, i) - cov.matrix(i, i)));
  double off_pattern = 0.0;
  for (int k = 0; k < estimate.pattern.slots(); ++k) {
    const auto &[i, j] = table[k];
    if (estimate.pattern.test(k))
      on_pattern = std::max(on_pattern, std::abs(w(i, j) - cov.matrix(i, j)));
    else
      off_pattern = std::max(off_pattern, std::abs(theta(i, j)));
  }
  return on_pattern + off_pattern;
}

}  // namespace ges
