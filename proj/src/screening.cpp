// ges/screening.cpp

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

#include "ges/screening.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "ges/edge_index.hpp"
#include "ges/io.hpp"
#include "ges/stats.hpp"

namespace ges {

namespace {

double soft(double x, double lambda) {
  if (x > lambda) return x - lambda;
  if (x < -lambda) return x + lambda;
  return 0.0;
}

// State carried across warm-started fits: the dual iterate w and the lasso
// coefficients per column.
struct GlassoState {
  Matrix w;
  Matrix beta;  // beta(k, j): coefficient of variable k in column j's lasso
};

GlassoFit glasso_core(const Matrix &s, double lambda, double tol, int max_iter,
                      GlassoState &state) {
  const int p = static_cast<int>(s.rows());
  GlassoFit fit;
  fit.lambda = lambda;

  if (p == 1) {
    fit.theta = Matrix::Constant(1, 1, 1.0 / s(0, 0));
    fit.w = s;
    fit.converged = true;
    fit.dual_objective_trace.push_back(std::log(s(0, 0)));
    return fit;
  }

  Matrix &w = state.w;
  Matrix &beta = state.beta;

  // Scratch for the (p-1)-sized row subproblem.
  Matrix v(p - 1, p - 1);
  Vector y(p - 1), b(p - 1), w12(p - 1);

  const double scale = std::max({max_abs_offdiag(s), s.diagonal().maxCoeff(),
                                 1e-12});
  const double inner_tol = 0.1 * std::min(tol, 1e-4 * scale);
  const int inner_max = 100;

  int sweeps = 0;
  bool converged = false;
  while (sweeps < max_iter) {
    double max_change = 0.0;
    for (int j = 0; j < p; ++j) {
      // Compact copies of w and s with row/column j deleted.
      for (int a = 0, ai = 0; a < p; ++a) {
        if (a == j) continue;
        y(ai) = s(a, j);
        b(ai) = beta(a, j);
        for (int c = 0, ci = 0; c < p; ++c) {
          if (c == j) continue;
          v(ai, ci) = w(a, c);
          ++ci;
        }
        ++ai;
      }

      if (lambda == 0.0) {
        // Unpenalized block: exact solve.
        b = Eigen::LLT<Matrix>(v).solve(y);
      } else {
        for (int it = 0; it < inner_max; ++it) {
          double inner_change = 0.0;
          for (int k = 0; k < p - 1; ++k) {
            const double g = y(k) - (v.row(k).dot(b) - v(k, k) * b(k));
            const double nb = soft(g, lambda) / v(k, k);
            inner_change = std::max(inner_change, std::abs(nb - b(k)));
            b(k) = nb;
          }
          if (inner_change < inner_tol) break;
        }
      }

      w12.noalias() = v * b;
      for (int a = 0, ai = 0; a < p; ++a) {
        if (a == j) continue;
        max_change = std::max(max_change, std::abs(w(a, j) - w12(ai)));
        w(a, j) = w12(ai);
        w(j, a) = w12(ai);
        beta(a, j) = b(ai);
        ++ai;
      }
    }
    ++sweeps;

    Eigen::LLT<Matrix> llt(w);
    if (llt.info() != Eigen::Success) {
      // Dual iterate left the PD cone numerically; report nonconvergence.
      fit.iterations = sweeps;
      break;
    }
    fit.dual_objective_trace.push_back(
        2.0 * llt.matrixLLT().diagonal().array().log().sum());

    if (max_change < tol) {
      converged = true;
      fit.iterations = sweeps;
      break;
    }
    fit.iterations = sweeps;
  }

  // Primal reconstruction from the column coefficients; zeros are exact.
  Matrix theta = Matrix::Zero(p, p);
  for (int j = 0; j < p; ++j) {
    double quad = 0.0;
    for (int a = 0; a < p; ++a)
      if (a != j) quad += w(a, j) * beta(a, j);
    const double tjj = 1.0 / (w(j, j) - quad);
    theta(j, j) = tjj;
    for (int a = 0; a < p; ++a)
      if (a != j) theta(a, j) = -beta(a, j) * tjj;
  }
  fit.theta = ((theta + theta.transpose()) * 0.5).eval();
  fit.w = w;
  fit.converged = converged;

  double l1_off = 0.0;
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < p; ++i)
      if (i != j) l1_off += std::abs(fit.theta(i, j));
  fit.dual_gap = std::abs(s.cwiseProduct(fit.theta).sum() + lambda * l1_off -
                          static_cast<double>(p));
  return fit;
}

GlassoState fresh_state(const Matrix &s) {
  GlassoState state;
  state.w = s;
  Eigen::LLT<Matrix> llt(state.w);
  if (llt.info() != Eigen::Success) {
    // Singular start; nudge the diagonal so block solves are defined.
    const double jitter =
        1e-8 * std::max(1.0, s.diagonal().maxCoeff());
    state.w.diagonal().array() += jitter;
  }
  state.beta = Matrix::Zero(s.rows(), s.cols());
  return state;
}

void validate_cov(const CovarianceEstimate &cov, const char *who) {
  if (cov.matrix.rows() != cov.matrix.cols())
    throw ConfigError(std::string(who) + ": covariance must be square");
  for (int i = 0; i < cov.order(); ++i)
    if (!(cov.matrix(i, i) > 0.0))
      throw ConfigError(std::string(who) +
                        ": covariance diagonal must be strictly positive");
}

}  // namespace

GlassoFit glasso_fit(const CovarianceEstimate &cov, double lambda, double tol,
                     int max_iter) {
  if (lambda < 0.0) throw ConfigError("glasso_fit: lambda must be >= 0");
  validate_cov(cov, "glasso_fit");
  GlassoState state = fresh_state(cov.matrix);
  return glasso_core(cov.matrix, lambda, tol, max_iter, state);
}

std::string to_string(ScreenMethod method) {
  return method == ScreenMethod::Glasso ? "glasso" : "corr_threshold";
}

ScreenResult prescreen(const Matrix &d1, ScreenMethod method, double param,
                       int max_candidates) {
  const CovarianceEstimate cov = empirical_covariance(d1);
  const int p = cov.order();

  std::vector<int> slots;
  std::vector<double> stats;
  if (method == ScreenMethod::Glasso) {
    const GlassoFit fit = glasso_fit(cov, param);
    int k = 0;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j, ++k)
        if (fit.theta(i, j) != 0.0) {
          slots.push_back(k);
          stats.push_back(std::abs(fit.theta(i, j)));
        }
  } else {
    int k = 0;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j, ++k) {
        const double r = cov.matrix(i, j) /
                         std::sqrt(cov.matrix(i, i) * cov.matrix(j, j));
        if (std::abs(r) >= param) {
          slots.push_back(k);
          stats.push_back(std::abs(r));
        }
      }
  }

  if (max_candidates >= 0 &&
      static_cast<int>(slots.size()) > max_candidates) {
    std::vector<std::size_t> order(slots.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (stats[a] != stats[b]) return stats[a] > stats[b];
      return slots[a] < slots[b];
    });
    order.resize(static_cast<std::size_t>(max_candidates));
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return slots[a] < slots[b]; });
    std::vector<int> kept_slots;
    std::vector<double> kept_stats;
    for (std::size_t idx : order) {
      kept_slots.push_back(slots[idx]);
      kept_stats.push_back(stats[idx]);
    }
    slots = std::move(kept_slots);
    stats = std::move(kept_stats);
  }

  ScreenResult out;
  out.candidates = std::move(slots);
  out.statistics = std::move(stats);
  out.method = method;
  out.param = param;
  return out;
}

std::vector<int> pcor_test(const Matrix &x, double alpha) {
  const int n = static_cast<int>(x.rows());
  const int p = static_cast<int>(x.cols());
  if (n <= p + 2)
    throw ConfigError("pcor_test: full-order partial correlations need "
                      "n > p + 2, got n=" + std::to_string(n) + ", p=" +
                      std::to_string(p));
  const CovarianceEstimate cov = empirical_covariance(x);
  Eigen::LLT<Matrix> llt(cov.matrix);
  if (llt.info() != Eigen::Success)
    throw SolverError("pcor_test: singular empirical covariance; the test "
                      "is only usable at n > p", 0.0);
  const Matrix theta = llt.solve(Matrix::Identity(p, p));

  const double df = static_cast<double>(n - p - 1);
  const double cutoff = alpha / static_cast<double>(num_edge_slots(p));
  std::vector<int> out;
  int k = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j, ++k) {
      double rho = -theta(i, j) / std::sqrt(theta(i, i) * theta(j, j));
      rho = std::clamp(rho, -1.0 + 1e-12, 1.0 - 1e-12);
      const double z = std::atanh(rho) * std::sqrt(df);
      const double pval = std::erfc(std::abs(z) / 1.4142135623730950488);
      if (pval < cutoff) out.push_back(k);
    }
  return out;
}

std::vector<GlassoPathPoint> glasso_path(const CovarianceEstimate &cov,
                                         const std::vector<double> &lambdas,
                                         double tol, int max_iter) {
  validate_cov(cov, "glasso_path");
  GlassoState state = fresh_state(cov.matrix);
  std::vector<GlassoPathPoint> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    if (lambda < 0.0) throw ConfigError("glasso_path: lambda must be >= 0");
    const GlassoFit fit = glasso_core(cov.matrix, lambda, tol, max_iter, state);
    GlassoPathPoint pt;
    pt.lambda = lambda;
    pt.edges = SparsityPattern::from_matrix_support(fit.theta).count();
    double l1_off = 0.0;
    for (int j = 0; j < fit.theta.cols(); ++j)
      for (int i = 0; i < fit.theta.rows(); ++i)
        if (i != j) l1_off += std::abs(fit.theta(i, j));
    pt.objective = -logdet_spd(fit.theta) +
                   cov.matrix.cwiseProduct(fit.theta).sum() + lambda * l1_off;
    out.push_back(pt);
  }
  return out;
}

void write_glasso_path_csv(const std::string &path,
                           const std::vector<GlassoPathPoint> &points) {
  std::ofstream out(path);
  if (!out) throw DataError("write_glasso_path_csv: cannot open " + path);
  out << "lambda,edges,objective\n";
  for (const auto &pt : points)
    out << format_double(pt.lambda) << ',' << pt.edges << ','
        << format_double(pt.objective) << '\n';
}

void write_screen_result(const std::string &path, int p,
                         const ScreenResult &screen) {
  write_edge_list(path, p, screen.candidates, screen.statistics);
}

GlassoCv glasso_cv_lambda(const Matrix &x, const std::vector<double> &grid,
                          int folds, Rng &rng, double tol, int max_iter) {
  const int n = static_cast<int>(x.rows());
  if (folds < 2) throw ConfigError("glasso_cv_lambda: need at least 2 folds");
  if (n < folds)
    throw ConfigError("glasso_cv_lambda: fewer rows than folds");
  if (grid.empty()) throw ConfigError("glasso_cv_lambda: empty penalty grid");

  // Fold of a row = its position modulo `folds` after one shuffle.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j =
        static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(j)]);
  }

  std::vector<double> score(grid.size(), 0.0);
  for (int f = 0; f < folds; ++f) {
    std::vector<int> train, test;
    for (int pos = 0; pos < n; ++pos)
      (pos % folds == f ? test : train).push_back(order[static_cast<std::size_t>(pos)]);
    Matrix xtr(static_cast<Index>(train.size()), x.cols());
    Matrix xte(static_cast<Index>(test.size()), x.cols());
    for (std::size_t i = 0; i < train.size(); ++i)
      xtr.row(static_cast<Index>(i)) = x.row(train[i]);
    for (std::size_t i = 0; i < test.size(); ++i)
      xte.row(static_cast<Index>(i)) = x.row(test[i]);

    const Matrix strain = empirical_covariance(xtr).matrix;
    const Matrix stest = empirical_covariance(xte).matrix;
    GlassoState state = fresh_state(strain);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const GlassoFit fit = glasso_core(strain, grid[g], tol, max_iter, state);
      score[g] += logdet_spd(fit.theta) - stest.cwiseProduct(fit.theta).sum();
    }
  }
  for (double &s : score) s /= static_cast<double>(folds);

  std::size_t best = 0;
  for (std::size_t g = 1; g < grid.size(); ++g)
    if (score[g] > score[best]) best = g;

  GlassoCv cv;
  cv.lambda = grid[best];
  cv.grid = grid;
  cv.mean_loglik = std::move(score);
  return cv;
}

std::vector<double> default_lambda_grid(const CovarianceEstimate &cov,
                                        int size, double ratio) {
  if (size < 1) throw ConfigError("default_lambda_grid: size must be >= 1");
  const double top = std::max(max_abs_offdiag(cov.matrix), 1e-12);
  std::vector<double> grid(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    const double f = size == 1 ? 1.0
                               : std::pow(ratio, static_cast<double>(i) /
                                                     (size - 1));
    grid[static_cast<std::size_t>(i)] = top * f;
  }
  return grid;  // descending, for warm starts
}

}  // namespace ges
