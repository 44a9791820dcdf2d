// ges/covariance.cpp

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

#include "ges/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ges/io.hpp"

namespace ges {

std::string to_string(CovKind kind) {
  return kind == CovKind::Empirical ? "empirical" : "thresholded";
}

CovKind cov_kind_from_string(const std::string &name) {
  if (name == "empirical") return CovKind::Empirical;
  if (name == "thresholded") return CovKind::Thresholded;
  throw DataError("unknown covariance kind '" + name + "'");
}

CovarianceEstimate empirical_covariance(const Matrix &x) {
  if (x.rows() == 0 || x.cols() == 0)
    throw DataError("empirical_covariance: empty data matrix");
  const int n = static_cast<int>(x.rows());
  const int p = static_cast<int>(x.cols());
  Matrix s = Matrix::Zero(p, p);
  s.selfadjointView<Eigen::Lower>().rankUpdate(x.transpose(),
                                               1.0 / static_cast<double>(n));
  CovarianceEstimate cov;
  cov.matrix = symmetrize_lower(s);
  cov.n = n;
  cov.kind = CovKind::Empirical;
  return cov;
}

CovarianceEstimate hard_threshold(const CovarianceEstimate &cov, double gamma) {
  if (gamma < 0.0)
    throw ConfigError("hard_threshold: gamma must be >= 0, got " +
                      std::to_string(gamma));
  CovarianceEstimate out;
  out.matrix = cov.matrix;
  const int p = cov.order();
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < p; ++i)
      if (i != j && std::abs(out.matrix(i, j)) < gamma) out.matrix(i, j) = 0.0;
  out.n = cov.n;
  out.kind = CovKind::Thresholded;
  out.gamma = gamma;
  return out;
}

std::vector<double> default_threshold_grid(const CovarianceEstimate &cov,
                                           int size) {
  if (size < 1) throw ConfigError("default_threshold_grid: size must be >= 1");
  const double top = max_abs_offdiag(cov.matrix);
  std::vector<double> grid(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i)
    grid[static_cast<std::size_t>(i)] =
        size == 1 ? 0.0 : top * static_cast<double>(i) / (size - 1);
  return grid;
}

namespace {

// || T_gamma(a) - b ||_F^2 with the off-diagonal-only threshold convention.
double threshold_criterion(const Matrix &a, const Matrix &b, double gamma) {
  const int p = static_cast<int>(a.rows());
  double s = 0.0;
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < p; ++i) {
      const double aij = (i != j && std::abs(a(i, j)) < gamma) ? 0.0 : a(i, j);
      const double d = aij - b(i, j);
      s += d * d;
    }
  return s;
}

}  // namespace

ThresholdSelection select_threshold(const Matrix &d2, int B,
                                    std::vector<double> grid, Rng &rng) {
  const int n2 = static_cast<int>(d2.rows());
  if (n2 < 8)
    throw ConfigError("select_threshold: need n2 >= 8 so both split pieces are "
                      "nonempty, got n2=" + std::to_string(n2));
  if (B < 1) throw ConfigError("select_threshold: B must be >= 1");
  if (grid.empty()) throw ConfigError("select_threshold: empty threshold grid");

  const double logn = std::log(static_cast<double>(n2));
  const int piece1 = static_cast<int>(std::floor(n2 * (1.0 - 1.0 / logn)));
  const int piece2 = n2 - piece1;
  if (piece1 < 1 || piece2 < 1)
    throw ConfigError("select_threshold: degenerate split sizes at n2=" +
                      std::to_string(n2) + "; minimum supported n2 is 8");

  std::vector<double> scores(grid.size(), 0.0);
  std::vector<int> order(static_cast<std::size_t>(n2));
  for (int v = 0; v < B; ++v) {
    // Fresh Fisher-Yates shuffle per split.
    std::iota(order.begin(), order.end(), 0);
    for (int i = n2 - 1; i > 0; --i) {
      const int j = static_cast<int>(
          rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(order[static_cast<std::size_t>(i)],
                order[static_cast<std::size_t>(j)]);
    }
    Matrix x1(piece1, d2.cols()), x2(piece2, d2.cols());
    for (int i = 0; i < piece1; ++i)
      x1.row(i) = d2.row(order[static_cast<std::size_t>(i)]);
    for (int i = 0; i < piece2; ++i)
      x2.row(i) = d2.row(order[static_cast<std::size_t>(piece1 + i)]);
    const Matrix s1 = empirical_covariance(x1).matrix;
    const Matrix s2 = empirical_covariance(x2).matrix;
    for (std::size_t g = 0; g < grid.size(); ++g)
      scores[g] += threshold_criterion(s1, s2, grid[g]);
  }
  for (double &s : scores) s /= static_cast<double>(B);

  // Argmin with ties resolved toward the smallest gamma.
  std::size_t best = 0;
  for (std::size_t g = 1; g < grid.size(); ++g)
    if (scores[g] < scores[best] ||
        (scores[g] == scores[best] && grid[g] < grid[best]))
      best = g;

  ThresholdSelection sel;
  sel.gamma = grid[best];
  sel.splits = B;
  sel.piece1 = piece1;
  sel.piece2 = piece2;
  sel.grid = std::move(grid);
  sel.scores = std::move(scores);
  return sel;
}

void write_covariance_csv(const std::string &path,
                          const CovarianceEstimate &cov) {
  std::ofstream out(path);
  if (!out) throw DataError("write_covariance_csv: cannot open " + path);
  out << cov.order() << ',' << to_string(cov.kind) << ','
      << format_double(cov.gamma) << '\n';
  write_matrix_csv_stream(out, cov.matrix);
  if (!out) throw DataError("write_covariance_csv: write failed for " + path);
}

CovarianceEstimate read_covariance_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("read_covariance_csv: cannot open " + path);
  std::string header;
  if (!std::getline(in, header))
    throw DataError("read_covariance_csv: missing header in " + path);
  std::istringstream hs(header);
  std::string p_str, kind_str, gamma_str;
  if (!std::getline(hs, p_str, ',') || !std::getline(hs, kind_str, ',') ||
      !std::getline(hs, gamma_str, ','))
    throw DataError("read_covariance_csv: malformed header '" + header + "'");
  CovarianceEstimate cov;
  const int p = std::stoi(p_str);
  cov.kind = cov_kind_from_string(kind_str);
  cov.gamma = std::stod(gamma_str);
  cov.matrix = read_matrix_csv_stream(in, path);
  if (cov.matrix.rows() != p || cov.matrix.cols() != p)
    throw DataError("read_covariance_csv: header says p=" + std::to_string(p) +
                    " but matrix is " + std::to_string(cov.matrix.rows()) + "x" +
                    std::to_string(cov.matrix.cols()));
  return cov;
}

}  // namespace ges
