// ges/covariance.hpp

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

#ifndef GES_COVARIANCE_HPP_
#define GES_COVARIANCE_HPP_

#include <string>
#include <vector>

#include "ges/common.hpp"
#include "ges/rng.hpp"

namespace ges {

enum class CovKind { Empirical, Thresholded };

std::string to_string(CovKind kind);
CovKind cov_kind_from_string(const std::string &name);

struct CovarianceEstimate {
  Matrix matrix;
  int n = 0;                          // sample count behind the estimate
  CovKind kind = CovKind::Empirical;
  double gamma = 0.0;                 // threshold, when kind == Thresholded

  int order() const { return static_cast<int>(matrix.rows()); }
};

/// (1/n) X^T X with no mean-centering (the sampling model is zero-mean).
/// Built through a self-adjoint rank update, so the result is exactly
/// symmetric. Throws DataError on empty input.
CovarianceEstimate empirical_covariance(const Matrix &x);

/// Entrywise hard threshold of the off-diagonal entries: keep sigma_ij when
/// |sigma_ij| >= gamma, else zero. The diagonal always passes through.
CovarianceEstimate hard_threshold(const CovarianceEstimate &cov, double gamma);

struct ThresholdSelection {
  double gamma = 0.0;
  int splits = 0;                 // B
  int piece1 = 0, piece2 = 0;     // split sizes used
  std::vector<double> grid;
  std::vector<double> scores;     // mean Frobenius criterion per grid point
};

/// Default candidate grid: `size` evenly spaced values from 0 to the largest
/// off-diagonal |sigma_ij| of cov.
std::vector<double> default_threshold_grid(const CovarianceEstimate &cov,
                                           int size = 20);

/// Resampling threshold selection on the second subsample: B random splits
/// into pieces of size floor(n2 (1 - 1/log n2)) and the remainder; each grid
/// gamma is scored by the mean squared Frobenius distance between the
/// thresholded piece-1 covariance and the raw piece-2 covariance. Ties go to
/// the smallest gamma. Requires n2 >= 8.
ThresholdSelection select_threshold(const Matrix &d2, int B,
                                    std::vector<double> grid, Rng &rng);

/// Serialization with a one-line `p,kind,gamma` header before the dense rows.
void write_covariance_csv(const std::string &path,
                          const CovarianceEstimate &cov);
CovarianceEstimate read_covariance_csv(const std::string &path);

}  // namespace ges

#endif  // GES_COVARIANCE_HPP_
