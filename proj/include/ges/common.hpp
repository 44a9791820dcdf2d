// ges/common.hpp

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

#ifndef GES_COMMON_HPP_
#define GES_COMMON_HPP_

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace ges {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Invalid user-supplied configuration (dimensions, ranges, enum values).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string &msg) : Error(msg) {}
};

/// Malformed input data (CSV parse failures, ragged rows, empty matrices).
class DataError : public Error {
 public:
  explicit DataError(const std::string &msg) : Error(msg) {}
};

/// Numerical failure inside a solver, carrying the last residual seen.
class SolverError : public Error {
 public:
  SolverError(const std::string &msg, double residual)
      : Error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Exact symmetrization: copies the lower triangle onto the upper one.
template <typename Derived>
Matrix symmetrize_lower(const Eigen::MatrixBase<Derived> &a) {
  Matrix s = a.template selfadjointView<Eigen::Lower>();
  return s;
}

/// Largest |a_ij| over i != j; zero for 1x1 matrices.
template <typename Derived>
double max_abs_offdiag(const Eigen::MatrixBase<Derived> &a) {
  double best = 0.0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (i != j) best = std::max(best, std::abs(static_cast<double>(a(i, j))));
  return best;
}

/// log det of a symmetric positive-definite matrix via Cholesky.
/// Throws SolverError if the factorization fails.
template <typename Derived>
double logdet_spd(const Eigen::MatrixBase<Derived> &a) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw SolverError("logdet_spd: matrix is not positive definite", 0.0);
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

/// True when the symmetric matrix admits a Cholesky factorization.
template <typename Derived>
bool is_positive_definite(const Eigen::MatrixBase<Derived> &a) {
  Eigen::LLT<Matrix> llt(a);
  return llt.info() == Eigen::Success;
}

}  // namespace ges

#endif  // GES_COMMON_HPP_
