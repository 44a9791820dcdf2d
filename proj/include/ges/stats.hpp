// ges/stats.hpp

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

#ifndef GES_STATS_HPP_
#define GES_STATS_HPP_

#include <cstddef>
#include <vector>

namespace ges {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile (inverse CDF), Wichura's AS 241 algorithm.
/// Accurate to ~1e-15 on (0,1); returns +/-inf at the endpoints.
double normal_quantile(double p);

/// log of the binomial coefficient C(n, k) via lgamma.
double log_binomial(std::uint64_t n, std::uint64_t k);

/// Sample mean.
double mean(const std::vector<double> &xs);

/// Unbiased sample standard deviation (n-1 divisor); 0 for n < 2.
double sample_sd(const std::vector<double> &xs);

/// Standard error of the mean: sd / sqrt(n).
double standard_error(const std::vector<double> &xs);

}  // namespace ges

#endif  // GES_STATS_HPP_
