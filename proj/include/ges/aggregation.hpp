// ges/aggregation.hpp

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

#ifndef GES_AGGREGATION_HPP_
#define GES_AGGREGATION_HPP_

#include <cstdint>
#include <vector>

#include "ges/common.hpp"
#include "ges/constrained_mle.hpp"
#include "ges/covariance.hpp"
#include "ges/pattern_space.hpp"
#include "ges/priors.hpp"

namespace ges {

struct MHConfig {
  long burn_in = 1000;   // T0
  long samples = 4000;   // T
  std::uint64_t seed = 0;
  std::size_t cache_cap = 1024;   // fitted matrices kept per chain
  double trace_bound = 10.0;      // warn when max tr(theta_m)/p exceeds this
  double log_weight_shift = 0.0;  // diagnostic constant added to all log-weights
};

/// One chain iteration, for traces and diagnostics.
struct ChainStep {
  int edges = 0;          // |m_t|_1 after the accept/reject decision
  bool accepted = false;
  double log_weight = 0.0;
};

/// Output of either aggregation route. The exact route fills patterns /
/// weights; the chain route fills the trace and visit frequencies.
struct AggregationResult {
  Matrix estimate;
  std::size_t visited_patterns = 0;  // distinct patterns seen
  double acceptance_rate = 1.0;
  long nonconvergent_proposals = 0;  // chain: proposals auto-rejected
  long dropped_fits = 0;             // exact: members dropped, renormalized
  double max_trace_over_p = 0.0;
  bool trace_bound_exceeded = false;

  std::vector<ChainStep> trace;  // chain only, one entry per iteration
  Vector slot_frequency;         // chain only, visit share per slot (retained)

  std::vector<SparsityPattern> patterns;  // exact only
  std::vector<double> weights;            // exact only, normalized
  std::vector<double> log_weights;        // exact only, unnormalized
};

/// Unnormalized log aggregation weight of a fitted pattern:
/// (n2/2) (logdet theta - tr(theta S)) + log prior(|m|_1).
double log_weight_unnormalized(const PrecisionEstimate &theta,
                               const CovarianceEstimate &s, int n2,
                               const PriorSpec &prior);

/// Softmax through max-subtraction. Throws ConfigError on empty or
/// non-finite input; the output sums to one and preserves order.
std::vector<double> normalize_weights(const std::vector<double> &logw);

/// Exact aggregation by enumeration: fits every member pattern, weights it,
/// and returns the convex mixture. Patterns whose fit fails to converge are
/// dropped with renormalization (counted in dropped_fits); throws
/// SolverError when every fit fails.
AggregationResult exact_ges(const CovarianceEstimate &cov1,
                            const CovarianceEstimate &s, int n2,
                            const PatternSpace &space, const PriorSpec &prior,
                            const SolverConfig &solver_cfg = {},
                            std::size_t enumeration_cap = std::size_t(1) << 16);

/// Metropolis-Hastings approximation on the pattern hypercube: start at the
/// empty pattern, propose a uniform single-slot flip (candidate slots only,
/// for restricted spaces), accept with min{1, v'/v} evaluated in log space,
/// and average the fitted matrices over the T retained iterations.
/// Proposals whose fit fails are auto-rejected and counted. Deterministic
/// given mh.seed.
AggregationResult mh_run(const CovarianceEstimate &cov1,
                         const CovarianceEstimate &s, int n2,
                         const PatternSpace &space, const PriorSpec &prior,
                         const SolverConfig &solver_cfg, const MHConfig &mh);

/// Chain trace serialization: `iteration,edges,accepted,log_weight` rows.
void write_chain_trace_csv(const std::string &path,
                           const AggregationResult &result);

}  // namespace ges

#endif  // GES_AGGREGATION_HPP_
