// ges/aggregation.cpp

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

#include "ges/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <list>
#include <unordered_map>
#include <unordered_set>

#include "ges/io.hpp"
#include "ges/rng.hpp"

namespace ges {

double log_weight_unnormalized(const PrecisionEstimate &theta,
                               const CovarianceEstimate &s, int n2,
                               const PriorSpec &prior) {
  if (n2 < 1) throw ConfigError("log_weight_unnormalized: n2 must be >= 1");
  const double fit_term = logdet_spd(theta.matrix) -
                          theta.matrix.cwiseProduct(s.matrix).sum();
  return 0.5 * static_cast<double>(n2) * fit_term +
         log_prior_unnormalized(theta.pattern, prior);
}

std::vector<double> normalize_weights(const std::vector<double> &logw) {
  if (logw.empty()) throw ConfigError("normalize_weights: empty weight list");
  double top = -std::numeric_limits<double>::infinity();
  for (double lw : logw) {
    if (!std::isfinite(lw))
      throw ConfigError("normalize_weights: non-finite log-weight");
    top = std::max(top, lw);
  }
  std::vector<double> w(logw.size());
  double total = 0.0;
  for (std::size_t i = 0; i < logw.size(); ++i) {
    w[i] = std::exp(logw[i] - top);
    total += w[i];
  }
  for (double &wi : w) wi /= total;
  return w;
}

namespace {

// Least-recently-used store for fitted matrices, keyed by pattern. The
// log-weight bookkeeping is unbounded (doubles only); matrices are the
// expensive part and are capped.
class FitCache {
 public:
  explicit FitCache(std::size_t cap) : cap_(std::max<std::size_t>(cap, 1)) {}

  const PrecisionEstimate *find(const SparsityPattern &m) {
    auto it = map_.find(m);
    if (it == map_.end()) return nullptr;
    order_.splice(order_.begin(), order_, it->second);
    return &it->second->second;
  }

  void insert(const SparsityPattern &m, PrecisionEstimate est) {
    auto it = map_.find(m);
    if (it != map_.end()) {
      it->second->second = std::move(est);
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.emplace_front(m, std::move(est));
    map_[m] = order_.begin();
    if (map_.size() > cap_) {
      map_.erase(order_.back().first);
      order_.pop_back();
    }
  }

 private:
  std::size_t cap_;
  std::list<std::pair<SparsityPattern, PrecisionEstimate>> order_;
  std::unordered_map<SparsityPattern,
                     decltype(order_)::iterator, PatternHash>
      map_;
};

void check_dims(const CovarianceEstimate &cov1, const CovarianceEstimate &s,
                const PatternSpace &space, const PriorSpec &prior) {
  const int p = space.nodes();
  if (cov1.order() != p || s.order() != p)
    throw ConfigError("aggregation: covariance order does not match the "
                      "pattern space node count");
  if (prior.nodes != p)
    throw ConfigError("aggregation: prior node count does not match the space");
}

AggregationResult degenerate_chain(const CovarianceEstimate &cov1,
                                   const CovarianceEstimate &s, int n2,
                                   const SparsityPattern &m,
                                   const PriorSpec &prior,
                                   const SolverConfig &solver_cfg,
                                   const MHConfig &mh) {
  PrecisionEstimate fit = fit_constrained_mle(cov1, m, solver_cfg);
  if (!fit.converged)
    throw SolverError("mh_run: the only member pattern failed to converge",
                      fit.kkt_residual);
  const double logw =
      log_weight_unnormalized(fit, s, n2, prior) + mh.log_weight_shift;

  AggregationResult result;
  const int p = m.nodes();
  result.estimate = fit.matrix;
  result.visited_patterns = 1;
  result.acceptance_rate = 1.0;
  result.max_trace_over_p = fit.matrix.trace() / p;
  result.trace.assign(static_cast<std::size_t>(mh.burn_in + mh.samples),
                      ChainStep{m.count(), true, logw});
  result.slot_frequency = Vector::Zero(m.slots());
  for (int k : m.edge_slots()) result.slot_frequency(k) = 1.0;
  return result;
}

}  // namespace

AggregationResult exact_ges(const CovarianceEstimate &cov1,
                            const CovarianceEstimate &s, int n2,
                            const PatternSpace &space, const PriorSpec &prior,
                            const SolverConfig &solver_cfg,
                            std::size_t enumeration_cap) {
  check_dims(cov1, s, space, prior);
  const auto members = space.enumerate(enumeration_cap);
  if (members.empty()) throw ConfigError("exact_ges: empty pattern space");

  AggregationResult result;
  std::vector<Matrix> kept;
  const int p = space.nodes();
  for (const auto &m : members) {
    PrecisionEstimate fit;
    try {
      fit = fit_constrained_mle(cov1, m, solver_cfg);
    } catch (const SolverError &) {
      ++result.dropped_fits;
      continue;
    }
    if (!fit.converged) {
      ++result.dropped_fits;
      continue;
    }
    result.log_weights.push_back(log_weight_unnormalized(fit, s, n2, prior));
    result.max_trace_over_p =
        std::max(result.max_trace_over_p, fit.matrix.trace() / p);
    result.patterns.push_back(m);
    kept.push_back(std::move(fit.matrix));
  }
  if (kept.empty())
    throw SolverError("exact_ges: every member pattern failed to fit", 0.0);

  result.weights = normalize_weights(result.log_weights);
  result.estimate = Matrix::Zero(p, p);
  for (std::size_t i = 0; i < kept.size(); ++i)
    result.estimate += result.weights[i] * kept[i];
  result.visited_patterns = kept.size();
  result.acceptance_rate = 1.0;
  return result;
}

AggregationResult mh_run(const CovarianceEstimate &cov1,
                         const CovarianceEstimate &s, int n2,
                         const PatternSpace &space, const PriorSpec &prior,
                         const SolverConfig &solver_cfg, const MHConfig &mh) {
  check_dims(cov1, s, space, prior);
  if (mh.samples < 1) throw ConfigError("mh_run: samples (T) must be >= 1");
  if (mh.burn_in < 0) throw ConfigError("mh_run: burn_in (T0) must be >= 0");

  const int p = space.nodes();

  if (space.kind() == PatternSpaceKind::Explicit) {
    const auto members = space.enumerate(std::numeric_limits<std::size_t>::max());
    if (members.size() == 1)
      return degenerate_chain(cov1, s, n2, members.front(), prior, solver_cfg,
                              mh);
    throw ConfigError("mh_run: explicit pattern lists are not a product space; "
                      "use exact_ges or a restricted space");
  }

  const std::vector<int> &slots = space.proposal_slots();
  if (slots.empty())
    return degenerate_chain(cov1, s, n2, SparsityPattern(p), prior, solver_cfg,
                            mh);

  Rng rng(mh.seed);
  FitCache cache(mh.cache_cap);
  std::unordered_map<SparsityPattern, double, PatternHash> log_weight_of;
  std::unordered_set<SparsityPattern, PatternHash> occupied;
  static constexpr double kFailed = -std::numeric_limits<double>::infinity();

  SparsityPattern current(p);
  PrecisionEstimate first = fit_constrained_mle(cov1, current, solver_cfg);
  if (!first.converged)
    throw SolverError("mh_run: initial empty-pattern fit did not converge",
                      first.kkt_residual);
  double current_logw =
      log_weight_unnormalized(first, s, n2, prior) + mh.log_weight_shift;
  Matrix current_matrix = first.matrix;
  log_weight_of[current] = current_logw;
  cache.insert(current, std::move(first));
  occupied.insert(current);

  AggregationResult result;
  result.max_trace_over_p = current_matrix.trace() / p;
  const long total = mh.burn_in + mh.samples;
  result.trace.reserve(static_cast<std::size_t>(total));
  result.slot_frequency = Vector::Zero(num_edge_slots(p));
  Matrix accum = Matrix::Zero(p, p);
  long accepted_count = 0;

  // Fits a pattern warm-started from the current state; returns nullptr on
  // nonconvergence. On success the estimate lands in the cache.
  auto fit_pattern = [&](const SparsityPattern &m) -> const PrecisionEstimate * {
    PrecisionEstimate fit;
    try {
      fit = fit_constrained_mle(cov1, m, solver_cfg, current_matrix);
    } catch (const SolverError &) {
      return nullptr;
    }
    if (!fit.converged) return nullptr;
    result.max_trace_over_p =
        std::max(result.max_trace_over_p, fit.matrix.trace() / p);
    cache.insert(m, std::move(fit));
    return cache.find(m);
  };

  for (long t = 1; t <= total; ++t) {
    SparsityPattern proposal = current;
    proposal.flip(slots[rng.uniform_below(slots.size())]);

    double proposal_logw = kFailed;
    auto known = log_weight_of.find(proposal);
    if (known != log_weight_of.end()) {
      proposal_logw = known->second;
      if (proposal_logw == kFailed) ++result.nonconvergent_proposals;
    } else {
      const PrecisionEstimate *fit = fit_pattern(proposal);
      if (fit == nullptr) {
        ++result.nonconvergent_proposals;
        log_weight_of[proposal] = kFailed;
      } else {
        proposal_logw =
            log_weight_unnormalized(*fit, s, n2, prior) + mh.log_weight_shift;
        log_weight_of[proposal] = proposal_logw;
      }
    }

    const double r = rng.uniform();
    bool accept = false;
    if (proposal_logw != kFailed) {
      const double log_ratio = proposal_logw - current_logw;
      accept = log_ratio >= 0.0 || r < std::exp(log_ratio);
    }

    if (accept) {
      const PrecisionEstimate *fit = cache.find(proposal);
      if (fit == nullptr) fit = fit_pattern(proposal);  // evicted; refit warm
      if (fit == nullptr) {
        accept = false;  // cannot materialize the state; treat as a rejection
        ++result.nonconvergent_proposals;
      } else {
        current = proposal;
        current_logw = proposal_logw;
        current_matrix = fit->matrix;
        occupied.insert(current);
        ++accepted_count;
      }
    }

    if (t > mh.burn_in) {
      accum += current_matrix;
      for (int k : current.edge_slots()) result.slot_frequency(k) += 1.0;
    }
    result.trace.push_back(ChainStep{current.count(), accept, current_logw});
  }

  result.estimate = accum / static_cast<double>(mh.samples);
  result.slot_frequency /= static_cast<double>(mh.samples);
  result.acceptance_rate =
      static_cast<double>(accepted_count) / static_cast<double>(total);
  result.visited_patterns = occupied.size();
  result.trace_bound_exceeded = result.max_trace_over_p > mh.trace_bound;
  return result;
}

void write_chain_trace_csv(const std::string &path,
                           const AggregationResult &result) {
  std::ofstream out(path);
  if (!out) throw DataError("write_chain_trace_csv: cannot open " + path);
  out << "iteration,edges,accepted,log_weight\n";
  for (std::size_t t = 0; t < result.trace.size(); ++t) {
    const ChainStep &step = result.trace[t];
    out << (t + 1) << ',' << step.edges << ',' << (step.accepted ? 1 : 0) << ','
        << format_double(step.log_weight) << '\n';
  }
  if (!out) throw DataError("write_chain_trace_csv: write failed for " + path);
}

}  // namespace ges
