// ges/priors.cpp

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

#include "ges/priors.hpp"

#include <cmath>

#include "ges/stats.hpp"

namespace ges {

PriorKind prior_kind_from_string(const std::string &name) {
  if (name == "complexity") return PriorKind::Complexity;
  if (name == "uniform") return PriorKind::Uniform;
  if (name == "flat") return PriorKind::Flat;
  throw ConfigError("unknown prior '" + name +
                    "' (expected complexity, uniform or flat)");
}

std::string to_string(PriorKind kind) {
  switch (kind) {
    case PriorKind::Complexity: return "complexity";
    case PriorKind::Uniform: return "uniform";
    case PriorKind::Flat: return "flat";
  }
  return "?";
}

double log_prior_unnormalized(int edge_count, const PriorSpec &prior) {
  const int p = prior.nodes;
  switch (prior.kind) {
    case PriorKind::Complexity: {
      if (edge_count == 0) return 0.0;
      const double s = static_cast<double>(edge_count);
      return s * (std::log(s) - 1.0 - std::log(static_cast<double>(p) * (p - 1)));
    }
    case PriorKind::Uniform: {
      const auto total = static_cast<std::uint64_t>(num_edge_slots(p));
      return -std::log(static_cast<double>(total) + 1.0) -
             log_binomial(total, static_cast<std::uint64_t>(edge_count));
    }
    case PriorKind::Flat:
      return 0.0;
  }
  return 0.0;
}

}  // namespace ges
