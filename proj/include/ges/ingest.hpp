// ges/ingest.hpp

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

#ifndef GES_INGEST_HPP_
#define GES_INGEST_HPP_

#include <string>

#include "ges/common.hpp"

namespace ges {

enum class IngestTransform { None, NormalScore };

IngestTransform ingest_transform_from_string(const std::string &name);

/// Per-column normal scores: each value becomes Phi^{-1}(r/(n+1)) with r its
/// within-column rank (ties get the average rank), and the probability
/// argument Winsorized into [delta_n, 1 - delta_n],
/// delta_n = 1/(4 n^{1/4} sqrt(pi log n)). A constant column maps to zeros.
Matrix normal_scores(const Matrix &x);

/// Center each column and scale it to unit sample variance (n-1 divisor).
/// Columns with zero variance are centered only.
void standardize_columns(Matrix &x);

/// Load a rectangular numeric CSV (rows = samples) and apply the optional
/// transform, then optional standardization. Parse errors carry the row and
/// column location.
Matrix ingest_csv(const std::string &path, bool standardize,
                  IngestTransform transform);

}  // namespace ges

#endif  // GES_INGEST_HPP_
