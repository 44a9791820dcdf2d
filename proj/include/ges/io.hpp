// ges/io.hpp

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

#ifndef GES_IO_HPP_
#define GES_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "ges/common.hpp"

namespace ges {

/// Shortest round-trippable decimal form of a double ("%.17g", trimmed to
/// "%.*g" with the fewest digits that parse back exactly). Pins report
/// bytes to the value, not the formatting state.
std::string format_double(double v);

void write_matrix_csv_stream(std::ostream &out, const Matrix &m);
Matrix read_matrix_csv_stream(std::istream &in, const std::string &origin);

/// Dense numeric CSV, one row per line, no header.
void write_matrix_csv(const std::string &path, const Matrix &m);
Matrix read_matrix_csv(const std::string &path);

/// Edge-list text format: one `i j value` line per kept entry of the upper
/// triangle (1-based vertices), keeping entries with |value| > tol.
void write_edge_list(const std::string &path, const Matrix &values,
                     double tol = 0.0);

/// Edge list for explicit slots with per-slot statistics.
void write_edge_list(const std::string &path, int p,
                     const std::vector<int> &slots,
                     const std::vector<double> &values);

}  // namespace ges

#endif  // GES_IO_HPP_
