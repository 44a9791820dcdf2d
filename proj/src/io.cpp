// ges/io.cpp

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

#include "ges/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ges/edge_index.hpp"

namespace ges {

std::string format_double(double v) {
  char buf[40];
  for (int digits = 1; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_matrix_csv_stream(std::ostream &out, const Matrix &m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

Matrix read_matrix_csv_stream(std::istream &in, const std::string &origin) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    int col = 0;
    while (std::getline(ls, cell, ',')) {
      ++col;
      char *end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      // Allow surrounding whitespace but nothing else.
      while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
      if (cell.empty() || !end || *end != '\0')
        throw DataError(origin + ": non-numeric cell at row " +
                        std::to_string(line_no) + ", column " +
                        std::to_string(col) + " ('" + cell + "')");
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw DataError(origin + ": ragged row " + std::to_string(line_no) +
                      " (expected " + std::to_string(rows.front().size()) +
                      " columns, found " + std::to_string(row.size()) + ")");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError(origin + ": no data rows");
  Matrix m(static_cast<Index>(rows.size()),
           static_cast<Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.front().size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return m;
}

void write_matrix_csv(const std::string &path, const Matrix &m) {
  std::ofstream out(path);
  if (!out) throw DataError("write_matrix_csv: cannot open " + path);
  write_matrix_csv_stream(out, m);
  if (!out) throw DataError("write_matrix_csv: write failed for " + path);
}

Matrix read_matrix_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("read_matrix_csv: cannot open " + path);
  return read_matrix_csv_stream(in, path);
}

void write_edge_list(const std::string &path, const Matrix &values,
                     double tol) {
  std::ofstream out(path);
  if (!out) throw DataError("write_edge_list: cannot open " + path);
  const int p = static_cast<int>(values.rows());
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (std::abs(values(i, j)) > tol)
        out << (i + 1) << ' ' << (j + 1) << ' ' << format_double(values(i, j))
            << '\n';
  if (!out) throw DataError("write_edge_list: write failed for " + path);
}

void write_edge_list(const std::string &path, int p,
                     const std::vector<int> &slots,
                     const std::vector<double> &values) {
  if (!values.empty() && values.size() != slots.size())
    throw ConfigError("write_edge_list: slots/values size mismatch");
  std::ofstream out(path);
  if (!out) throw DataError("write_edge_list: cannot open " + path);
  for (std::size_t t = 0; t < slots.size(); ++t) {
    const auto [i, j] = edge_from_slot(slots[t], p);
    out << i << ' ' << j;
    if (!values.empty()) out << ' ' << format_double(values[t]);
    out << '\n';
  }
  if (!out) throw DataError("write_edge_list: write failed for " + path);
}

}  // namespace ges
