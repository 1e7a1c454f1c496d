/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

// Description: Strict numeric CSV reading and round-trip-exact writing.

#ifndef MARKOVDS_CSV_HPP
#define MARKOVDS_CSV_HPP

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace markovds {

/** Parse failure with a 1-based file position (the header is row 1). */
class CsvParseError : public std::runtime_error {
public:
  CsvParseError(const std::string& what, std::size_t row, std::size_t column);

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t row_;
  std::size_t column_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;  // every row has header.size() cells
};

/** Read a comma-separated file: one header row of names, then numeric rows.
 *  Rejects ragged rows, non-numeric or non-finite cells, and duplicate or
 *  empty column names. Scientific notation is accepted. */
CsvTable read_numeric_csv(const std::filesystem::path& path);

/** Shortest decimal form that parses back to exactly the same double. */
std::string format_double(double value);

/** Join cells with commas; no quoting (cells must not contain commas). */
std::string join_csv_row(const std::vector<std::string>& cells);

}  // namespace markovds

#endif  // MARKOVDS_CSV_HPP
