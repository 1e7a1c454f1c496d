/******************************************************************************
 *
 * Copyright (c) 2026, the markovds project developers.
 * See the top-level LICENSE file for details.
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 *****************************************************************************/

#include "markovds/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace markovds {

CsvParseError::CsvParseError(const std::string& what, std::size_t row, std::size_t column)
    : std::runtime_error(what + " (row " + std::to_string(row) + ", column " +
                         std::to_string(column) + ")"),
      row_(row),
      column_(column) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return cells;
}

double parse_cell(std::string_view cell, std::size_t row, std::size_t column) {
  if (cell.empty()) throw CsvParseError("empty cell", row, column);
  std::string_view body = cell;
  if (body.front() == '+') body.remove_prefix(1);  // from_chars rejects a leading '+'
  double value = 0.0;
  const char* end = body.data() + body.size();
  auto [ptr, ec] = std::from_chars(body.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw CsvParseError("non-numeric cell '" + std::string(cell) + "'", row, column);
  if (!std::isfinite(value))
    throw CsvParseError("non-finite cell '" + std::string(cell) + "'", row, column);
  return value;
}

}  // namespace

CsvTable read_numeric_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file '" + path.string() + "'");

  CsvTable table;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (row == 1) {
      std::set<std::string_view> seen;
      for (auto cell : split_cells(line)) {
        if (cell.empty())
          throw CsvParseError("empty channel name in header", 1, table.header.size() + 1);
        if (!seen.insert(cell).second)
          throw CsvParseError("duplicate channel name '" + std::string(cell) + "'", 1,
                              table.header.size() + 1);
        table.header.emplace_back(cell);
      }
      continue;
    }
    if (trim(line).empty()) continue;  // tolerate blank trailing lines
    auto cells = split_cells(line);
    if (cells.size() != table.header.size())
      throw CsvParseError("expected " + std::to_string(table.header.size()) + " cells, got " +
                              std::to_string(cells.size()),
                          row, cells.size());
    std::vector<double> values;
    values.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      values.push_back(parse_cell(cells[c], row, c + 1));
    table.rows.push_back(std::move(values));
  }
  if (row == 0) throw CsvParseError("empty file, missing header", 1, 1);
  return table;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string join_csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

}  // namespace markovds
