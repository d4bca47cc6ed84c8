/* Copyright 2026 ecramsim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ecram {

/// Shortest decimal representation that round-trips the exact double.
std::string format_double(double value);

/// Parses a double, rejecting trailing garbage. Returns nullopt on failure.
std::optional<double> parse_double(const std::string& text);

struct CsvTable {
  std::vector<std::string> header;  // empty when the file had no header row
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;  // throws IoError if absent
};

/// Reads a comma separated file. A first row containing any non-numeric cell
/// is treated as the header.
CsvTable read_csv(const std::string& path);

/// Numeric view of a parsed row; throws IoError naming the 1-based line.
double csv_number(const CsvTable& table, std::size_t row, std::size_t col);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void write_row(const std::vector<double>& values);
  void write_row_mixed(const std::vector<std::string>& cells);
  void close();

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace ecram
