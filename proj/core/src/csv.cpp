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

#include "ecram/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ecram/errors.hpp"

namespace ecram {

std::string format_double(double value) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_double(const std::string& text) {
  std::string t = text;
  // trim
  auto b = t.find_first_not_of(" \t\r\n");
  auto e = t.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) return std::nullopt;
  t = t.substr(b, e - b + 1);
  const char* s = t.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0') return std::nullopt;
  return v;
}

std::size_t CsvTable::column(const std::string& name) const {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw IoError("csv: missing column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

namespace {
std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}
}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto cells = split_line(line);
    if (first) {
      first = false;
      bool numeric = true;
      for (const auto& c : cells)
        if (!c.empty() && !parse_double(c)) numeric = false;
      if (!numeric) {
        table.header = cells;
        continue;
      }
    }
    table.rows.push_back(cells);
  }
  return table;
}

double csv_number(const CsvTable& table, std::size_t row, std::size_t col) {
  const auto& cells = table.rows.at(row);
  if (col >= cells.size())
    throw IoError("csv: row " + std::to_string(row + 1) + " has only " +
                  std::to_string(cells.size()) + " columns");
  auto v = parse_double(cells[col]);
  if (!v)
    throw IoError("csv: non-numeric value '" + cells[col] + "' at row " +
                  std::to_string(row + 1) + ", column " + std::to_string(col + 1));
  return *v;
}

struct CsvWriter::Impl {
  std::ofstream out;
  std::string path;
};

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : impl_(new Impl) {
  impl_->path = path;
  impl_->out.open(path);
  if (!impl_->out) {
    delete impl_;
    throw IoError("cannot write '" + path + "'");
  }
  for (std::size_t i = 0; i < header.size(); ++i)
    impl_->out << (i ? "," : "") << header[i];
  impl_->out << '\n';
}

CsvWriter::~CsvWriter() {
  close();
  delete impl_;
}

void CsvWriter::write_row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    impl_->out << (i ? "," : "") << format_double(values[i]);
  impl_->out << '\n';
}

void CsvWriter::write_row_mixed(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    impl_->out << (i ? "," : "") << cells[i];
  impl_->out << '\n';
}

void CsvWriter::close() {
  if (impl_->out.is_open()) {
    impl_->out.flush();
    if (!impl_->out) throw IoError("write failed for '" + impl_->path + "'");
    impl_->out.close();
  }
}

}  // namespace ecram
