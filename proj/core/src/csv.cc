// Copyright 2026 The sdmm-pre Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sdmm/csv.h"

#include <algorithm>
#include <sstream>

#include "sdmm/error.h"

namespace sdmm {

namespace {

std::vector<std::string> SplitFields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      return out;
    }
    out.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

void CheckField(const std::string& f) {
  SDMM_ENFORCE(f.find_first_of(",\n\r") == std::string::npos,
               ErrorCode::kInvalidArgument,
               "CSV field contains a separator: '" + f + "'");
}

void AppendLine(std::ostringstream& os, const std::vector<std::string>& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) os << ',';
    os << f[i];
  }
  os << '\n';
}

}  // namespace

std::size_t CsvTable::Column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  SDMM_ENFORCE(it != header.end(), ErrorCode::kParseError,
               "no CSV column named '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - header.begin());
}

CsvWriter::CsvWriter(std::vector<std::string> header) {
  SDMM_ENFORCE(!header.empty(), ErrorCode::kInvalidArgument,
               "CSV header must not be empty");
  for (const auto& h : header) CheckField(h);
  table_.header = std::move(header);
}

void CsvWriter::Comment(std::string_view text) {
  SDMM_ENFORCE(text.find('\n') == std::string_view::npos,
               ErrorCode::kInvalidArgument, "comment spans lines");
  table_.comments.emplace_back(text);
  inline_comments_.emplace_back(table_.rows.size(), std::string(text));
}

void CsvWriter::Row(std::vector<std::string> fields) {
  SDMM_ENFORCE(fields.size() == table_.header.size(),
               ErrorCode::kInvalidArgument,
               "CSV row has " + std::to_string(fields.size()) +
                   " fields, header has " +
                   std::to_string(table_.header.size()));
  for (const auto& f : fields) CheckField(f);
  table_.rows.push_back(std::move(fields));
}

std::string CsvWriter::str() const {
  std::ostringstream os;
  std::size_t next_comment = 0;
  auto flush_comments = [&](std::size_t before_row) {
    while (next_comment < inline_comments_.size() &&
           inline_comments_[next_comment].first <= before_row) {
      os << '#' << inline_comments_[next_comment].second << '\n';
      ++next_comment;
    }
  };
  flush_comments(0);
  AppendLine(os, table_.header);
  for (std::size_t r = 0; r < table_.rows.size(); ++r) {
    if (r > 0) flush_comments(r);
    AppendLine(os, table_.rows[r]);
  }
  flush_comments(table_.rows.size());
  return os.str();
}

CsvTable ParseCsv(std::string_view text) {
  CsvTable table;
  bool have_header = false;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    SDMM_ENFORCE(end != std::string_view::npos, ErrorCode::kParseError,
                 "CSV line " + std::to_string(line_no + 1) +
                     " lacks a trailing LF");
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    SDMM_ENFORCE(line.find('\r') == std::string_view::npos,
                 ErrorCode::kParseError, "CR in CSV line " +
                                             std::to_string(line_no));
    if (!line.empty() && line.front() == '#') {
      table.comments.emplace_back(line.substr(1));
      continue;
    }
    auto fields = SplitFields(line);
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    SDMM_ENFORCE(fields.size() == table.header.size(), ErrorCode::kParseError,
                 "CSV line " + std::to_string(line_no) + " has " +
                     std::to_string(fields.size()) + " fields, expected " +
                     std::to_string(table.header.size()));
    table.rows.push_back(std::move(fields));
  }
  SDMM_ENFORCE(have_header, ErrorCode::kParseError, "CSV header missing");
  return table;
}

}  // namespace sdmm
