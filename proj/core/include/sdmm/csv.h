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


// Minimal CSV used for every machine-readable report: LF line endings,
// '#' comment lines, a mandatory header row, no quoting. Fields must not
// contain commas or newlines.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sdmm {

struct CsvTable {
  std::vector<std::string> comments;  // without the leading '#'
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column; kParseError if absent.
  std::size_t Column(std::string_view name) const;

  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void Comment(std::string_view text);
  // kInvalidArgument on a width mismatch or a field containing ',' or '\n'.
  void Row(std::vector<std::string> fields);

  // Comments written before the first row appear before the header.
  std::string str() const;
  const CsvTable& table() const { return table_; }

 private:
  CsvTable table_;
  std::vector<std::pair<std::size_t, std::string>> inline_comments_;
};

// Comment lines may appear anywhere; they are collected in order. Every
// data row must have as many fields as the header. kParseError otherwise.
CsvTable ParseCsv(std::string_view text);

}  // namespace sdmm
