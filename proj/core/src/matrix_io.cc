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


#include "sdmm/matrix_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "sdmm/error.h"

namespace sdmm {

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next line without its terminating '\n'; kParseError if the text ends
  // without one.
  std::string_view Next() {
    SDMM_ENFORCE(pos_ < text_.size(), ErrorCode::kParseError,
                 "unexpected end of matrix file at line " +
                     std::to_string(line_ + 1));
    const std::size_t end = text_.find('\n', pos_);
    SDMM_ENFORCE(end != std::string_view::npos, ErrorCode::kParseError,
                 "line " + std::to_string(line_ + 1) +
                     " is missing its trailing newline");
    std::string_view line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++line_;
    return line;
  }

  bool AtEnd() const { return pos_ == text_.size(); }
  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::vector<std::uint64_t> ParseFields(std::string_view line,
                                       std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    std::uint64_t v = 0;
    const char* begin = line.data() + i;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    SDMM_ENFORCE(ec == std::errc() && (ptr == end || *ptr == ' '),
                 ErrorCode::kParseError,
                 "line " + std::to_string(line_no) +
                     ": expected a nonnegative decimal integer");
    out.push_back(v);
    i += static_cast<std::size_t>(ptr - begin);
  }
  return out;
}

}  // namespace

FieldMatrix ParseMatrix(std::string_view text) {
  LineReader reader(text);
  const auto header = ParseFields(reader.Next(), 1);
  SDMM_ENFORCE(header.size() == 3, ErrorCode::kParseError,
               "header must be 'rows cols q'");
  const std::uint64_t rows = header[0];
  const std::uint64_t cols = header[1];
  SDMM_ENFORCE(rows > 0 && cols > 0, ErrorCode::kParseError,
               "matrix dimensions must be positive");
  const PrimeField field(header[2]);
  std::vector<std::uint64_t> entries;
  entries.reserve(rows * cols);
  for (std::uint64_t r = 0; r < rows; ++r) {
    const auto values = ParseFields(reader.Next(), reader.line());
    SDMM_ENFORCE(values.size() == cols, ErrorCode::kParseError,
                 "line " + std::to_string(reader.line()) + ": expected " +
                     std::to_string(cols) + " entries, got " +
                     std::to_string(values.size()));
    for (std::uint64_t v : values) {
      SDMM_ENFORCE(v < field.modulus(), ErrorCode::kParseError,
                   "line " + std::to_string(reader.line()) + ": entry " +
                       std::to_string(v) + " is not in [0, q)");
      entries.push_back(v);
    }
  }
  SDMM_ENFORCE(reader.AtEnd(), ErrorCode::kParseError,
               "trailing content after the last matrix row");
  return FieldMatrix(field, rows, cols, std::move(entries));
}

std::string FormatMatrix(const FieldMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << ' ' << m.field().modulus() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ' ';
      os << m.at(r, c);
    }
    os << '\n';
  }
  return os.str();
}

FieldMatrix ReadMatrixFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  SDMM_ENFORCE(in.good(), ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseMatrix(buf.str());
  } catch (const Error& e) {
    Throw(e.code(), path + ": " + e.detail());
  }
}

void WriteMatrixFile(const std::string& path, const FieldMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  SDMM_ENFORCE(out.good(), ErrorCode::kInvalidArgument,
               "cannot write " + path);
  out << FormatMatrix(m);
  SDMM_ENFORCE(out.good(), ErrorCode::kInvalidArgument,
               "write failed for " + path);
}

}  // namespace sdmm
