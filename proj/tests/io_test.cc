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


#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "sdmm/csv.h"
#include "sdmm/error.h"
#include "sdmm/matrix_io.h"
#include "sdmm/rational.h"

namespace sdmm {
namespace {

ErrorCode ParseCode(const std::string& text) {
  try {
    ParseMatrix(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::kInternal;
}

TEST(MatrixIoTest, ExactFormat) {
  const PrimeField f(7);
  const FieldMatrix m = FieldMatrix::FromRows(f, {{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(FormatMatrix(m), "2 3 7\n1 2 3\n4 5 6\n");
  EXPECT_EQ(ParseMatrix("2 3 7\n1 2 3\n4 5 6\n"), m);
  EXPECT_EQ(ParseMatrix("1 1 7\n6\n"), FieldMatrix(f, 1, 1, {6}));
}

TEST(MatrixIoTest, RoundTripLargeField) {
  const PrimeField f;
  std::mt19937_64 rng(3);
  const FieldMatrix m = FieldMatrix::Random(f, 5, 4, rng);
  EXPECT_EQ(ParseMatrix(FormatMatrix(m)), m);
  const auto path = std::filesystem::temp_directory_path() / "sdmm_io_test.txt";
  WriteMatrixFile(path.string(), m);
  EXPECT_EQ(ReadMatrixFile(path.string()), m);
  std::filesystem::remove(path);
}

TEST(MatrixIoTest, RejectsMalformedInput) {
  EXPECT_EQ(ParseCode("1 1 7\n6"), ErrorCode::kParseError);  // no newline
  EXPECT_EQ(ParseCode("1 1 7\n7\n"), ErrorCode::kParseError);  // out of range
  EXPECT_EQ(ParseCode("1 2 7\n1\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("2 1 7\n1\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("1 1 7\n1\n2\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("1 1\n1\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("1 1 7\n-1\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("1 1 7\nx\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("0 1 7\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("1 1 8\n1\n"), ErrorCode::kNotPrime);
  EXPECT_EQ(ParseCode(""), ErrorCode::kParseError);
}

TEST(CsvTest, WriterLayout) {
  CsvWriter w({"T", "r", "N"});
  w.Comment(" series");
  w.Row({"1", "1", "2"});
  w.Comment(" skipped");
  w.Row({"2", "1", "4"});
  EXPECT_EQ(w.str(), "# series\nT,r,N\n1,1,2\n# skipped\n2,1,4\n");
  EXPECT_THROW(w.Row({"1"}), Error);
  EXPECT_THROW(w.Row({"1,2", "3", "4"}), Error);
}

TEST(CsvTest, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t cols = 1 + rng() % 5;
    std::vector<std::string> header;
    for (std::size_t c = 0; c < cols; ++c) header.push_back("c" + std::to_string(c));
    CsvWriter w(header);
    const std::size_t rows = rng() % 8;
    for (std::size_t r = 0; r < rows; ++r) {
      if (rng() % 4 == 0) w.Comment("note " + std::to_string(r));
      std::vector<std::string> row;
      for (std::size_t c = 0; c < cols; ++c) {
        row.push_back(rng() % 5 == 0 ? "" : std::to_string(rng() % 1000));
      }
      w.Row(row);
    }
    ASSERT_EQ(ParseCsv(w.str()), w.table());
  }
}

TEST(CsvTest, ParserRejections) {
  EXPECT_THROW(ParseCsv("# only a comment\n"), Error);
  EXPECT_THROW(ParseCsv("a,b\n1\n"), Error);
  EXPECT_THROW(ParseCsv("a,b\r\n1,2\r\n"), Error);
  EXPECT_THROW(ParseCsv("a,b\n1,2"), Error);
  const CsvTable t = ParseCsv("a,b\n1,2\n");
  EXPECT_EQ(t.Column("b"), 1u);
  EXPECT_THROW(t.Column("c"), Error);
}

TEST(RationalTest, ParseAndFormat) {
  EXPECT_EQ(ParseRational("0.6"), Rational(3, 5));
  EXPECT_EQ(ParseRational("3/4"), Rational(3, 4));
  EXPECT_EQ(ParseRational("-2"), Rational(-2));
  EXPECT_EQ(ParseRational("2.807"), Rational(2807, 1000));
  EXPECT_EQ(ParseRational(".5"), Rational(1, 2));
  EXPECT_THROW(ParseRational("abc"), Error);
  EXPECT_THROW(ParseRational("1/0"), Error);
  EXPECT_THROW(ParseRational(""), Error);
  EXPECT_EQ(FormatRational(Rational(13, 5)), "2.6");
  EXPECT_EQ(FormatRational(Rational(5, 2)), "2.5");
  EXPECT_EQ(FormatRational(Rational(7)), "7");
  EXPECT_EQ(FormatRational(Rational(-1, 8)), "-0.125");
  EXPECT_EQ(FormatRational(Rational(1, 3)), "1/3 (~0.333333)");
  EXPECT_EQ(Ceil(Rational(7, 2)), 4);
  EXPECT_EQ(Ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(Ceil(Rational(4)), 4);
}

}  // namespace
}  // namespace sdmm
