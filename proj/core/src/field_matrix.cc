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

#include "sdmm/field_matrix.h"

#include <algorithm>
#include <string>

#include "sdmm/error.h"

namespace sdmm {

namespace {

std::string Shape(const FieldMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

void RequireSameField(const FieldMatrix& a, const FieldMatrix& b) {
  SDMM_ENFORCE(a.field() == b.field(), ErrorCode::kFieldMismatch,
               "matrices over F_" + std::to_string(a.field().modulus()) +
                   " and F_" + std::to_string(b.field().modulus()));
}

void RequireSameShape(const FieldMatrix& a, const FieldMatrix& b) {
  RequireSameField(a, b);
  SDMM_ENFORCE(a.rows() == b.rows() && a.cols() == b.cols(),
               ErrorCode::kDimensionMismatch,
               "shapes " + Shape(a) + " and " + Shape(b));
}

FieldMatrix::FieldMatrix(const PrimeField& field, std::size_t rows,
                         std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  SDMM_ENFORCE(rows > 0 && cols > 0, ErrorCode::kDimensionMismatch,
               "matrix dimensions must be positive");
}

FieldMatrix::FieldMatrix(const PrimeField& field, std::size_t rows,
                         std::size_t cols, std::vector<std::uint64_t> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  SDMM_ENFORCE(rows > 0 && cols > 0, ErrorCode::kDimensionMismatch,
               "matrix dimensions must be positive");
  SDMM_ENFORCE(data_.size() == rows * cols, ErrorCode::kDimensionMismatch,
               "expected " + std::to_string(rows * cols) + " entries, got " +
                   std::to_string(data_.size()));
  for (auto& v : data_) v = field_.Reduce(v);
}

FieldMatrix FieldMatrix::FromRows(
    const PrimeField& field,
    std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<std::uint64_t> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    SDMM_ENFORCE(row.size() == c, ErrorCode::kDimensionMismatch,
                 "ragged row list");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return FieldMatrix(field, r, c, std::move(entries));
}

FieldMatrix FieldMatrix::Identity(const PrimeField& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % field.modulus();
  return m;
}

FieldMatrix FieldMatrix::Random(const PrimeField& field, std::size_t rows,
                                std::size_t cols, std::mt19937_64& rng) {
  FieldMatrix m(field, rows, cols);
  for (auto& v : m.data_) v = field.Sample(rng);
  return m;
}

bool FieldMatrix::IsZero() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint64_t v) { return v == 0; });
}

FieldMatrix FieldMatrix::Block(std::size_t row0, std::size_t col0,
                               std::size_t rows, std::size_t cols) const {
  SDMM_ENFORCE(row0 + rows <= rows_ && col0 + cols <= cols_,
               ErrorCode::kDimensionMismatch,
               "block out of range of " + Shape(*this));
  FieldMatrix out(field_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((row0 + r) * cols_ + col0), cols,
                out.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return out;
}

FieldMatrix FieldMatrix::Scaled(std::uint64_t factor) const {
  FieldMatrix out = *this;
  factor = field_.Reduce(factor);
  for (auto& v : out.data_) v = field_.Mul(v, factor);
  return out;
}

void FieldMatrix::AddScaled(const FieldMatrix& other, std::uint64_t factor) {
  RequireSameShape(*this, other);
  factor = field_.Reduce(factor);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] = field_.Add(data_[i], field_.Mul(other.data_[i], factor));
  }
}

FieldMatrix FieldMatrix::VConcat(std::span<const FieldMatrix> blocks) {
  SDMM_ENFORCE(!blocks.empty(), ErrorCode::kDimensionMismatch,
               "nothing to concatenate");
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    RequireSameField(blocks.front(), b);
    SDMM_ENFORCE(b.cols() == blocks.front().cols(),
                 ErrorCode::kDimensionMismatch, "column counts differ");
    rows += b.rows();
  }
  std::vector<std::uint64_t> entries;
  entries.reserve(rows * blocks.front().cols());
  for (const auto& b : blocks) {
    entries.insert(entries.end(), b.data_.begin(), b.data_.end());
  }
  return FieldMatrix(blocks.front().field(), rows, blocks.front().cols(),
                     std::move(entries));
}

FieldMatrix FieldMatrix::HConcat(std::span<const FieldMatrix> blocks) {
  SDMM_ENFORCE(!blocks.empty(), ErrorCode::kDimensionMismatch,
               "nothing to concatenate");
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    RequireSameField(blocks.front(), b);
    SDMM_ENFORCE(b.rows() == blocks.front().rows(),
                 ErrorCode::kDimensionMismatch, "row counts differ");
    cols += b.cols();
  }
  const std::size_t rows = blocks.front().rows();
  FieldMatrix out(blocks.front().field(), rows, cols);
  std::size_t col0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out.data_[r * cols + col0 + c] = b.at(r, c);
      }
    }
    col0 += b.cols();
  }
  return out;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  RequireSameShape(a, b);
  FieldMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) {
    out.data_[i] = a.field_.Add(a.data_[i], b.data_[i]);
  }
  return out;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  RequireSameShape(a, b);
  FieldMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) {
    out.data_[i] = a.field_.Sub(a.data_[i], b.data_[i]);
  }
  return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  RequireSameField(a, b);
  SDMM_ENFORCE(a.cols_ == b.rows_, ErrorCode::kDimensionMismatch,
               "cannot multiply " + Shape(a) + " by " + Shape(b));
  const PrimeField& f = a.field_;
  FieldMatrix out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a.data_[i * a.cols_ + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        auto& dst = out.data_[i * b.cols_ + j];
        dst = f.Add(dst, f.Mul(aik, b.data_[k * b.cols_ + j]));
      }
    }
  }
  return out;
}

}  // namespace sdmm
