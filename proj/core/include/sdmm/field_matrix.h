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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "sdmm/prime_field.h"

namespace sdmm {

// Dense row-major matrix over a prime field. Entries are kept reduced.
class FieldMatrix {
 public:
  // Zero matrix. rows and cols must be positive.
  FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);

  // Entries are reduced mod q on the way in.
  FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols,
              std::vector<std::uint64_t> entries);

  static FieldMatrix FromRows(
      const PrimeField& field,
      std::initializer_list<std::initializer_list<std::uint64_t>> rows);
  static FieldMatrix Identity(const PrimeField& field, std::size_t n);
  static FieldMatrix Random(const PrimeField& field, std::size_t rows,
                            std::size_t cols, std::mt19937_64& rng);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  std::uint64_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint64_t v) {
    data_[r * cols_ + c] = field_.Reduce(v);
  }
  std::span<const std::uint64_t> data() const noexcept { return data_; }

  bool IsZero() const noexcept;

  FieldMatrix Block(std::size_t row0, std::size_t col0, std::size_t rows,
                    std::size_t cols) const;
  FieldMatrix Scaled(std::uint64_t factor) const;

  // this += factor * other. Shapes and fields must agree.
  void AddScaled(const FieldMatrix& other, std::uint64_t factor);

  static FieldMatrix VConcat(std::span<const FieldMatrix> blocks);
  static FieldMatrix HConcat(std::span<const FieldMatrix> blocks);

  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

// Throws kFieldMismatch / kDimensionMismatch respectively.
void RequireSameField(const FieldMatrix& a, const FieldMatrix& b);
void RequireSameShape(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace sdmm
