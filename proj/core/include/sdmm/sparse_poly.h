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
#include <map>
#include <vector>

#include "sdmm/field_matrix.h"
#include "sdmm/prime_field.h"

namespace sdmm {

using Exponent = std::int64_t;

// Polynomial in one variable whose coefficients are matrices of a fixed
// shape. Only nonzero coefficients are stored, so Support() is exactly the
// set of exponents with a nonzero coefficient.
class SparsePoly {
 public:
  SparsePoly(const PrimeField& field, std::size_t rows, std::size_t cols);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  // Replaces the coefficient at e; a zero matrix erases the term.
  void SetTerm(Exponent e, const FieldMatrix& coeff);
  // Adds into the coefficient at e, erasing it if the sum cancels.
  void AddTerm(Exponent e, const FieldMatrix& coeff);

  // Zero matrix when e is not in the support.
  FieldMatrix Coefficient(Exponent e) const;

  std::vector<Exponent> Support() const;
  const std::map<Exponent, FieldMatrix>& terms() const noexcept {
    return terms_;
  }
  bool IsZero() const noexcept { return terms_.empty(); }

  // Sum of coeff * a^e over the stored terms.
  FieldMatrix Evaluate(const FieldElement& a) const;

  // Exponentwise convolution with matrix products: (rows x m) * (m x cols).
  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& g);
  friend SparsePoly operator+(const SparsePoly& p, const SparsePoly& g);

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.terms_ == b.terms_;
  }

 private:
  void CheckCoefficient(Exponent e, const FieldMatrix& coeff) const;

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::map<Exponent, FieldMatrix> terms_;
};

}  // namespace sdmm
