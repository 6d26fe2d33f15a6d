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

#include "sdmm/linalg.h"

#include <algorithm>
#include <string>
#include <utility>

#include "sdmm/error.h"

namespace sdmm {

FieldMatrix PowerMatrix(const PrimeField& field,
                        std::span<const FieldElement> points,
                        std::span<const Exponent> exponents) {
  FieldMatrix m(field, points.size(), exponents.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    SDMM_ENFORCE(points[i].field() == field, ErrorCode::kFieldMismatch,
                 "evaluation point from another field");
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      SDMM_ENFORCE(exponents[j] >= 0, ErrorCode::kInvalidArgument,
                   "negative exponent");
      m.set(i, j,
            field.Pow(points[i].value(),
                      static_cast<std::uint64_t>(exponents[j])));
    }
  }
  return m;
}

std::size_t Rank(FieldMatrix m) {
  const PrimeField& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint64_t> a(m.data().begin(), m.data().end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    }
    const std::uint64_t inv = f.Inv(a[rank * cols + c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t factor = f.Mul(a[r * cols + c], inv);
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        a[r * cols + k] =
            f.Sub(a[r * cols + k], f.Mul(factor, a[rank * cols + k]));
      }
    }
    ++rank;
  }
  return rank;
}

std::map<Exponent, FieldMatrix> GenVandermondeSolve(
    const PrimeField& field, std::span<const Exponent> exponents,
    std::span<const FieldElement> points, std::span<const FieldMatrix> values) {
  const std::size_t n = exponents.size();
  SDMM_ENFORCE(n > 0, ErrorCode::kDimensionMismatch, "empty system");
  SDMM_ENFORCE(points.size() == n && values.size() == n,
               ErrorCode::kDimensionMismatch,
               std::to_string(n) + " unknowns but " +
                   std::to_string(points.size()) + " points and " +
                   std::to_string(values.size()) + " values");
  for (std::size_t j = 1; j < n; ++j) {
    SDMM_ENFORCE(exponents[j - 1] < exponents[j], ErrorCode::kInvalidArgument,
                 "exponents must be strictly increasing");
  }
  for (const auto& p : points) {
    SDMM_ENFORCE(p.field() == field, ErrorCode::kFieldMismatch,
                 "evaluation point from another field");
    SDMM_ENFORCE(p.value() != 0, ErrorCode::kInvalidArgument,
                 "evaluation points must be nonzero");
  }
  const std::size_t vr = values.front().rows();
  const std::size_t vc = values.front().cols();
  for (const auto& v : values) {
    SDMM_ENFORCE(v.field() == field, ErrorCode::kFieldMismatch,
                 "value from another field");
    SDMM_ENFORCE(v.rows() == vr && v.cols() == vc,
                 ErrorCode::kDimensionMismatch, "values differ in shape");
  }

  // Augmented system [M | Y], one right-hand side per matrix entry.
  const std::size_t rhs = vr * vc;
  const std::size_t width = n + rhs;
  std::vector<std::uint64_t> a(n * width);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * width + j] = field.Pow(points[i].value(),
                                   static_cast<std::uint64_t>(exponents[j]));
    }
    std::copy(values[i].data().begin(), values[i].data().end(),
              a.begin() + static_cast<std::ptrdiff_t>(i * width + n));
  }

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot * width + c] == 0) ++pivot;
    SDMM_ENFORCE(pivot < n, ErrorCode::kSingularSystem,
                 "generalized Vandermonde matrix is singular at column " +
                     std::to_string(c));
    if (pivot != c) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * width),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * width),
                       a.begin() + static_cast<std::ptrdiff_t>(c * width));
    }
    const std::uint64_t inv = field.Inv(a[c * width + c]);
    for (std::size_t k = c; k < width; ++k) {
      a[c * width + k] = field.Mul(a[c * width + k], inv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const std::uint64_t factor = a[r * width + c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < width; ++k) {
        a[r * width + k] =
            field.Sub(a[r * width + k], field.Mul(factor, a[c * width + k]));
      }
    }
  }

  std::map<Exponent, FieldMatrix> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::uint64_t> entries(
        a.begin() + static_cast<std::ptrdiff_t>(j * width + n),
        a.begin() + static_cast<std::ptrdiff_t>((j + 1) * width));
    out.emplace(exponents[j], FieldMatrix(field, vr, vc, std::move(entries)));
  }
  return out;
}

bool SquareInvertibleInPlace(const PrimeField& field, std::size_t n,
                             std::span<std::uint64_t> a) {
  SDMM_ENFORCE(a.size() >= n * n, ErrorCode::kDimensionMismatch,
               "scratch smaller than n*n");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot * n + c] == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != c) {
      for (std::size_t k = c; k < n; ++k) std::swap(a[pivot * n + k], a[c * n + k]);
    }
    const std::uint64_t p = a[c * n + c];
    // row_r <- p * row_r - a[r][c] * row_c keeps the rank and clears column c.
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t factor = a[r * n + c];
      if (factor == 0) continue;
      for (std::size_t k = c + 1; k < n; ++k) {
        a[r * n + k] = field.Sub(field.Mul(p, a[r * n + k]),
                                 field.Mul(factor, a[c * n + k]));
      }
      a[r * n + c] = 0;
    }
  }
  return true;
}

}  // namespace sdmm
