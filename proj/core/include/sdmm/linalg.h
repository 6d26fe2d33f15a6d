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
#include <span>
#include <vector>

#include "sdmm/field_matrix.h"
#include "sdmm/prime_field.h"
#include "sdmm/sparse_poly.h"

namespace sdmm {

// M[i][j] = points[i]^exponents[j].
FieldMatrix PowerMatrix(const PrimeField& field,
                        std::span<const FieldElement> points,
                        std::span<const Exponent> exponents);

// Rank by Gaussian elimination.
std::size_t Rank(FieldMatrix m);

// Interpolates a sparse matrix polynomial from its values: finds the unique
// coefficients c_j with sum_j c_j * points[i]^exponents[j] = values[i].
//
// exponents must be strictly increasing and match points/values in length
// (kDimensionMismatch otherwise); points must be nonzero (kInvalidArgument).
// A singular generalized Vandermonde system, including repeated points,
// raises kSingularSystem: the caller should pick other points.
std::map<Exponent, FieldMatrix> GenVandermondeSolve(
    const PrimeField& field, std::span<const Exponent> exponents,
    std::span<const FieldElement> points, std::span<const FieldMatrix> values);

// Invertibility test for a square matrix of precomputed powers laid out
// row-major in `scratch` (n*n entries, destroyed). Uses division-free
// elimination, so no field inversions are performed.
bool SquareInvertibleInPlace(const PrimeField& field, std::size_t n,
                             std::span<std::uint64_t> scratch);

}  // namespace sdmm
