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
#include <span>
#include <string>
#include <vector>

#include "sdmm/prime_field.h"
#include "sdmm/sparse_poly.h"

namespace sdmm {

// Subsets are enumerated exhaustively up to this many, sampled beyond.
inline constexpr std::uint64_t kExhaustiveSubsetLimit = 100000;
inline constexpr std::uint64_t kSampledSubsets = 10000;

struct SubsetViolation {
  std::vector<std::size_t> subset;
  std::string check;  // "alpha_rand" or "beta_rand"
};

struct SubsetRankResult {
  std::size_t subset_size = 0;
  std::uint64_t total_subsets = 0;
  std::uint64_t checked_subsets = 0;
  bool exhaustive = true;
  std::uint64_t violation_count = 0;
  std::vector<SubsetViolation> violations;  // first few, for reporting

  bool passed() const { return violation_count == 0; }
};

// For every |alpha_rand|-subset S of the points, checks that the square
// matrices [a_i^e]_{i in S, e in alpha_rand} and [a_i^e]_{i in S, e in
// beta_rand} are invertible. Exhaustive when C(n, T) <= 1e5, otherwise 1e4
// uniformly sampled subsets drawn from `seed`.
SubsetRankResult CheckSubsetRanks(const PrimeField& field,
                                  std::span<const FieldElement> points,
                                  std::span<const Exponent> alpha_rand,
                                  std::span<const Exponent> beta_rand,
                                  std::uint64_t seed,
                                  std::size_t max_recorded = 32);

}  // namespace sdmm
