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

#include "sdmm/subset_rank.h"

#include <random>

#include "sdmm/combinatorics.h"
#include "sdmm/error.h"
#include "sdmm/linalg.h"

namespace sdmm {

namespace {

std::vector<std::uint64_t> PowerTable(const PrimeField& field,
                                      std::span<const FieldElement> points,
                                      std::span<const Exponent> exponents) {
  std::vector<std::uint64_t> table;
  table.reserve(points.size() * exponents.size());
  for (const auto& p : points) {
    for (Exponent e : exponents) {
      table.push_back(field.Pow(p.value(), static_cast<std::uint64_t>(e)));
    }
  }
  return table;
}

}  // namespace

SubsetRankResult CheckSubsetRanks(const PrimeField& field,
                                  std::span<const FieldElement> points,
                                  std::span<const Exponent> alpha_rand,
                                  std::span<const Exponent> beta_rand,
                                  std::uint64_t seed,
                                  std::size_t max_recorded) {
  SDMM_ENFORCE(alpha_rand.size() == beta_rand.size(),
               ErrorCode::kInvalidArgument,
               "alpha_rand and beta_rand differ in length");
  for (const auto& p : points) {
    SDMM_ENFORCE(p.field() == field, ErrorCode::kFieldMismatch,
                 "point from another field");
  }
  const std::size_t n = points.size();
  const std::size_t t = alpha_rand.size();
  SubsetRankResult result;
  result.subset_size = t;
  if (t == 0 || t > n) {
    // Nothing to hide (t == 0) or fewer servers than colluders.
    result.total_subsets = t == 0 ? 1 : 0;
    return result;
  }
  result.total_subsets = Binomial(n, t);
  result.exhaustive = result.total_subsets <= kExhaustiveSubsetLimit;

  const auto alpha_pows = PowerTable(field, points, alpha_rand);
  const auto beta_pows = PowerTable(field, points, beta_rand);
  std::vector<std::uint64_t> scratch(t * t);

  auto check_one = [&](std::span<const std::size_t> subset) {
    ++result.checked_subsets;
    for (int which = 0; which < 2; ++which) {
      const auto& pows = which == 0 ? alpha_pows : beta_pows;
      for (std::size_t i = 0; i < t; ++i) {
        std::copy_n(pows.begin() + static_cast<std::ptrdiff_t>(subset[i] * t), t,
                    scratch.begin() + static_cast<std::ptrdiff_t>(i * t));
      }
      if (!SquareInvertibleInPlace(field, t, scratch)) {
        ++result.violation_count;
        if (result.violations.size() < max_recorded) {
          result.violations.push_back(
              {std::vector<std::size_t>(subset.begin(), subset.end()),
               which == 0 ? "alpha_rand" : "beta_rand"});
        }
      }
    }
    return true;
  };

  if (result.exhaustive) {
    ForEachCombination(n, t, check_one);
  } else {
    std::mt19937_64 rng(DeriveSeed(seed, 0x5ab5e7));
    for (std::uint64_t s = 0; s < kSampledSubsets; ++s) {
      const auto subset = SampleCombination(n, t, rng);
      check_one(subset);
    }
  }
  return result;
}

}  // namespace sdmm
