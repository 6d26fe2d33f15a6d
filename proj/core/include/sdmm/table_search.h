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


// Brute-force search over degree tables for tiny parameters, and the sumset
// helpers that go with it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdmm/degree_table.h"

namespace sdmm {

// Searches refuse above this many candidate tables.
inline constexpr std::uint64_t kMaxSearchTables = 100000000;

struct SearchSpace {
  std::int64_t row_blocks = 1;
  std::int64_t col_blocks = 1;
  std::int64_t colluders = 1;
  // Largest exponent allowed; negative selects the default (largest
  // exponent of GASP_1 plus 2).
  std::int64_t max_exponent = -1;
  // By default the information exponents are the K (resp. L) smallest
  // entries of each sorted exponent vector. When set, every split of the
  // vector into information and random entries is tried.
  bool all_role_assignments = false;

  std::int64_t EffectiveMaxExponent() const;
  // Number of candidate tables; saturates at UINT64_MAX.
  std::uint64_t EstimatedTables() const;
};

struct SearchResult {
  std::int64_t best_n_pre = 0;
  GaspExponents witness;
  std::uint64_t tables_examined = 0;
  std::uint64_t valid_tables = 0;
  std::int64_t max_exponent = 0;
  std::int64_t best_bound = 0;
  std::int64_t bound_gap = 0;  // best_n_pre - best_bound
};

// Minimum precomputation count over all tables that satisfy the table
// conditions, with alpha_1 = beta_1 = 0. The witness is the
// lexicographically smallest optimal (alpha, beta) and does not depend on
// the thread count. kSearchTooLarge above kMaxSearchTables candidates.
SearchResult ExhaustiveSearch(const SearchSpace& space, unsigned threads = 0);

// Appends a result row to a CSV ledger, writing the header if the file is
// new or empty.
void AppendSearchLedger(const std::string& path, const SearchSpace& space,
                        const SearchResult& result);

// Common difference of a sorted, deduplicated set if it is an arithmetic
// progression (0 for a singleton); nullopt otherwise. kEmptySet if empty.
std::optional<std::int64_t> ArithmeticProgressionStep(
    const std::vector<std::int64_t>& set);

struct SumsetCheck {
  std::size_t sumset_size = 0;
  bool minimal = false;  // |A + B| == |A| + |B| - 1
  // Present when |A|, |B| >= 2: both are progressions with one difference.
  std::optional<bool> same_difference_progressions;
  // minimal == same_difference_progressions whenever the latter is present.
  bool consistent = true;
};

// Inputs are treated as sets (sorted and deduplicated). kEmptySet if
// either is empty.
SumsetCheck SumsetMinCheck(const std::vector<std::int64_t>& a,
                           const std::vector<std::int64_t>& b);

}  // namespace sdmm
