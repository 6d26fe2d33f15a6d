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


#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "sdmm/csv.h"
#include "sdmm/error.h"
#include "sdmm/scheme_formulas.h"
#include "sdmm/table_search.h"

namespace sdmm {
namespace {

SearchResult Search(std::int64_t k, std::int64_t l, std::int64_t t,
                    std::int64_t d = -1, unsigned threads = 1) {
  SearchSpace s;
  s.row_blocks = k;
  s.col_blocks = l;
  s.colluders = t;
  s.max_exponent = d;
  return ExhaustiveSearch(s, threads);
}

TEST(SearchTest, SmallestInstance) {
  const SearchResult r = Search(1, 1, 1, 3);
  EXPECT_EQ(r.best_n_pre, 2);
  EXPECT_EQ(r.bound_gap, 0);
  EXPECT_TRUE(CheckTableConditions(r.witness).ok());
  EXPECT_EQ(r.tables_examined, 9u);
}

TEST(SearchTest, TwoByTwoSandwich) {
  const SearchResult r = Search(2, 2, 2, 8);
  EXPECT_EQ(r.best_n_pre, 8);
  EXPECT_EQ(r.best_n_pre, SmallPrecomputeServers(2, 2, 2));
  EXPECT_EQ(r.best_n_pre, LowerBounds(2, 2, 2).best);
  EXPECT_TRUE(CheckTableConditions(r.witness).ok());
  EXPECT_EQ(CountServers(r.witness, true), 8);
  EXPECT_EQ(r.tables_examined, 56u * 56u);
}

TEST(SearchTest, DeterministicAcrossThreads) {
  const SearchResult a = Search(2, 1, 2, 7, 1);
  const SearchResult b = Search(2, 1, 2, 7, 3);
  EXPECT_EQ(a.best_n_pre, b.best_n_pre);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.valid_tables, b.valid_tables);
}

TEST(SearchTest, DefaultRangeAndRefusal) {
  SearchSpace s{2, 2, 2};
  // GASP_1 for (2, 2, 2): alpha_rand = {4, 6}, beta_rand = {4, 5}.
  EXPECT_EQ(s.EffectiveMaxExponent(), 8);
  SearchSpace huge{5, 5, 5};
  try {
    ExhaustiveSearch(huge);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchTooLarge);
  }
}

// Every valid table found satisfies the lower bound, and GASP is inside the
// default search range, so best <= closed form for every r.
TEST(SearchProperty, SandwichedBetweenBoundAndGasp) {
  for (std::int64_t k = 1; k <= 2; ++k) {
    for (std::int64_t l = 1; l <= 2; ++l) {
      for (std::int64_t t = 1; t <= 3; ++t) {
        SearchSpace space{k, l, t};
        if (space.EstimatedTables() > 2000000) continue;
        const SearchResult r = ExhaustiveSearch(space, 1);
        ASSERT_GE(r.best_n_pre, LowerBounds(k, l, t).best);
        for (std::int64_t c = 1; c <= std::min(k, t); ++c) {
          ASSERT_LE(r.best_n_pre, PrecomputeServersClosedForm({k, l, t, c}));
        }
        const auto o = testing::CountByEnumeration(
            r.witness.alpha_info, r.witness.alpha_rand, r.witness.beta_info,
            r.witness.beta_rand);
        ASSERT_EQ(o.n_pre, r.best_n_pre);
      }
    }
  }
}

TEST(SearchTest, RoleAssignmentsNeverHurt) {
  SearchSpace s{2, 2, 1, 6};
  const SearchResult fixed = ExhaustiveSearch(s, 1);
  s.all_role_assignments = true;
  const SearchResult all = ExhaustiveSearch(s, 1);
  EXPECT_LE(all.best_n_pre, fixed.best_n_pre);
  EXPECT_GT(all.tables_examined, fixed.tables_examined);
}

TEST(SearchTest, LedgerAppends) {
  const auto path = std::filesystem::temp_directory_path() / "sdmm_ledger_test.csv";
  std::filesystem::remove(path);
  const SearchSpace s{1, 1, 1, 3};
  const SearchResult r = ExhaustiveSearch(s, 1);
  AppendSearchLedger(path.string(), s, r);
  AppendSearchLedger(path.string(), s, r);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const CsvTable t = ParseCsv(buf.str());
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[1][t.Column("best_n_pre")], "2");
  EXPECT_EQ(t.rows[0][t.Column("gap")], "0");
  std::filesystem::remove(path);
}

TEST(SumsetTest, Examples) {
  const SumsetCheck a = SumsetMinCheck({0, 1, 2}, {0, 2, 4});
  EXPECT_EQ(a.sumset_size, 7u);
  EXPECT_FALSE(a.minimal);
  EXPECT_EQ(a.same_difference_progressions, false);
  EXPECT_TRUE(a.consistent);
  const SumsetCheck b = SumsetMinCheck({0, 3, 6}, {1, 4});
  EXPECT_EQ(b.sumset_size, 4u);
  EXPECT_TRUE(b.minimal);
  EXPECT_EQ(b.same_difference_progressions, true);
  EXPECT_EQ(ArithmeticProgressionStep({1, 4, 7, 10}), 3);
  EXPECT_EQ(ArithmeticProgressionStep({5}), 0);
  EXPECT_EQ(ArithmeticProgressionStep({1, 2, 4}), std::nullopt);
  try {
    SumsetMinCheck({}, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySet);
  }
}

// |A + B| = |A| + |B| - 1 exactly when A and B are progressions with a
// common difference; the sumset size is checked against a std::set.
TEST(SumsetProperty, MinimalSumsetsAreProgressions) {
  testing::Gen gen(2024);
  int minimal = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto a = gen.SmallSet(6, 0, 20);
    const auto b = gen.SmallSet(6, 0, 20);
    const SumsetCheck c = SumsetMinCheck(a, b);
    ASSERT_EQ(c.sumset_size, testing::SetSum(a, b).size());
    ASSERT_GE(c.sumset_size, a.size() + b.size() - 1);
    ASSERT_TRUE(c.consistent);
    minimal += c.minimal && c.same_difference_progressions.has_value();
  }
  EXPECT_GT(minimal, 0);
}

}  // namespace
}  // namespace sdmm
