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


#include "sdmm/table_search.h"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <thread>
#include <tuple>

#include "sdmm/combinatorics.h"
#include "sdmm/csv.h"
#include "sdmm/error.h"
#include "sdmm/scheme_formulas.h"

namespace sdmm {

namespace {

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// Every strictly increasing vector of `count` values from [0, max] whose
// first entry is 0.
std::vector<std::vector<Exponent>> AnchoredVectors(std::size_t count,
                                                   Exponent max) {
  std::vector<std::vector<Exponent>> out;
  ForEachCombination(static_cast<std::size_t>(max), count - 1,
                     [&](std::span<const std::size_t> idx) {
                       std::vector<Exponent> v{0};
                       for (std::size_t i : idx) {
                         v.push_back(static_cast<Exponent>(i) + 1);
                       }
                       out.push_back(std::move(v));
                       return true;
                     });
  return out;
}

// (info, rand) splits of a sorted vector.
std::vector<std::pair<std::vector<Exponent>, std::vector<Exponent>>> Splits(
    const std::vector<Exponent>& v, std::size_t info, bool all) {
  std::vector<std::pair<std::vector<Exponent>, std::vector<Exponent>>> out;
  if (!all) {
    out.emplace_back(std::vector<Exponent>(v.begin(), v.begin() + info),
                     std::vector<Exponent>(v.begin() + info, v.end()));
    return out;
  }
  ForEachCombination(v.size(), info, [&](std::span<const std::size_t> idx) {
    std::vector<Exponent> in;
    std::vector<Exponent> rest;
    std::size_t j = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (j < idx.size() && idx[j] == i) {
        in.push_back(v[i]);
        ++j;
      } else {
        rest.push_back(v[i]);
      }
    }
    out.emplace_back(std::move(in), std::move(rest));
    return true;
  });
  return out;
}

// Ordering key for the deterministic tie-break: (alpha_info, alpha_rand,
// beta_info, beta_rand) compared lexicographically.
bool LexLess(const GaspExponents& a, const GaspExponents& b) {
  return std::tie(a.alpha_info, a.alpha_rand, a.beta_info, a.beta_rand) <
         std::tie(b.alpha_info, b.alpha_rand, b.beta_info, b.beta_rand);
}

struct ShardResult {
  bool found = false;
  std::int64_t best = 0;
  GaspExponents witness;
  std::uint64_t examined = 0;
  std::uint64_t valid = 0;
};

void Offer(ShardResult& r, std::int64_t n, const GaspExponents& e) {
  if (!r.found || n < r.best || (n == r.best && LexLess(e, r.witness))) {
    r.found = true;
    r.best = n;
    r.witness = e;
  }
}

}  // namespace

std::int64_t SearchSpace::EffectiveMaxExponent() const {
  if (max_exponent >= 0) return max_exponent;
  return BuildGaspExponents({row_blocks, col_blocks, colluders, 1})
             .MaxExponent() +
         2;
}

std::uint64_t SearchSpace::EstimatedTables() const {
  const auto d = static_cast<std::uint64_t>(EffectiveMaxExponent());
  const auto k = static_cast<std::uint64_t>(row_blocks);
  const auto l = static_cast<std::uint64_t>(col_blocks);
  const auto t = static_cast<std::uint64_t>(colluders);
  std::uint64_t n = SaturatingMul(Binomial(d, k + t - 1), Binomial(d, l + t - 1));
  if (all_role_assignments) {
    n = SaturatingMul(n, SaturatingMul(Binomial(k + t, k), Binomial(l + t, l)));
  }
  return n;
}

SearchResult ExhaustiveSearch(const SearchSpace& space, unsigned threads) {
  SDMM_ENFORCE(space.row_blocks >= 1 && space.col_blocks >= 1 &&
                   space.colluders >= 1,
               ErrorCode::kInvalidArgument, "K, L, T must be positive");
  const Exponent d = space.EffectiveMaxExponent();
  const std::uint64_t estimate = space.EstimatedTables();
  SDMM_ENFORCE(estimate <= kMaxSearchTables, ErrorCode::kSearchTooLarge,
               "search would examine about " + std::to_string(estimate) +
                   " tables (limit 1e8); lower D or the parameters");
  const auto k = static_cast<std::size_t>(space.row_blocks);
  const auto l = static_cast<std::size_t>(space.col_blocks);
  const auto t = static_cast<std::size_t>(space.colluders);

  const auto alphas = AnchoredVectors(k + t, d);
  const auto betas = AnchoredVectors(l + t, d);
  std::vector<std::pair<std::vector<Exponent>, std::vector<Exponent>>>
      beta_splits;
  for (const auto& b : betas) {
    for (auto& s : Splits(b, l, space.all_role_assignments)) {
      beta_splits.push_back(std::move(s));
    }
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(alphas.size(), 1)));
  std::vector<ShardResult> shards(threads);
  std::vector<std::exception_ptr> errors(threads);

  auto run_shard = [&](unsigned w) {
    ShardResult& r = shards[w];
    GaspExponents e;
    for (std::size_t ai = w; ai < alphas.size(); ai += threads) {
      for (auto& [a_info, a_rand] :
           Splits(alphas[ai], k, space.all_role_assignments)) {
        e.alpha_info = std::move(a_info);
        e.alpha_rand = std::move(a_rand);
        for (const auto& [b_info, b_rand] : beta_splits) {
          e.beta_info = b_info;
          e.beta_rand = b_rand;
          ++r.examined;
          if (!CheckTableConditions(e).ok()) continue;
          ++r.valid;
          Offer(r, CountServers(e, /*precompute=*/true), e);
        }
      }
    }
  };
  if (threads == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          run_shard(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  ShardResult merged;
  for (const auto& s : shards) {
    merged.examined += s.examined;
    merged.valid += s.valid;
    if (s.found) Offer(merged, s.best, s.witness);
  }
  SDMM_ENFORCE(merged.found, ErrorCode::kInternal,
               "no valid table up to exponent " + std::to_string(d));
  SearchResult result;
  result.best_n_pre = merged.best;
  result.witness = merged.witness;
  result.tables_examined = merged.examined;
  result.valid_tables = merged.valid;
  result.max_exponent = d;
  result.best_bound =
      LowerBounds(space.row_blocks, space.col_blocks, space.colluders).best;
  result.bound_gap = result.best_n_pre - result.best_bound;
  return result;
}

void AppendSearchLedger(const std::string& path, const SearchSpace& space,
                        const SearchResult& result) {
  const bool fresh = !std::filesystem::exists(path) ||
                     std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  SDMM_ENFORCE(out.good(), ErrorCode::kInvalidArgument,
               "cannot append to " + path);
  CsvWriter w({"K", "L", "T", "D", "best_n_pre", "bound", "gap",
               "tables_examined"});
  w.Row({std::to_string(space.row_blocks), std::to_string(space.col_blocks),
         std::to_string(space.colluders), std::to_string(result.max_exponent),
         std::to_string(result.best_n_pre), std::to_string(result.best_bound),
         std::to_string(result.bound_gap),
         std::to_string(result.tables_examined)});
  std::string text = w.str();
  if (!fresh) text = text.substr(text.find('\n') + 1);
  out << text;
}

std::optional<std::int64_t> ArithmeticProgressionStep(
    const std::vector<std::int64_t>& set) {
  SDMM_ENFORCE(!set.empty(), ErrorCode::kEmptySet, "empty set");
  if (set.size() == 1) return 0;
  const std::int64_t step = set[1] - set[0];
  for (std::size_t i = 2; i < set.size(); ++i) {
    if (set[i] - set[i - 1] != step) return std::nullopt;
  }
  return step;
}

SumsetCheck SumsetMinCheck(const std::vector<std::int64_t>& a,
                           const std::vector<std::int64_t>& b) {
  SDMM_ENFORCE(!a.empty() && !b.empty(), ErrorCode::kEmptySet,
               "sumset of an empty set");
  auto normalize = [](std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto sa = normalize(a);
  const auto sb = normalize(b);
  SumsetCheck out;
  out.sumset_size = Sumset(sa, sb).size();
  out.minimal = out.sumset_size == sa.size() + sb.size() - 1;
  if (sa.size() >= 2 && sb.size() >= 2) {
    const auto da = ArithmeticProgressionStep(sa);
    const auto db = ArithmeticProgressionStep(sb);
    out.same_difference_progressions = da && db && *da == *db;
    out.consistent = out.minimal == *out.same_difference_progressions;
  }
  return out;
}

}  // namespace sdmm
