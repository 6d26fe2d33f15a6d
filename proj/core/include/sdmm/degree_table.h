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
#include <string>
#include <vector>

#include "sdmm/sparse_poly.h"

namespace sdmm {

// Parameters of a GASP_r code under the outer-product partition: A is cut
// into row_blocks pieces, B into col_blocks pieces, any `colluders` servers
// may pool their views, and chain_length is the GASP chain parameter r.
struct SchemeParams {
  std::int64_t row_blocks = 1;
  std::int64_t col_blocks = 1;
  std::int64_t colluders = 1;
  std::int64_t chain_length = 1;

  // kInvalidArgument for nonpositive sizes, kInvalidChainLength unless
  // 1 <= chain_length <= min(row_blocks, colluders).
  void Validate() const;

  SchemeParams Transposed() const {
    return {col_blocks, row_blocks, colluders, chain_length};
  }

  std::string ToString() const;
};

// Exponents of the four pieces of f = f_info + f_rand and g = g_info + g_rand.
// Stored as sorted vectors; the row order of a degree table is
// alpha_info followed by alpha_rand (columns likewise with beta).
struct GaspExponents {
  std::vector<Exponent> alpha_info;
  std::vector<Exponent> alpha_rand;
  std::vector<Exponent> beta_info;
  std::vector<Exponent> beta_rand;

  std::size_t row_blocks() const { return alpha_info.size(); }
  std::size_t col_blocks() const { return beta_info.size(); }
  // Number of random terms; 0 only for the unmasked test configuration.
  std::size_t colluders() const { return alpha_rand.size(); }

  std::vector<Exponent> Alpha() const;
  std::vector<Exponent> Beta() const;
  Exponent MaxExponent() const;

  // Each list strictly increasing and nonnegative, alpha_info/alpha_rand
  // disjoint, beta_info/beta_rand disjoint, |alpha_rand| == |beta_rand|,
  // info lists nonempty. Throws kInvalidArgument.
  void Validate() const;

  friend bool operator==(const GaspExponents&, const GaspExponents&) = default;
};

// The GASP_r construction: alpha_info = [0, K), beta_info = K * [0, L),
// beta_rand = KL + [0, T), alpha_rand = the first T integers of
// KL + union_{u >= 1} ((u - 1) K + [0, r)).
GaspExponents BuildGaspExponents(const SchemeParams& params);

// (K+T) x (L+T) table of exponent sums.
class DegreeTable {
 public:
  enum class Region { kInfoInfo, kInfoRand, kRandInfo, kRandRand };

  explicit DegreeTable(GaspExponents exponents);

  const GaspExponents& exponents() const { return exponents_; }
  std::size_t rows() const { return alpha_.size(); }
  std::size_t cols() const { return beta_.size(); }
  Exponent Cell(std::size_t row, std::size_t col) const {
    return alpha_[row] + beta_[col];
  }
  Region RegionOf(std::size_t row, std::size_t col) const;

  // Aligned text; cells of the info/info block are bracketed.
  std::string RenderText() const;
  // Header "alpha,<beta values...>", then one row per alpha.
  std::string RenderCsv() const;

 private:
  GaspExponents exponents_;
  std::vector<Exponent> alpha_;
  std::vector<Exponent> beta_;
};

// The four pieces of supp(h) = alpha + beta.
struct SupportDecomposition {
  std::vector<Exponent> info_info;  // alpha_info + beta_info
  std::vector<Exponent> info_rand;  // alpha_info + beta_rand
  std::vector<Exponent> rand_info;  // alpha_rand + beta_info
  std::vector<Exponent> rand_rand;  // alpha_rand + beta_rand

  std::vector<Exponent> FullSupport() const;
  // Everything except what only the rand/rand corner contributes.
  std::vector<Exponent> PrecomputeSupport() const;
};

SupportDecomposition DecomposeSupport(const GaspExponents& exponents);

// Sorted, deduplicated {a + b}.
std::vector<Exponent> Sumset(const std::vector<Exponent>& a,
                             const std::vector<Exponent>& b);

// |A u B u C u D| without precomputation, |A u B u C| with it.
std::int64_t CountServers(const GaspExponents& exponents, bool precompute);

struct TableViolation {
  enum class Kind { kInfoCollision, kAlphaRandRepeat, kBetaRandRepeat };
  Kind kind;
  std::size_t row;  // table row for kInfoCollision/kAlphaRandRepeat
  std::size_t col;  // table column for kInfoCollision/kBetaRandRepeat
  Exponent value;
};

struct ConditionReport {
  // (i) every info/info value appears exactly once in the whole table.
  bool info_unique = true;
  // (ii) alpha_rand entries pairwise distinct and beta_rand entries
  // pairwise distinct.
  bool rand_distinct = true;
  std::vector<TableViolation> violations;

  bool ok() const { return info_unique && rand_distinct; }
};

// Works on arbitrary exponent lists (no sortedness requirement), so the
// search can test candidates directly.
ConditionReport CheckTableConditions(const GaspExponents& exponents);

// min over (K, L) and (L, K) of the precomputation count; an orientation
// whose chain length is out of range is skipped.
std::int64_t SymmetrizedPrecomputeCount(const SchemeParams& params);

}  // namespace sdmm
