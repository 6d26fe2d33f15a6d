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

// Closed-form server counts for GASP codes with precomputation, lower bounds
// on any degree table, collusion tolerance and asymptotic cost exponents.
//
// Throughout, K = row_blocks, L = col_blocks, T = colluders, r = chain length,
// m = min(K, L), M = max(K, L).

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sdmm/degree_table.h"
#include "sdmm/rational.h"

namespace sdmm {

// Floor division rounding toward negative infinity.
std::int64_t FloorDiv(std::int64_t num, std::int64_t den);

// T = U r + r0 and K + T - 1 = V K + K0, W = L + U - 1.
struct GasprDecomposition {
  std::int64_t u = 0;
  std::int64_t r0 = 0;
  std::int64_t v = 0;
  std::int64_t k0 = 0;
  std::int64_t w = 0;
};

GasprDecomposition Decompose(const SchemeParams& params);

// Number of servers GASP_r needs when the rand/rand corner is precomputed.
std::int64_t PrecomputeServersClosedForm(const SchemeParams& params);

// GASP_small (r = 1): KL + K + L + 2T - 4 - floor((T - 2) / K).
std::int64_t SmallPrecomputeServers(std::int64_t k, std::int64_t l,
                                    std::int64_t t);
// Same with m = min(K, L) in the floor term.
std::int64_t SmallPrecomputeServersSymmetric(std::int64_t k, std::int64_t l,
                                             std::int64_t t);

// GASP_big (r = min(K, T)). When T == K and L >= 2 both printed branches
// apply; they are evaluated and checked to agree (kInternal otherwise).
std::int64_t BigPrecomputeServers(std::int64_t k, std::int64_t l,
                                  std::int64_t t);
// Case-wise symmetrization; nullopt where none of its three cases applies
// (2 <= m and m < T < M).
std::optional<std::int64_t> BigPrecomputeServersSymmetric(std::int64_t k,
                                                          std::int64_t l,
                                                          std::int64_t t);

enum class Verdict { kSmallWins, kBigWins, kTie, kUndetermined };
std::string_view VerdictName(Verdict v);

// Which of GASP_small / GASP_big (symmetrized) needs fewer servers, as far
// as the known comparison result decides it.
Verdict CompareSmallBig(std::int64_t k, std::int64_t l, std::int64_t t);

struct BoundsReport {
  std::int64_t bound1 = 0;                // KL + M + T - 1
  std::optional<std::int64_t> bound2;     // KL + M + T, min(K, L, T) >= 2
  std::vector<std::int64_t> bound3_by_m;  // index m - 1, m in [1, T]
  std::int64_t best = 0;
};

BoundsReport LowerBounds(std::int64_t k, std::int64_t l, std::int64_t t);

struct Optimality {
  bool achieving = false;
  std::int64_t gap = 0;  // symmetric GASP_small count minus best bound
};

Optimality OptimalityCheck(std::int64_t k, std::int64_t l, std::int64_t t);

// Parameter region in which GASP_small is claimed to meet the lower bound:
// K = 1 or L = 1 or T <= 2.
bool SmallClaimedOptimal(std::int64_t k, std::int64_t l, std::int64_t t);

struct CollusionResult {
  bool feasible = false;
  std::optional<Rational> threshold;  // real-valued N solving N = f(T), T = dN
  std::optional<std::int64_t> servers;  // ceil(threshold)
};

// GASP_big with T a fixed fraction delta of N. Without precomputation
// N = 2KL + 2T - 1 gives N = (2KL - 1) / (1 - 2 delta), feasible only for
// delta < 1/2. With it, N = 2KL - M + T gives N = (2KL - M) / (1 - delta).
// kInvalidFraction unless 0 <= delta < 1.
CollusionResult CollusionTolerance(std::int64_t k, std::int64_t l,
                                   const Rational& delta, bool precompute);

struct ComplexityParams {
  Rational omega{3};    // server matrix multiplication exponent, >= 2
  Rational epsilon{0};  // K = L = n^epsilon, in [0, 1]
  Rational delta{0};    // T = delta N
};

struct ComplexityExponents {
  Rational exponent;          // at cp.epsilon
  Rational optimal_epsilon;
  Rational optimal_exponent;
};

// Total time n^max(eps + w - eps w, 2 + 3 eps) without precomputation and
// n^max(eps + w - eps w, 2 + 2 eps) with it. delta must lie in [0, 1/2)
// resp. [0, 1) (kInvalidFraction).
ComplexityExponents ComplexityExponent(const ComplexityParams& cp,
                                       bool precompute);

}  // namespace sdmm
