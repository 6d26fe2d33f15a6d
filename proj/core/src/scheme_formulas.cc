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

#include "sdmm/scheme_formulas.h"

#include <algorithm>
#include <string>

#include "sdmm/error.h"

namespace sdmm {

namespace {

void RequirePositive(std::int64_t k, std::int64_t l, std::int64_t t) {
  SDMM_ENFORCE(k >= 1 && l >= 1 && t >= 1, ErrorCode::kInvalidArgument,
               "K, L, T must be positive");
}

}  // namespace

std::int64_t FloorDiv(std::int64_t num, std::int64_t den) {
  SDMM_ENFORCE(den != 0, ErrorCode::kDivisionByZero, "floor division by zero");
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

GasprDecomposition Decompose(const SchemeParams& params) {
  params.Validate();
  const std::int64_t k = params.row_blocks;
  const std::int64_t t = params.colluders;
  const std::int64_t r = params.chain_length;
  GasprDecomposition d;
  d.u = t / r;
  d.r0 = t - d.u * r;
  d.v = (k + t - 1) / k;
  d.k0 = (k + t - 1) - d.v * k;
  d.w = params.col_blocks + d.u - 1;
  return d;
}

std::int64_t PrecomputeServersClosedForm(const SchemeParams& params) {
  const GasprDecomposition d = Decompose(params);
  const std::int64_t k = params.row_blocks;
  const std::int64_t r = params.chain_length;
  const std::int64_t base = k * params.col_blocks + d.v * k;
  if (d.v < d.w) return base + std::max(r, d.k0) + r * (d.w - (d.v + 1)) + d.r0;
  if (d.v == d.w) return base + std::max(d.r0, d.k0);
  return base + d.k0;
}

std::int64_t SmallPrecomputeServers(std::int64_t k, std::int64_t l,
                                    std::int64_t t) {
  RequirePositive(k, l, t);
  return k * l + k + l + 2 * t - 4 - FloorDiv(t - 2, k);
}

std::int64_t SmallPrecomputeServersSymmetric(std::int64_t k, std::int64_t l,
                                             std::int64_t t) {
  RequirePositive(k, l, t);
  return k * l + k + l + 2 * t - 4 - FloorDiv(t - 2, std::min(k, l));
}

std::int64_t BigPrecomputeServers(std::int64_t k, std::int64_t l,
                                  std::int64_t t) {
  RequirePositive(k, l, t);
  if (l == 1) return 2 * k + t - 1;
  const std::int64_t few_colluders = k * l + l * t + k - t;
  const std::int64_t many_colluders = 2 * k * l - k + t;
  if (t == k) {
    SDMM_ENFORCE(few_colluders == many_colluders, ErrorCode::kInternal,
                 "overlapping GASP_big branches disagree at T = K");
  }
  return t <= k ? few_colluders : many_colluders;
}

std::optional<std::int64_t> BigPrecomputeServersSymmetric(std::int64_t k,
                                                          std::int64_t l,
                                                          std::int64_t t) {
  RequirePositive(k, l, t);
  const std::int64_t m = std::min(k, l);
  const std::int64_t big_m = std::max(k, l);
  if (m == 1) return 2 * big_m + t - 1;
  if (t <= m) return k * l + m * t + big_m - t;
  if (big_m <= t) return 2 * k * l - big_m + t;
  return std::nullopt;
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kSmallWins:
      return "SmallWins";
    case Verdict::kBigWins:
      return "BigWins";
    case Verdict::kTie:
      return "Tie";
    case Verdict::kUndetermined:
      return "Undetermined";
  }
  return "Unknown";
}

Verdict CompareSmallBig(std::int64_t k, std::int64_t l, std::int64_t t) {
  RequirePositive(k, l, t);
  const std::int64_t m = std::min(k, l);
  const std::int64_t big_m = std::max(k, l);
  if (m == 1 || t == 1) return Verdict::kTie;
  if (t <= m) return (m == 2 && t == 2) ? Verdict::kTie : Verdict::kSmallWins;
  // (M m^2 - 2) / (m - 1) < T, with m - 1 > 0.
  if (big_m * m * m - 2 < t * (m - 1)) return Verdict::kBigWins;
  return Verdict::kUndetermined;
}

BoundsReport LowerBounds(std::int64_t k, std::int64_t l, std::int64_t t) {
  RequirePositive(k, l, t);
  BoundsReport b;
  const std::int64_t big_m = std::max(k, l);
  const std::int64_t smallest = std::min({k, l, t});
  b.bound1 = k * l + big_m + t - 1;
  b.best = b.bound1;
  if (smallest >= 2) {
    b.bound2 = k * l + big_m + t;
    b.best = std::max(b.best, *b.bound2);
  }
  for (std::int64_t m = 1; m <= t; ++m) {
    const std::int64_t v = k * l + k + l + t + m - 2 - m * smallest;
    b.bound3_by_m.push_back(v);
    b.best = std::max(b.best, v);
  }
  return b;
}

Optimality OptimalityCheck(std::int64_t k, std::int64_t l, std::int64_t t) {
  const std::int64_t n = SmallPrecomputeServersSymmetric(k, l, t);
  const std::int64_t bound = LowerBounds(k, l, t).best;
  return {n == bound, n - bound};
}

bool SmallClaimedOptimal(std::int64_t k, std::int64_t l, std::int64_t t) {
  return k == 1 || l == 1 || t <= 2;
}

CollusionResult CollusionTolerance(std::int64_t k, std::int64_t l,
                                   const Rational& delta, bool precompute) {
  SDMM_ENFORCE(k >= 1 && l >= 1, ErrorCode::kInvalidArgument,
               "K, L must be positive");
  SDMM_ENFORCE(delta >= Rational(0) && delta < Rational(1),
               ErrorCode::kInvalidFraction,
               "collusion fraction must lie in [0, 1)");
  CollusionResult out;
  Rational numerator;
  Rational denominator;
  if (precompute) {
    numerator = Rational(2 * k * l - std::max(k, l));
    denominator = Rational(1) - delta;
  } else {
    numerator = Rational(2 * k * l - 1);
    denominator = Rational(1) - Rational(2) * delta;
  }
  if (denominator <= Rational(0)) return out;
  const Rational n = numerator / denominator;
  if (n <= Rational(0)) return out;
  out.feasible = true;
  out.threshold = n;
  out.servers = Ceil(n);
  return out;
}

ComplexityExponents ComplexityExponent(const ComplexityParams& cp,
                                       bool precompute) {
  SDMM_ENFORCE(cp.omega >= Rational(2), ErrorCode::kInvalidArgument,
               "omega must be at least 2");
  SDMM_ENFORCE(cp.epsilon >= Rational(0) && cp.epsilon <= Rational(1),
               ErrorCode::kInvalidArgument, "epsilon must lie in [0, 1]");
  const Rational delta_limit = precompute ? Rational(1) : Rational(1, 2);
  SDMM_ENFORCE(cp.delta >= Rational(0) && cp.delta < delta_limit,
               ErrorCode::kInvalidFraction,
               precompute ? "delta must lie in [0, 1)"
                          : "delta must lie in [0, 1/2)");
  const Rational& w = cp.omega;
  const Rational& e = cp.epsilon;
  const Rational encode_slope = precompute ? Rational(2) : Rational(3);
  ComplexityExponents out;
  out.exponent = std::max(e + w - e * w, Rational(2) + encode_slope * e);
  if (precompute) {
    out.optimal_epsilon = (w - Rational(2)) / (w + Rational(1));
    out.optimal_exponent = (Rational(4) * w - Rational(2)) / (w + Rational(1));
  } else {
    out.optimal_epsilon = (w - Rational(2)) / (w + Rational(2));
    out.optimal_exponent = Rational(5) - Rational(12) / (w + Rational(2));
  }
  return out;
}

}  // namespace sdmm
