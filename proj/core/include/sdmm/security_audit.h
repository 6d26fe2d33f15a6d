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


// T-security audits for a scheme instance.
//
// RankAudit checks the algebraic sufficient condition: for every audited
// T-subset of servers, the power matrices of the points at the random
// exponents are invertible, so the masks alone make the shares uniform.
//
// ExhaustiveMiAudit is a brute-force oracle for tiny instances (K = L = 1,
// 1 x 1 blocks): it enumerates every secret and every mask, builds the
// distribution of a subset's view for each secret, and decides
// I(view; A, B) = 0 exactly by comparing integer histograms.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sdmm/protocol.h"

namespace sdmm {

// Total enumeration (secret values times mask values) above which
// ExhaustiveMiAudit refuses with kAuditTooLarge.
inline constexpr std::uint64_t kMaxMiEnumeration = 100000000;

enum class AuditMode { kRankCheck, kExhaustiveMi };

struct SubsetFinding {
  std::vector<std::size_t> subset;  // server indices
  std::string check;                // "alpha_rand", "beta_rand" or "mi"
  bool passed = false;
  double mi_bits = 0.0;  // kExhaustiveMi only
};

struct LeakageReport {
  AuditMode mode = AuditMode::kRankCheck;
  std::size_t subset_size = 0;
  std::uint64_t total_subsets = 0;
  std::uint64_t checked_subsets = 0;
  bool exhaustive = true;
  std::uint64_t violation_count = 0;
  // kExhaustiveMi: every subset. kRankCheck: violating subsets only (the
  // first few if there are many).
  std::vector<SubsetFinding> findings;
  double max_mi_bits = 0.0;
  bool mi_exactly_zero = true;

  bool passed() const { return violation_count == 0; }
  std::vector<SubsetFinding> ViolatingSubsets() const;

  std::string ToText() const;
  // Header "subset,check,result,mi_bits"; subsets are ';'-joined indices.
  std::string ToCsv() const;
};

// Sampling (when C(N, T) > 1e5) is drawn from `seed`.
LeakageReport RankAudit(const SchemeInstance& si, std::uint64_t seed = 0,
                        std::size_t max_recorded = 1000);

enum class MaskHook {
  kNone,
  // Forces every random block to zero: a deliberately broken scheme.
  kZeroMasks,
};

// Audits every subset of `subset_size` servers. Requires K = L = 1 (else
// kInvalidArgument) and q^(2 + 2T) <= kMaxMiEnumeration (else
// kAuditTooLarge).
LeakageReport ExhaustiveMiAudit(const SchemeInstance& si,
                                std::size_t subset_size,
                                MaskHook hook = MaskHook::kNone);

}  // namespace sdmm
