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


#include "sdmm/security_audit.h"

#include <cmath>
#include <map>
#include <sstream>

#include "sdmm/combinatorics.h"
#include "sdmm/csv.h"
#include "sdmm/error.h"

namespace sdmm {

namespace {

std::string JoinSubset(const std::vector<std::size_t>& subset) {
  std::string out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(subset[i]);
  }
  return out;
}

// Returns q^e, or 0 when it exceeds `limit`.
std::uint64_t BoundedPow(std::uint64_t q, std::uint64_t e,
                         std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (v > limit / q) return 0;
    v *= q;
  }
  return v;
}

double EntropyBits(const std::vector<std::uint64_t>& counts,
                   std::uint64_t total) {
  double h = 0.0;
  for (std::uint64_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

std::vector<SubsetFinding> LeakageReport::ViolatingSubsets() const {
  std::vector<SubsetFinding> out;
  for (const auto& f : findings) {
    if (!f.passed) out.push_back(f);
  }
  return out;
}

std::string LeakageReport::ToText() const {
  std::ostringstream os;
  os << "mode: "
     << (mode == AuditMode::kRankCheck ? "rank-check" : "exhaustive-mi")
     << '\n'
     << "subset size: " << subset_size << '\n'
     << "subsets checked: " << checked_subsets << " of " << total_subsets
     << (exhaustive ? " (exhaustive)" : " (sampled)") << '\n';
  if (mode == AuditMode::kExhaustiveMi) {
    os << "max mutual information: " << max_mi_bits << " bits"
       << (mi_exactly_zero ? " (exactly zero)" : "") << '\n';
  }
  os << "violations: " << violation_count << '\n';
  for (const auto& f : ViolatingSubsets()) {
    os << "  {" << JoinSubset(f.subset) << "} " << f.check;
    if (mode == AuditMode::kExhaustiveMi) os << " mi=" << f.mi_bits;
    os << '\n';
  }
  os << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string LeakageReport::ToCsv() const {
  CsvWriter w({"subset", "check", "result", "mi_bits"});
  std::ostringstream summary;
  summary << " mode="
          << (mode == AuditMode::kRankCheck ? "rank-check" : "exhaustive-mi")
          << " subset_size=" << subset_size << " checked=" << checked_subsets
          << " total=" << total_subsets
          << " exhaustive=" << (exhaustive ? 1 : 0)
          << " violations=" << violation_count;
  w.Comment(summary.str());
  for (const auto& f : findings) {
    std::ostringstream mi;
    mi << f.mi_bits;
    w.Row({JoinSubset(f.subset), f.check, f.passed ? "pass" : "fail",
           mode == AuditMode::kExhaustiveMi ? mi.str() : ""});
  }
  return w.str();
}

LeakageReport RankAudit(const SchemeInstance& si, std::uint64_t seed,
                        std::size_t max_recorded) {
  const SubsetRankResult r =
      CheckSubsetRanks(si.field, si.points, si.exponents.alpha_rand,
                       si.exponents.beta_rand, seed, max_recorded);
  LeakageReport report;
  report.mode = AuditMode::kRankCheck;
  report.subset_size = r.subset_size;
  report.total_subsets = r.total_subsets;
  report.checked_subsets = r.checked_subsets;
  report.exhaustive = r.exhaustive;
  report.violation_count = r.violation_count;
  for (const auto& v : r.violations) {
    report.findings.push_back({v.subset, v.check, false, 0.0});
  }
  return report;
}

LeakageReport ExhaustiveMiAudit(const SchemeInstance& si,
                                std::size_t subset_size, MaskHook hook) {
  const GaspExponents& e = si.exponents;
  SDMM_ENFORCE(e.row_blocks() == 1 && e.col_blocks() == 1,
               ErrorCode::kInvalidArgument,
               "exhaustive leakage audit supports K = L = 1 only");
  const std::size_t n = si.points.size();
  SDMM_ENFORCE(subset_size >= 1 && subset_size <= n,
               ErrorCode::kInvalidArgument,
               "subset size must lie in [1, " + std::to_string(n) + "]");
  const PrimeField& field = si.field;
  const std::uint64_t q = field.modulus();
  const std::size_t t = e.colluders();
  const std::uint64_t mask_digits = hook == MaskHook::kZeroMasks ? 0 : 2 * t;
  const std::uint64_t secrets = BoundedPow(q, 2, kMaxMiEnumeration);
  const std::uint64_t masks = BoundedPow(q, mask_digits, kMaxMiEnumeration);
  SDMM_ENFORCE(secrets != 0 && masks != 0 &&
                   secrets <= kMaxMiEnumeration / masks,
               ErrorCode::kAuditTooLarge,
               "enumeration of q^" + std::to_string(2 + mask_digits) +
                   " cases with q=" + std::to_string(q) +
                   " exceeds the limit of 1e8");
  const std::uint64_t view_space =
      BoundedPow(q, 2 * subset_size, kMaxMiEnumeration);
  SDMM_ENFORCE(view_space != 0, ErrorCode::kAuditTooLarge,
               "view space too large");

  // Powers of each point at alpha_info[0], alpha_rand, beta_info[0],
  // beta_rand.
  struct PointPowers {
    std::uint64_t a_info;
    std::vector<std::uint64_t> a_rand;
    std::uint64_t b_info;
    std::vector<std::uint64_t> b_rand;
  };
  std::vector<PointPowers> pows;
  for (const auto& p : si.points) {
    PointPowers pp;
    auto pw = [&](Exponent x) {
      return field.Pow(p.value(), static_cast<std::uint64_t>(x));
    };
    pp.a_info = pw(e.alpha_info[0]);
    pp.b_info = pw(e.beta_info[0]);
    for (Exponent x : e.alpha_rand) pp.a_rand.push_back(pw(x));
    for (Exponent x : e.beta_rand) pp.b_rand.push_back(pw(x));
    pows.push_back(std::move(pp));
  }

  LeakageReport report;
  report.mode = AuditMode::kExhaustiveMi;
  report.subset_size = subset_size;
  report.total_subsets = Binomial(n, subset_size);
  report.exhaustive = true;

  std::vector<std::uint64_t> digits(mask_digits);
  std::vector<std::uint64_t> joint(view_space);
  std::vector<std::uint64_t> cond(view_space);
  ForEachCombination(n, subset_size, [&](std::span<const std::size_t> sub) {
    ++report.checked_subsets;
    std::fill(joint.begin(), joint.end(), 0);
    bool identical = true;
    std::vector<std::uint64_t> first;
    double cond_entropy = 0.0;
    for (std::uint64_t s = 0; s < secrets; ++s) {
      const std::uint64_t a = s / q;
      const std::uint64_t b = s % q;
      std::fill(cond.begin(), cond.end(), 0);
      for (std::uint64_t m = 0; m < masks; ++m) {
        std::uint64_t rest = m;
        for (auto& d : digits) {
          d = rest % q;
          rest /= q;
        }
        std::uint64_t view = 0;
        for (std::size_t i : sub) {
          std::uint64_t f = field.Mul(a, pows[i].a_info);
          std::uint64_t g = field.Mul(b, pows[i].b_info);
          for (std::size_t k = 0; k < mask_digits / 2; ++k) {
            f = field.Add(f, field.Mul(digits[k], pows[i].a_rand[k]));
            g = field.Add(g, field.Mul(digits[t + k], pows[i].b_rand[k]));
          }
          view = (view * q + f) * q + g;
        }
        ++cond[view];
        ++joint[view];
      }
      if (s == 0) {
        first = cond;
      } else if (cond != first) {
        identical = false;
      }
      cond_entropy += EntropyBits(cond, masks);
    }
    cond_entropy /= static_cast<double>(secrets);
    double mi = identical ? 0.0
                          : EntropyBits(joint, secrets * masks) - cond_entropy;
    if (mi < 0.0) mi = 0.0;
    SubsetFinding finding{std::vector<std::size_t>(sub.begin(), sub.end()),
                          "mi", identical, mi};
    if (!identical) {
      ++report.violation_count;
      report.mi_exactly_zero = false;
    }
    report.max_mi_bits = std::max(report.max_mi_bits, mi);
    report.findings.push_back(std::move(finding));
    return true;
  });
  return report;
}

}  // namespace sdmm
