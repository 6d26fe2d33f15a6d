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

#include "sdmm/degree_table.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "sdmm/error.h"

namespace sdmm {

namespace {

bool StrictlyIncreasing(const std::vector<Exponent>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) ==
         v.end();
}

std::vector<Exponent> SortedUnion(std::vector<Exponent> a,
                                  const std::vector<Exponent>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

bool Disjoint(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  for (Exponent x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  }
  return true;
}

}  // namespace

void SchemeParams::Validate() const {
  SDMM_ENFORCE(row_blocks >= 1 && col_blocks >= 1 && colluders >= 1,
               ErrorCode::kInvalidArgument,
               "K, L, T must be positive: " + ToString());
  SDMM_ENFORCE(chain_length >= 1 &&
                   chain_length <= std::min(row_blocks, colluders),
               ErrorCode::kInvalidChainLength,
               "chain length must satisfy 1 <= r <= min(K, T): " + ToString());
}

std::string SchemeParams::ToString() const {
  std::ostringstream os;
  os << "(K=" << row_blocks << ", L=" << col_blocks << ", T=" << colluders
     << ", r=" << chain_length << ")";
  return os.str();
}

std::vector<Exponent> GaspExponents::Alpha() const {
  std::vector<Exponent> out = alpha_info;
  out.insert(out.end(), alpha_rand.begin(), alpha_rand.end());
  return out;
}

std::vector<Exponent> GaspExponents::Beta() const {
  std::vector<Exponent> out = beta_info;
  out.insert(out.end(), beta_rand.begin(), beta_rand.end());
  return out;
}

Exponent GaspExponents::MaxExponent() const {
  Exponent m = 0;
  for (const auto* v : {&alpha_info, &alpha_rand, &beta_info, &beta_rand}) {
    if (!v->empty()) m = std::max(m, *std::max_element(v->begin(), v->end()));
  }
  return m;
}

void GaspExponents::Validate() const {
  SDMM_ENFORCE(!alpha_info.empty() && !beta_info.empty(),
               ErrorCode::kInvalidArgument, "information exponents missing");
  SDMM_ENFORCE(alpha_rand.size() == beta_rand.size(),
               ErrorCode::kInvalidArgument,
               "alpha_rand and beta_rand differ in length");
  for (const auto* v : {&alpha_info, &alpha_rand, &beta_info, &beta_rand}) {
    SDMM_ENFORCE(StrictlyIncreasing(*v), ErrorCode::kInvalidArgument,
                 "exponent list is not strictly increasing");
    SDMM_ENFORCE(v->empty() || v->front() >= 0, ErrorCode::kInvalidArgument,
                 "negative exponent");
  }
  SDMM_ENFORCE(Disjoint(alpha_info, alpha_rand), ErrorCode::kInvalidArgument,
               "alpha_info and alpha_rand overlap");
  SDMM_ENFORCE(Disjoint(beta_info, beta_rand), ErrorCode::kInvalidArgument,
               "beta_info and beta_rand overlap");
}

GaspExponents BuildGaspExponents(const SchemeParams& params) {
  params.Validate();
  const Exponent k = params.row_blocks;
  const Exponent l = params.col_blocks;
  const Exponent t = params.colluders;
  const Exponent r = params.chain_length;
  GaspExponents e;
  for (Exponent i = 0; i < k; ++i) e.alpha_info.push_back(i);
  for (Exponent j = 0; j < l; ++j) e.beta_info.push_back(j * k);
  for (Exponent j = 0; j < t; ++j) e.beta_rand.push_back(k * l + j);
  // Chains of r consecutive integers starting at KL, KL + K, KL + 2K, ...
  for (Exponent u = 0; static_cast<Exponent>(e.alpha_rand.size()) < t; ++u) {
    for (Exponent j = 0; j < r && static_cast<Exponent>(e.alpha_rand.size()) < t;
         ++j) {
      e.alpha_rand.push_back(k * l + u * k + j);
    }
  }
  return e;
}

DegreeTable::DegreeTable(GaspExponents exponents)
    : exponents_(std::move(exponents)),
      alpha_(exponents_.Alpha()),
      beta_(exponents_.Beta()) {}

DegreeTable::Region DegreeTable::RegionOf(std::size_t row,
                                          std::size_t col) const {
  const bool info_row = row < exponents_.alpha_info.size();
  const bool info_col = col < exponents_.beta_info.size();
  if (info_row) return info_col ? Region::kInfoInfo : Region::kInfoRand;
  return info_col ? Region::kRandInfo : Region::kRandRand;
}

std::string DegreeTable::RenderText() const {
  Exponent widest = 0;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) widest = std::max(widest, Cell(i, j));
  }
  const int width = static_cast<int>(std::to_string(widest).size()) + 2;
  std::ostringstream os;
  os << std::setw(width) << "" << " |";
  for (std::size_t j = 0; j < cols(); ++j) {
    if (j == exponents_.beta_info.size()) os << " |";
    os << std::setw(width) << beta_[j];
  }
  os << '\n';
  const std::size_t rule = static_cast<std::size_t>(width) * (cols() + 1) + 4;
  os << std::string(rule, '-') << '\n';
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i == exponents_.alpha_info.size() && i != 0) {
      os << std::string(rule, '-') << '\n';
    }
    os << std::setw(width) << alpha_[i] << " |";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j == exponents_.beta_info.size()) os << " |";
      const std::string cell = RegionOf(i, j) == Region::kInfoInfo
                                   ? "[" + std::to_string(Cell(i, j)) + "]"
                                   : std::to_string(Cell(i, j));
      os << std::setw(width) << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::string DegreeTable::RenderCsv() const {
  std::ostringstream os;
  os << "alpha";
  for (Exponent b : beta_) os << ',' << b;
  os << '\n';
  for (std::size_t i = 0; i < rows(); ++i) {
    os << alpha_[i];
    for (std::size_t j = 0; j < cols(); ++j) os << ',' << Cell(i, j);
    os << '\n';
  }
  return os.str();
}

std::vector<Exponent> Sumset(const std::vector<Exponent>& a,
                             const std::vector<Exponent>& b) {
  std::vector<Exponent> out;
  out.reserve(a.size() * b.size());
  for (Exponent x : a) {
    for (Exponent y : b) out.push_back(x + y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Exponent> SupportDecomposition::FullSupport() const {
  return SortedUnion(PrecomputeSupport(), rand_rand);
}

std::vector<Exponent> SupportDecomposition::PrecomputeSupport() const {
  return SortedUnion(SortedUnion(info_info, info_rand), rand_info);
}

SupportDecomposition DecomposeSupport(const GaspExponents& e) {
  return {Sumset(e.alpha_info, e.beta_info), Sumset(e.alpha_info, e.beta_rand),
          Sumset(e.alpha_rand, e.beta_info), Sumset(e.alpha_rand, e.beta_rand)};
}

std::int64_t CountServers(const GaspExponents& exponents, bool precompute) {
  const SupportDecomposition d = DecomposeSupport(exponents);
  return static_cast<std::int64_t>(precompute ? d.PrecomputeSupport().size()
                                              : d.FullSupport().size());
}

ConditionReport CheckTableConditions(const GaspExponents& e) {
  ConditionReport report;
  const std::vector<Exponent> alpha = e.Alpha();
  const std::vector<Exponent> beta = e.Beta();

  std::vector<Exponent> cells;
  cells.reserve(alpha.size() * beta.size());
  for (Exponent a : alpha) {
    for (Exponent b : beta) cells.push_back(a + b);
  }
  std::sort(cells.begin(), cells.end());
  for (std::size_t i = 0; i < e.alpha_info.size(); ++i) {
    for (std::size_t j = 0; j < e.beta_info.size(); ++j) {
      const Exponent v = e.alpha_info[i] + e.beta_info[j];
      const auto [lo, hi] = std::equal_range(cells.begin(), cells.end(), v);
      if (hi - lo != 1) {
        report.info_unique = false;
        report.violations.push_back(
            {TableViolation::Kind::kInfoCollision, i, j, v});
      }
    }
  }

  const std::size_t k = e.alpha_info.size();
  const std::size_t l = e.beta_info.size();
  for (std::size_t i = 0; i < e.alpha_rand.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (e.alpha_rand[i] == e.alpha_rand[j]) {
        report.rand_distinct = false;
        report.violations.push_back({TableViolation::Kind::kAlphaRandRepeat,
                                     k + i, 0, e.alpha_rand[i]});
        break;
      }
    }
  }
  for (std::size_t i = 0; i < e.beta_rand.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (e.beta_rand[i] == e.beta_rand[j]) {
        report.rand_distinct = false;
        report.violations.push_back({TableViolation::Kind::kBetaRandRepeat, 0,
                                     l + i, e.beta_rand[i]});
        break;
      }
    }
  }
  return report;
}

std::int64_t SymmetrizedPrecomputeCount(const SchemeParams& params) {
  std::int64_t best = -1;
  for (const SchemeParams& p : {params, params.Transposed()}) {
    if (p.row_blocks < 1 || p.col_blocks < 1 || p.colluders < 1 ||
        p.chain_length < 1 ||
        p.chain_length > std::min(p.row_blocks, p.colluders)) {
      continue;
    }
    const std::int64_t n = CountServers(BuildGaspExponents(p), true);
    best = best < 0 ? n : std::min(best, n);
  }
  SDMM_ENFORCE(best >= 0, ErrorCode::kInvalidChainLength,
               "chain length invalid in both orientations: " +
                   params.ToString());
  return best;
}

}  // namespace sdmm
