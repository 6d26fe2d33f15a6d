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

#include "sdmm/sparse_poly.h"

#include <string>

#include "sdmm/error.h"

namespace sdmm {

SparsePoly::SparsePoly(const PrimeField& field, std::size_t rows,
                       std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  SDMM_ENFORCE(rows > 0 && cols > 0, ErrorCode::kDimensionMismatch,
               "coefficient dimensions must be positive");
}

void SparsePoly::CheckCoefficient(Exponent e, const FieldMatrix& coeff) const {
  SDMM_ENFORCE(e >= 0, ErrorCode::kInvalidArgument,
               "negative exponent " + std::to_string(e));
  SDMM_ENFORCE(coeff.field() == field_, ErrorCode::kFieldMismatch,
               "coefficient field differs from polynomial field");
  SDMM_ENFORCE(coeff.rows() == rows_ && coeff.cols() == cols_,
               ErrorCode::kDimensionMismatch,
               "coefficient shape differs from polynomial shape");
}

void SparsePoly::SetTerm(Exponent e, const FieldMatrix& coeff) {
  CheckCoefficient(e, coeff);
  if (coeff.IsZero()) {
    terms_.erase(e);
  } else {
    terms_.insert_or_assign(e, coeff);
  }
}

void SparsePoly::AddTerm(Exponent e, const FieldMatrix& coeff) {
  CheckCoefficient(e, coeff);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!coeff.IsZero()) terms_.emplace(e, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.IsZero()) terms_.erase(it);
}

FieldMatrix SparsePoly::Coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldMatrix(field_, rows_, cols_) : it->second;
}

std::vector<Exponent> SparsePoly::Support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

FieldMatrix SparsePoly::Evaluate(const FieldElement& a) const {
  SDMM_ENFORCE(a.field() == field_, ErrorCode::kFieldMismatch,
               "evaluation point from F_" +
                   std::to_string(a.field().modulus()) + ", polynomial over F_" +
                   std::to_string(field_.modulus()));
  FieldMatrix acc(field_, rows_, cols_);
  for (const auto& [e, coeff] : terms_) {
    acc.AddScaled(coeff, field_.Pow(a.value(), static_cast<std::uint64_t>(e)));
  }
  return acc;
}

SparsePoly operator*(const SparsePoly& p, const SparsePoly& g) {
  SDMM_ENFORCE(p.field_ == g.field_, ErrorCode::kFieldMismatch,
               "polynomials over different fields");
  SDMM_ENFORCE(p.cols_ == g.rows_, ErrorCode::kDimensionMismatch,
               "coefficient shapes are not multiplication-compatible");
  SparsePoly out(p.field_, p.rows_, g.cols_);
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : g.terms_) {
      out.AddTerm(e1 + e2, c1 * c2);
    }
  }
  return out;
}

SparsePoly operator+(const SparsePoly& p, const SparsePoly& g) {
  SDMM_ENFORCE(p.field_ == g.field_, ErrorCode::kFieldMismatch,
               "polynomials over different fields");
  SDMM_ENFORCE(p.rows_ == g.rows_ && p.cols_ == g.cols_,
               ErrorCode::kDimensionMismatch, "coefficient shapes differ");
  SparsePoly out = p;
  for (const auto& [e, c] : g.terms_) out.AddTerm(e, c);
  return out;
}

}  // namespace sdmm
