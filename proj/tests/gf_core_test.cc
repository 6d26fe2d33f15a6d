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


#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "sdmm/error.h"
#include "sdmm/field_matrix.h"
#include "sdmm/linalg.h"
#include "sdmm/sparse_poly.h"

namespace sdmm {
namespace {

using testing::Gen;

FieldMatrix Scalar(const PrimeField& f, std::uint64_t v) {
  return FieldMatrix(f, 1, 1, {v});
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kInternal;
}

TEST(FieldMatrixTest, ProductMatchesBigIntegerOracle) {
  const PrimeField f;
  Gen gen(3);
  for (int i = 0; i < 20; ++i) {
    const auto n = static_cast<std::size_t>(gen.Int(1, 9));
    const auto m = static_cast<std::size_t>(gen.Int(1, 9));
    const auto p = static_cast<std::size_t>(gen.Int(1, 9));
    const FieldMatrix a = FieldMatrix::Random(f, n, m, gen.rng());
    const FieldMatrix b = FieldMatrix::Random(f, m, p, gen.rng());
    const FieldMatrix c = a * b;
    const auto oracle = testing::BigMatMul(a, b);
    ASSERT_EQ(std::vector<std::uint64_t>(c.data().begin(), c.data().end()),
              oracle);
  }
}

TEST(FieldMatrixTest, BlocksAndConcatRoundTrip) {
  const PrimeField f(101);
  Gen gen(4);
  const FieldMatrix a = FieldMatrix::Random(f, 6, 4, gen.rng());
  std::vector<FieldMatrix> rows = {a.Block(0, 0, 2, 4), a.Block(2, 0, 4, 4)};
  EXPECT_EQ(FieldMatrix::VConcat(rows), a);
  std::vector<FieldMatrix> cols = {a.Block(0, 0, 6, 1), a.Block(0, 1, 6, 3)};
  EXPECT_EQ(FieldMatrix::HConcat(cols), a);
  EXPECT_EQ(CodeOf([&] { a.Block(5, 0, 2, 1); }),
            ErrorCode::kDimensionMismatch);
}

TEST(FieldMatrixTest, ShapeAndFieldChecks) {
  const PrimeField f7(7);
  const PrimeField f11(11);
  EXPECT_EQ(CodeOf([&] { FieldMatrix(f7, 0, 1); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([&] { (void)(FieldMatrix(f7, 2, 2) + FieldMatrix(f11, 2, 2)); }),
            ErrorCode::kFieldMismatch);
  EXPECT_EQ(CodeOf([&] { (void)(FieldMatrix(f7, 2, 3) * FieldMatrix(f7, 2, 3)); }),
            ErrorCode::kDimensionMismatch);
  const FieldMatrix id = FieldMatrix::Identity(f7, 3);
  const FieldMatrix m = FieldMatrix::FromRows(f7, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  EXPECT_EQ(m * id, m);
  EXPECT_EQ(m.at(2, 0), 0u);  // 7 reduces to 0
  EXPECT_TRUE((m - m).IsZero());
}

TEST(SparsePolyTest, CanonicalFormDropsZeros) {
  const PrimeField f(7);
  SparsePoly p(f, 1, 1);
  p.SetTerm(3, Scalar(f, 0));
  EXPECT_TRUE(p.IsZero());
  p.AddTerm(2, Scalar(f, 4));
  p.AddTerm(2, Scalar(f, 3));  // 4 + 3 = 0 mod 7
  EXPECT_TRUE(p.IsZero());
  p.SetTerm(5, Scalar(f, 1));
  EXPECT_EQ(p.Support(), std::vector<Exponent>{5});
  EXPECT_TRUE(p.Coefficient(4).IsZero());
  EXPECT_EQ(CodeOf([&] { p.SetTerm(-1, Scalar(f, 1)); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { p.SetTerm(1, FieldMatrix(f, 2, 1)); }),
            ErrorCode::kDimensionMismatch);
}

TEST(SparsePolyTest, EvaluateExamples) {
  const PrimeField f(7);
  SparsePoly c(f, 2, 2);
  const FieldMatrix coeff = FieldMatrix::FromRows(f, {{1, 2}, {3, 4}});
  c.SetTerm(0, coeff);
  EXPECT_EQ(c.Evaluate(FieldElement(f, 5)), coeff);

  SparsePoly p(f, 1, 1);
  p.SetTerm(0, Scalar(f, 1));
  p.SetTerm(1, Scalar(f, 1));
  EXPECT_EQ(p.Evaluate(FieldElement(f, 3)), Scalar(f, 4));
  EXPECT_EQ(CodeOf([&] { p.Evaluate(FieldElement(PrimeField(5), 1)); }),
            ErrorCode::kFieldMismatch);
}

TEST(SparsePolyTest, EvaluateMatchesDenseHorner) {
  const PrimeField f(101);
  Gen gen(21);
  for (int trial = 0; trial < 50; ++trial) {
    SparsePoly p(f, 2, 3);
    std::vector<std::vector<std::uint64_t>> dense(
        30, std::vector<std::uint64_t>(6, 0));
    for (int t = 0; t < 5; ++t) {
      const auto e = gen.Int(0, 29);
      const FieldMatrix c = FieldMatrix::Random(f, 2, 3, gen.rng());
      p.AddTerm(e, c);
      for (std::size_t i = 0; i < 6; ++i) {
        dense[static_cast<std::size_t>(e)][i] =
            (dense[static_cast<std::size_t>(e)][i] + c.data()[i]) % 101;
      }
    }
    const std::uint64_t x = gen.Below(101);
    const FieldMatrix got = p.Evaluate(FieldElement(f, x));
    ASSERT_EQ(std::vector<std::uint64_t>(got.data().begin(), got.data().end()),
              testing::HornerEval(dense, x, 101));
  }
}

TEST(SparsePolyTest, ProductExamples) {
  const PrimeField f(101);
  const FieldMatrix id = FieldMatrix::Identity(f, 2);
  SparsePoly p(f, 2, 2);
  p.SetTerm(0, id);
  EXPECT_EQ(p * p, p);

  Gen gen(5);
  SparsePoly a(f, 2, 3);
  a.SetTerm(0, FieldMatrix::Random(f, 2, 3, gen.rng()));
  a.SetTerm(1, FieldMatrix::Random(f, 2, 3, gen.rng()));
  SparsePoly b(f, 3, 2);
  b.SetTerm(0, FieldMatrix::Random(f, 3, 2, gen.rng()));
  b.SetTerm(2, FieldMatrix::Random(f, 3, 2, gen.rng()));
  const SparsePoly h = a * b;
  EXPECT_EQ(h.rows(), 2u);
  EXPECT_EQ(h.cols(), 2u);
  // Exponent 1 only arises as 1 + 0.
  EXPECT_EQ(h.Coefficient(1), a.Coefficient(1) * b.Coefficient(0));
  EXPECT_EQ(CodeOf([&] { (void)(a * a); }), ErrorCode::kDimensionMismatch);
}

// Evaluation is a ring homomorphism: (pg)(x) = p(x) g(x).
TEST(SparsePolyProperty, EvaluationHomomorphism) {
  for (std::uint64_t q : {std::uint64_t{101}, PrimeField::kMersenne61}) {
    const PrimeField f(q);
    Gen gen(q ^ 0x77);
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = static_cast<std::size_t>(gen.Int(1, 3));
      SparsePoly p(f, 1 + trial % 2, m);
      SparsePoly g(f, m, 1 + trial % 3);
      for (int t = 0; t < 4; ++t) {
        p.AddTerm(gen.Int(0, 12), FieldMatrix::Random(f, p.rows(), m, gen.rng()));
        g.AddTerm(gen.Int(0, 12), FieldMatrix::Random(f, m, g.cols(), gen.rng()));
      }
      const SparsePoly h = p * g;
      for (Exponent e : h.Support()) ASSERT_FALSE(h.Coefficient(e).IsZero());
      for (int k = 0; k < 20; ++k) {
        const FieldElement x(f, gen.Below(q));
        ASSERT_EQ(h.Evaluate(x), p.Evaluate(x) * g.Evaluate(x));
      }
      const SparsePoly sum = p + p;
      const FieldElement x(f, gen.Below(q));
      ASSERT_EQ(sum.Evaluate(x), p.Evaluate(x) + p.Evaluate(x));
    }
  }
}

TEST(LinalgTest, SolveExamples) {
  const PrimeField f(7);
  {
    const std::vector<Exponent> exps = {0};
    const std::vector<FieldElement> pts = {FieldElement(f, 3)};
    const std::vector<FieldMatrix> vals = {Scalar(f, 6)};
    const auto c = GenVandermondeSolve(f, exps, pts, vals);
    EXPECT_EQ(c.at(0), Scalar(f, 6));
  }
  {
    const std::vector<Exponent> exps = {0, 1};
    const std::vector<FieldElement> pts = {FieldElement(f, 1), FieldElement(f, 2)};
    const std::vector<FieldMatrix> vals = {Scalar(f, 3), Scalar(f, 5)};
    const auto c = GenVandermondeSolve(f, exps, pts, vals);
    EXPECT_EQ(c.at(0), Scalar(f, 1));
    EXPECT_EQ(c.at(1), Scalar(f, 2));
  }
}

TEST(LinalgTest, SolveRejectsBadSystems) {
  const PrimeField f(7);
  const std::vector<FieldMatrix> vals = {Scalar(f, 1), Scalar(f, 2)};
  const std::vector<FieldElement> dup = {FieldElement(f, 3), FieldElement(f, 3)};
  const std::vector<Exponent> exps = {0, 1};
  EXPECT_EQ(CodeOf([&] { GenVandermondeSolve(f, exps, dup, vals); }),
            ErrorCode::kSingularSystem);
  // x^0 and x^6 agree on all of F_7^*.
  const std::vector<Exponent> aliased = {0, 6};
  const std::vector<FieldElement> pts = {FieldElement(f, 2), FieldElement(f, 3)};
  EXPECT_EQ(CodeOf([&] { GenVandermondeSolve(f, aliased, pts, vals); }),
            ErrorCode::kSingularSystem);
  const std::vector<FieldElement> with_zero = {FieldElement(f, 0), FieldElement(f, 3)};
  EXPECT_EQ(CodeOf([&] { GenVandermondeSolve(f, exps, with_zero, vals); }),
            ErrorCode::kInvalidArgument);
  const std::vector<Exponent> unsorted = {1, 0};
  EXPECT_EQ(CodeOf([&] { GenVandermondeSolve(f, unsorted, pts, vals); }),
            ErrorCode::kInvalidArgument);
  const std::vector<FieldMatrix> short_vals = {Scalar(f, 1)};
  EXPECT_EQ(CodeOf([&] { GenVandermondeSolve(f, exps, pts, short_vals); }),
            ErrorCode::kDimensionMismatch);
}

// Interpolating samples of a random sparse polynomial on its own support
// recovers it.
TEST(LinalgProperty, InterpolationRoundTrip) {
  const PrimeField f;
  Gen gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    SparsePoly p(f, 2, 2);
    const int terms = static_cast<int>(gen.Int(1, 10));
    for (int t = 0; t < terms; ++t) {
      p.AddTerm(gen.Int(0, 60), FieldMatrix::Random(f, 2, 2, gen.rng()));
    }
    const std::vector<Exponent> support = p.Support();
    std::vector<FieldElement> pts;
    std::vector<FieldMatrix> vals;
    std::set<std::uint64_t> used;
    while (pts.size() < support.size()) {
      const std::uint64_t v = f.SampleNonzero(gen.rng());
      if (!used.insert(v).second) continue;
      pts.emplace_back(f, v);
      vals.push_back(p.Evaluate(pts.back()));
    }
    const auto coeffs = GenVandermondeSolve(f, support, pts, vals);
    ASSERT_EQ(coeffs.size(), support.size());
    for (Exponent e : support) ASSERT_EQ(coeffs.at(e), p.Coefficient(e));
  }
}

TEST(LinalgProperty, RankAndInvertibilityAgree) {
  const PrimeField f(11);
  Gen gen(8);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(gen.Int(1, 4));
    FieldMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, gen.Below(3));
    }
    std::vector<std::uint64_t> scratch(m.data().begin(), m.data().end());
    ASSERT_EQ(SquareInvertibleInPlace(f, n, scratch), Rank(m) == n);
  }
}

TEST(LinalgTest, PowerMatrixEntries) {
  const PrimeField f(101);
  const std::vector<FieldElement> pts = {FieldElement(f, 2), FieldElement(f, 3)};
  const std::vector<Exponent> exps = {0, 3, 7};
  const FieldMatrix m = PowerMatrix(f, pts, exps);
  ASSERT_EQ(m.rows(), 2u);
  ASSERT_EQ(m.cols(), 3u);
  EXPECT_EQ(m.at(0, 1), 8u);
  EXPECT_EQ(m.at(1, 2), testing::BigPowMod(3, 7, 101));
}

}  // namespace
}  // namespace sdmm
