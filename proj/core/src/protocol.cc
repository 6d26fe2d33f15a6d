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

#include "sdmm/protocol.h"

#include <algorithm>
#include <exception>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "sdmm/error.h"
#include "sdmm/linalg.h"

namespace sdmm {

namespace {

constexpr int kMaxCancellationRedraws = 16;

FieldMatrix NonzeroRandom(const PrimeField& field, std::size_t rows,
                          std::size_t cols, std::mt19937_64& rng) {
  while (true) {
    FieldMatrix m = FieldMatrix::Random(field, rows, cols, rng);
    if (!m.IsZero()) return m;
  }
}

SparsePoly BuildPoly(const PrimeField& field, std::size_t rows,
                     std::size_t cols, const std::vector<Exponent>& exps,
                     const std::vector<FieldMatrix>& blocks) {
  SparsePoly p(field, rows, cols);
  for (std::size_t i = 0; i < exps.size(); ++i) p.AddTerm(exps[i], blocks[i]);
  return p;
}

void CheckMasksFit(const PartitionedMatrices& pm, const RandomMasks& masks) {
  const GaspExponents& e = masks.exponents;
  SDMM_ENFORCE(e.row_blocks() == pm.a_blocks.size() &&
                   e.col_blocks() == pm.b_blocks.size(),
               ErrorCode::kDimensionMismatch,
               "exponents do not match the partition");
  SDMM_ENFORCE(masks.r_blocks.size() == e.alpha_rand.size() &&
                   masks.s_blocks.size() == e.beta_rand.size(),
               ErrorCode::kDimensionMismatch,
               "mask count does not match the exponents");
  const FieldMatrix& a0 = pm.a_blocks.front();
  const FieldMatrix& b0 = pm.b_blocks.front();
  SDMM_ENFORCE(masks.field == a0.field(), ErrorCode::kFieldMismatch,
               "masks drawn over another field");
  SDMM_ENFORCE(masks.a_rows == a0.rows() && masks.inner == a0.cols() &&
                   masks.b_cols == b0.cols(),
               ErrorCode::kDimensionMismatch,
               "mask shapes do not match the partition");
  for (const auto& r : masks.r_blocks) RequireSameShape(r, a0);
  for (const auto& s : masks.s_blocks) RequireSameShape(s, b0);
}

}  // namespace

PartitionedMatrices Partition(const FieldMatrix& a, const FieldMatrix& b,
                              std::int64_t row_blocks,
                              std::int64_t col_blocks) {
  RequireSameField(a, b);
  SDMM_ENFORCE(row_blocks >= 1 && col_blocks >= 1, ErrorCode::kPartitionError,
               "block counts must be positive");
  SDMM_ENFORCE(a.cols() == b.rows(), ErrorCode::kPartitionError,
               "inner dimensions differ: A has " + std::to_string(a.cols()) +
                   " columns, B has " + std::to_string(b.rows()) + " rows");
  const auto k = static_cast<std::size_t>(row_blocks);
  const auto l = static_cast<std::size_t>(col_blocks);
  SDMM_ENFORCE(a.rows() % k == 0, ErrorCode::kPartitionError,
               "K=" + std::to_string(k) + " does not divide the " +
                   std::to_string(a.rows()) + " rows of A");
  SDMM_ENFORCE(b.cols() % l == 0, ErrorCode::kPartitionError,
               "L=" + std::to_string(l) + " does not divide the " +
                   std::to_string(b.cols()) + " columns of B");
  PartitionedMatrices pm;
  const std::size_t a_rows = a.rows() / k;
  const std::size_t b_cols = b.cols() / l;
  for (std::size_t i = 0; i < k; ++i) {
    pm.a_blocks.push_back(a.Block(i * a_rows, 0, a_rows, a.cols()));
  }
  for (std::size_t j = 0; j < l; ++j) {
    pm.b_blocks.push_back(b.Block(0, j * b_cols, b.rows(), b_cols));
  }
  return pm;
}

SparsePoly RandomMasks::FRand() const {
  return BuildPoly(field, a_rows, inner, exponents.alpha_rand, r_blocks);
}

SparsePoly RandomMasks::GRand() const {
  return BuildPoly(field, inner, b_cols, exponents.beta_rand, s_blocks);
}

RandomMasks SampleMasks(const PrimeField& field, const GaspExponents& exponents,
                        std::size_t a_rows, std::size_t inner,
                        std::size_t b_cols, std::uint64_t seed) {
  SDMM_ENFORCE(a_rows > 0 && inner > 0 && b_cols > 0,
               ErrorCode::kDimensionMismatch, "block shapes must be positive");
  RandomMasks masks;
  masks.field = field;
  masks.exponents = exponents;
  masks.a_rows = a_rows;
  masks.inner = inner;
  masks.b_cols = b_cols;
  std::mt19937_64 rng(DeriveSeed(seed, 1));
  for (std::size_t t = 0; t < exponents.alpha_rand.size(); ++t) {
    masks.r_blocks.push_back(NonzeroRandom(field, a_rows, inner, rng));
  }
  for (std::size_t t = 0; t < exponents.beta_rand.size(); ++t) {
    masks.s_blocks.push_back(NonzeroRandom(field, inner, b_cols, rng));
  }
  return masks;
}

EncodingState Encode(const PartitionedMatrices& pm, RandomMasks masks) {
  CheckMasksFit(pm, masks);
  const PrimeField& field = pm.field();
  const GaspExponents& e = masks.exponents;
  const FieldMatrix& a0 = pm.a_blocks.front();
  const FieldMatrix& b0 = pm.b_blocks.front();
  SparsePoly f = BuildPoly(field, a0.rows(), a0.cols(), e.alpha_info,
                           pm.a_blocks) +
                 masks.FRand();
  SparsePoly g = BuildPoly(field, b0.rows(), b0.cols(), e.beta_info,
                           pm.b_blocks) +
                 masks.GRand();
  return {std::move(masks), std::move(f), std::move(g)};
}

EncodingState Encode(const PartitionedMatrices& pm,
                     const GaspExponents& exponents, std::uint64_t seed,
                     bool resample_on_cancellation) {
  const FieldMatrix& a0 = pm.a_blocks.front();
  const FieldMatrix& b0 = pm.b_blocks.front();
  EncodingState es = Encode(
      pm, SampleMasks(pm.field(), exponents, a0.rows(), a0.cols(), b0.cols(),
                      seed));
  if (!resample_on_cancellation) return es;
  for (int redraw = 1; redraw <= kMaxCancellationRedraws && !SupportIsExact(es);
       ++redraw) {
    es = Encode(pm, SampleMasks(pm.field(), exponents, a0.rows(), a0.cols(),
                                b0.cols(), DeriveSeed(seed, 1000 + redraw)));
  }
  return es;
}

bool SupportIsExact(const EncodingState& es) {
  return (es.f * es.g).Support() ==
         DecomposeSupport(es.masks.exponents).FullSupport();
}

SchemeInstance MakeInstance(const PrimeField& field, GaspExponents exponents,
                            std::vector<FieldElement> points) {
  const SupportDecomposition d = DecomposeSupport(exponents);
  SchemeInstance si{field, std::move(exponents), std::move(points),
                    d.PrecomputeSupport(), {}};
  SDMM_ENFORCE(si.points.size() == si.decoding_plan.size(),
               ErrorCode::kDimensionMismatch,
               "instance needs " + std::to_string(si.decoding_plan.size()) +
                   " points, got " + std::to_string(si.points.size()));
  for (const auto& p : si.points) {
    SDMM_ENFORCE(p.field() == field, ErrorCode::kFieldMismatch,
                 "point from another field");
  }
  const GaspExponents& e = si.exponents;
  for (std::size_t k = 0; k < e.alpha_info.size(); ++k) {
    for (std::size_t l = 0; l < e.beta_info.size(); ++l) {
      si.red_positions.push_back({e.alpha_info[k] + e.beta_info[l], k, l});
    }
  }
  return si;
}

SchemeInstance ChoosePoints(const PrimeField& field,
                            const GaspExponents& exponents, std::uint64_t seed,
                            int max_attempts, PointSelectionStats* stats) {
  exponents.Validate();
  const std::vector<Exponent> plan =
      DecomposeSupport(exponents).PrecomputeSupport();
  const std::size_t n = plan.size();
  SDMM_ENFORCE(field.modulus() > n, ErrorCode::kPointSelectionFailed,
               "F_" + std::to_string(field.modulus()) + " has fewer than " +
                   std::to_string(n) + " nonzero elements; raise q");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::mt19937_64 rng(DeriveSeed(seed, 2 + static_cast<std::uint64_t>(attempt)));
    std::set<std::uint64_t> seen;
    std::vector<FieldElement> points;
    while (points.size() < n) {
      const std::uint64_t v = field.SampleNonzero(rng);
      if (seen.insert(v).second) points.emplace_back(field, v);
    }
    if (Rank(PowerMatrix(field, points, plan)) != n) continue;
    SubsetRankResult subsets =
        CheckSubsetRanks(field, points, exponents.alpha_rand,
                         exponents.beta_rand, rng());
    if (!subsets.passed()) continue;
    if (stats != nullptr) {
      stats->attempts = attempt + 1;
      stats->subset_check = std::move(subsets);
    }
    return MakeInstance(field, exponents, std::move(points));
  }
  Throw(ErrorCode::kPointSelectionFailed,
        "no admissible evaluation points after " +
            std::to_string(max_attempts) + " attempts in F_" +
            std::to_string(field.modulus()) + "; raise q");
}

PrecomputeBundle Precompute(const RandomMasks& masks,
                            const SchemeInstance& si) {
  SDMM_ENFORCE(masks.exponents == si.exponents, ErrorCode::kInvalidArgument,
               "masks and instance use different exponents");
  SDMM_ENFORCE(masks.field == si.field, ErrorCode::kFieldMismatch,
               "masks and instance use different fields");
  SparsePoly product = masks.FRand() * masks.GRand();
  PrecomputeBundle bundle{std::move(product), {}};
  bundle.evaluations.reserve(si.points.size());
  for (const auto& p : si.points) {
    bundle.evaluations.push_back(bundle.rand_product.Evaluate(p));
  }
  return bundle;
}

ServerRun ServerCompute(const EncodingState& es, const SchemeInstance& si,
                        unsigned threads) {
  const std::size_t n = si.points.size();
  ServerRun run;
  run.answers.resize(n, FieldMatrix(si.field, es.f.rows(), es.g.cols()));
  run.views.resize(n, ServerView{FieldMatrix(si.field, es.f.rows(), es.f.cols()),
                                 FieldMatrix(si.field, es.g.rows(), es.g.cols())});
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

  auto serve = [&](std::size_t i) {
    ServerView view{es.f.Evaluate(si.points[i]), es.g.Evaluate(si.points[i])};
    run.answers[i] = view.f_share * view.g_share;
    run.views[i] = std::move(view);
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) serve(i);
    return run;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += threads) serve(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return run;
}

TranscriptStats ComputeTranscript(const PartitionedMatrices& pm,
                                  const SchemeInstance& si,
                                  const PrecomputeBundle& bundle) {
  TranscriptStats s;
  const FieldMatrix& a0 = pm.a_blocks.front();
  const FieldMatrix& b0 = pm.b_blocks.front();
  s.servers = static_cast<std::int64_t>(si.servers());
  s.upload_per_server = static_cast<std::int64_t>(a0.size() + b0.size());
  s.download_per_server = static_cast<std::int64_t>(a0.rows() * b0.cols());
  s.total_upload = s.servers * s.upload_per_server;
  s.total_download = s.servers * s.download_per_server;
  const auto coeff_symbols = static_cast<std::int64_t>(a0.rows() * b0.cols());
  s.precompute_symbols =
      coeff_symbols * static_cast<std::int64_t>(bundle.rand_product.terms().size() +
                                                bundle.evaluations.size());
  return s;
}

FieldMatrix Decode(std::span<const FieldMatrix> answers,
                   const PrecomputeBundle& bundle, const SchemeInstance& si) {
  const std::size_t n = si.decoding_plan.size();
  SDMM_ENFORCE(answers.size() == n, ErrorCode::kDimensionMismatch,
               "decoding needs " + std::to_string(n) + " answers, got " +
                   std::to_string(answers.size()));
  SDMM_ENFORCE(bundle.evaluations.size() == n, ErrorCode::kDimensionMismatch,
               "precomputed evaluations do not match the instance");
  std::vector<FieldMatrix> reduced;
  reduced.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    reduced.push_back(answers[i] - bundle.evaluations[i]);
  }
  std::map<Exponent, FieldMatrix> coeffs;
  try {
    coeffs = GenVandermondeSolve(si.field, si.decoding_plan, si.points, reduced);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingularSystem) throw;
    Throw(ErrorCode::kInternal,
          std::string("decoding system singular on a verified instance: ") +
              e.what());
  }
  const std::size_t k = si.exponents.row_blocks();
  const std::size_t l = si.exponents.col_blocks();
  std::vector<FieldMatrix> rows;
  rows.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<FieldMatrix> row;
    row.reserve(l);
    for (std::size_t j = 0; j < l; ++j) {
      row.push_back(coeffs.at(si.red_positions[i * l + j].exponent));
    }
    rows.push_back(FieldMatrix::HConcat(row));
  }
  return FieldMatrix::VConcat(rows);
}

MultiplyResult SecureMultiply(const FieldMatrix& a, const FieldMatrix& b,
                              const SchemeParams& params,
                              const MultiplyOptions& options) {
  const GaspExponents exponents = BuildGaspExponents(params);
  PartitionedMatrices pm =
      Partition(a, b, params.row_blocks, params.col_blocks);
  const PrimeField& field = pm.field();
  const FieldMatrix& a0 = pm.a_blocks.front();
  const FieldMatrix& b0 = pm.b_blocks.front();

  // Offline: nothing here reads A or B.
  RandomMasks masks = SampleMasks(field, exponents, a0.rows(), a0.cols(),
                                  b0.cols(), options.seed);
  PointSelectionStats stats;
  SchemeInstance si = ChoosePoints(field, exponents, options.seed,
                                   options.max_point_attempts, &stats);
  PrecomputeBundle bundle = Precompute(masks, si);

  // Online.
  EncodingState es = Encode(pm, std::move(masks));
  ServerRun run = ServerCompute(es, si, options.threads);
  FieldMatrix product = Decode(run.answers, bundle, si);
  TranscriptStats transcript = ComputeTranscript(pm, si, bundle);
  return {std::move(product), std::move(si), transcript, stats.attempts};
}

}  // namespace sdmm
