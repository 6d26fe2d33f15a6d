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

// Secure distributed multiplication of A (p x s) by B (s x t) with a
// polynomial code and an offline precomputation phase.
//
// Offline, the user draws the random blocks R_1..R_T, S_1..S_T and stores
// the evaluations of f_rand * g_rand at every evaluation point. Online, each
// server i receives f(a_i), g(a_i) and returns their product. The user
// subtracts the stored evaluations, which removes every monomial that only
// the rand/rand corner of the degree table produces, interpolates the rest
// on the remaining support and reads A_k B_l off the info/info exponents.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdmm/degree_table.h"
#include "sdmm/field_matrix.h"
#include "sdmm/prime_field.h"
#include "sdmm/sparse_poly.h"
#include "sdmm/subset_rank.h"

namespace sdmm {

struct PartitionedMatrices {
  std::vector<FieldMatrix> a_blocks;  // K row blocks, each (p/K) x s
  std::vector<FieldMatrix> b_blocks;  // L column blocks, each s x (t/L)

  const PrimeField& field() const { return a_blocks.front().field(); }
  FieldMatrix AssembleA() const { return FieldMatrix::VConcat(a_blocks); }
  FieldMatrix AssembleB() const { return FieldMatrix::HConcat(b_blocks); }
};

// kPartitionError unless K | rows(A), L | cols(B) and cols(A) == rows(B);
// kFieldMismatch when A and B live in different fields.
PartitionedMatrices Partition(const FieldMatrix& a, const FieldMatrix& b,
                              std::int64_t row_blocks, std::int64_t col_blocks);

// The user's secret randomness. Carries no information about A or B.
struct RandomMasks {
  PrimeField field;
  GaspExponents exponents;
  // Block shapes: A blocks are a_rows x inner, B blocks inner x b_cols.
  std::size_t a_rows = 0;
  std::size_t inner = 0;
  std::size_t b_cols = 0;
  std::vector<FieldMatrix> r_blocks;  // shaped like the A blocks
  std::vector<FieldMatrix> s_blocks;  // shaped like the B blocks

  SparsePoly FRand() const;
  SparsePoly GRand() const;
};

// Uniform R (a_rows x inner) and S (inner x b_cols) blocks; all-zero blocks
// are redrawn so supp(f_rand) = alpha_rand and supp(g_rand) = beta_rand.
RandomMasks SampleMasks(const PrimeField& field, const GaspExponents& exponents,
                        std::size_t a_rows, std::size_t inner,
                        std::size_t b_cols, std::uint64_t seed);

struct EncodingState {
  RandomMasks masks;
  SparsePoly f;
  SparsePoly g;
};

EncodingState Encode(const PartitionedMatrices& pm, RandomMasks masks);

// Draws masks from `seed`. With resample_on_cancellation, fresh masks are
// drawn (up to 16 times) while supp(f g) is smaller than the enumerated
// support alpha + beta.
EncodingState Encode(const PartitionedMatrices& pm,
                     const GaspExponents& exponents, std::uint64_t seed,
                     bool resample_on_cancellation = true);

// supp(f g) equals alpha + beta exactly.
bool SupportIsExact(const EncodingState& es);

struct RedPosition {
  Exponent exponent;
  std::size_t row_block;
  std::size_t col_block;
};

struct SchemeInstance {
  PrimeField field;
  GaspExponents exponents;
  std::vector<FieldElement> points;
  // Sorted (info+info) u (info+rand) u (rand+info): the exponents of h'.
  std::vector<Exponent> decoding_plan;
  // alpha_k + beta_l for every block product A_k B_l.
  std::vector<RedPosition> red_positions;

  std::size_t servers() const { return points.size(); }
};

// Assembles an instance without any checks on the points beyond their
// count matching the decoding plan. Used for audits of hand-built (possibly
// broken) instances.
SchemeInstance MakeInstance(const PrimeField& field, GaspExponents exponents,
                            std::vector<FieldElement> points);

struct PointSelectionStats {
  int attempts = 0;
  SubsetRankResult subset_check;
};

// Samples N^pre distinct nonzero points until the decoding system is
// invertible and every T-subset passes the rank check. kPointSelectionFailed
// if q <= N^pre or all attempts fail.
SchemeInstance ChoosePoints(const PrimeField& field,
                            const GaspExponents& exponents, std::uint64_t seed,
                            int max_attempts,
                            PointSelectionStats* stats = nullptr);

// Offline material: f_rand * g_rand and its value at every point.
struct PrecomputeBundle {
  SparsePoly rand_product;
  std::vector<FieldMatrix> evaluations;

  friend bool operator==(const PrecomputeBundle&,
                         const PrecomputeBundle&) = default;
};

PrecomputeBundle Precompute(const RandomMasks& masks,
                            const SchemeInstance& si);

// What server i is sent.
struct ServerView {
  FieldMatrix f_share;
  FieldMatrix g_share;
};

struct ServerRun {
  std::vector<FieldMatrix> answers;
  std::vector<ServerView> views;
};

// threads == 0 picks the hardware concurrency. Output does not depend on
// the thread count.
ServerRun ServerCompute(const EncodingState& es, const SchemeInstance& si,
                        unsigned threads = 0);

// Field-symbol counts for one multiplication.
struct TranscriptStats {
  std::int64_t servers = 0;
  std::int64_t upload_per_server = 0;
  std::int64_t download_per_server = 0;
  std::int64_t total_upload = 0;
  std::int64_t total_download = 0;
  // Stored coefficients of f_rand g_rand plus cached evaluations.
  std::int64_t precompute_symbols = 0;
};

TranscriptStats ComputeTranscript(const PartitionedMatrices& pm,
                                  const SchemeInstance& si,
                                  const PrecomputeBundle& bundle);

// Needs exactly one answer per point (kDimensionMismatch otherwise).
FieldMatrix Decode(std::span<const FieldMatrix> answers,
                   const PrecomputeBundle& bundle, const SchemeInstance& si);

struct MultiplyOptions {
  std::uint64_t seed = 0;
  int max_point_attempts = 8;
  unsigned threads = 0;
};

struct MultiplyResult {
  FieldMatrix product;
  SchemeInstance instance;
  TranscriptStats transcript;
  int point_attempts = 0;
};

// Partition, draw masks, pick points, precompute, encode, run the servers
// and decode.
MultiplyResult SecureMultiply(const FieldMatrix& a, const FieldMatrix& b,
                              const SchemeParams& params,
                              const MultiplyOptions& options = {});

}  // namespace sdmm
