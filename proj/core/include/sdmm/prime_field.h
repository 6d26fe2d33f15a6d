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

#include <cstdint>
#include <iosfwd>
#include <random>

namespace sdmm {

__extension__ using u128 = unsigned __int128;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool IsPrime(std::uint64_t n);

// Arithmetic in F_q for a prime q < 2^64. Values passed to the raw-integer
// methods must already be reduced (in [0, q)).
class PrimeField {
 public:
  static constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

  // Throws kNotPrime unless q is prime.
  explicit PrimeField(std::uint64_t q = kMersenne61);

  std::uint64_t modulus() const noexcept { return q_; }

  std::uint64_t Reduce(std::uint64_t v) const noexcept { return v % q_; }

  std::uint64_t Add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    if (s < a || s >= q_) s -= q_;
    return s;
  }

  std::uint64_t Sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + (q_ - b);
  }

  std::uint64_t Neg(std::uint64_t a) const noexcept {
    return a == 0 ? 0 : q_ - a;
  }

  std::uint64_t Mul(std::uint64_t a, std::uint64_t b) const noexcept {
    const u128 prod = static_cast<u128>(a) * b;
    if (mersenne61_) {
      // 2^61 = 1 (mod q): fold the high bits onto the low bits.
      std::uint64_t r = (static_cast<std::uint64_t>(prod) & kMersenne61) +
                        static_cast<std::uint64_t>(prod >> 61);
      if (r >= q_) r -= q_;
      return r;
    }
    return static_cast<std::uint64_t>(prod % q_);
  }

  std::uint64_t Pow(std::uint64_t base, std::uint64_t exp) const noexcept;

  // Throws kDivisionByZero for a == 0.
  std::uint64_t Inv(std::uint64_t a) const;

  // Uniform sample from [0, q) by rejection on raw 64-bit draws, so the
  // stream is identical on every standard library.
  std::uint64_t Sample(std::mt19937_64& rng) const;

  // Uniform sample from [1, q).
  std::uint64_t SampleNonzero(std::mt19937_64& rng) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.q_ == b.q_;
  }

 private:
  std::uint64_t q_;
  bool mersenne61_;
};

// A canonical residue paired with the field it lives in. Binary operators
// throw kFieldMismatch when the moduli differ.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::uint64_t value)
      : field_(field), value_(field.Reduce(value)) {}

  std::uint64_t value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }

  FieldElement Inverse() const;
  FieldElement Pow(std::uint64_t exp) const {
    return FieldElement(field_, field_.Pow(value_, exp));
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const {
    return FieldElement(field_, field_.Neg(value_));
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  PrimeField field_;
  std::uint64_t value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

// SplitMix64 finalizer; used to derive independent RNG streams from one
// user seed.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

}  // namespace sdmm
