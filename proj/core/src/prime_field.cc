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

#include "sdmm/prime_field.h"

#include <array>
#include <ostream>
#include <string>

#include "sdmm/error.h"

namespace sdmm {

namespace {

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = MulMod(r, b, m);
    b = MulMod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q), mersenne61_(q == kMersenne61) {
  SDMM_ENFORCE(IsPrime(q), ErrorCode::kNotPrime,
               "modulus " + std::to_string(q) + " is not prime");
}

std::uint64_t PrimeField::Pow(std::uint64_t base, std::uint64_t exp) const
    noexcept {
  std::uint64_t result = 1 % q_;
  while (exp != 0) {
    if (exp & 1) result = Mul(result, base);
    base = Mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::Inv(std::uint64_t a) const {
  SDMM_ENFORCE(a % q_ != 0, ErrorCode::kDivisionByZero,
               "inverse of zero in F_" + std::to_string(q_));
  return Pow(a, q_ - 2);
}

std::uint64_t PrimeField::Sample(std::mt19937_64& rng) const {
  // Largest multiple of q that fits in 2^64, minus one.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % q_ + 1) % q_;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % q_;
}

std::uint64_t PrimeField::SampleNonzero(std::mt19937_64& rng) const {
  std::uint64_t x;
  do {
    x = Sample(rng);
  } while (x == 0);
  return x;
}

namespace {

void RequireSameField(const FieldElement& a, const FieldElement& b) {
  SDMM_ENFORCE(a.field() == b.field(), ErrorCode::kFieldMismatch,
               "operands from F_" + std::to_string(a.field().modulus()) +
                   " and F_" + std::to_string(b.field().modulus()));
}

}  // namespace

FieldElement FieldElement::Inverse() const {
  return FieldElement(field_, field_.Inv(value_));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  RequireSameField(a, b);
  return FieldElement(a.field_, a.field_.Add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  RequireSameField(a, b);
  return FieldElement(a.field_, a.field_.Sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  RequireSameField(a, b);
  return FieldElement(a.field_, a.field_.Mul(a.value_, b.value_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  RequireSameField(a, b);
  return a * b.Inverse();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value();
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sdmm
