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

#include "sdmm/rational.h"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "sdmm/error.h"

namespace sdmm {

namespace {

std::int64_t ParseInt(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  SDMM_ENFORCE(ec == std::errc() && ptr == s.data() + s.size() && !s.empty(),
               ErrorCode::kParseError,
               "not a number: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  SDMM_ENFORCE(!text.empty(), ErrorCode::kParseError, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = ParseInt(text.substr(0, slash), text);
    const std::int64_t den = ParseInt(text.substr(slash + 1), text);
    SDMM_ENFORCE(den != 0, ErrorCode::kParseError, "zero denominator");
    return Rational(num, den);
  }
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  const std::string_view int_part = body.substr(0, dot);
  const std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  SDMM_ENFORCE(!int_part.empty() || !frac_part.empty(), ErrorCode::kParseError,
               "not a number: '" + std::string(text) + "'");
  SDMM_ENFORCE(frac_part.size() <= 15, ErrorCode::kParseError,
               "too many decimal digits: '" + std::string(text) + "'");
  for (char c : frac_part) {
    SDMM_ENFORCE(std::isdigit(static_cast<unsigned char>(c)),
                 ErrorCode::kParseError,
                 "not a number: '" + std::string(text) + "'");
  }
  const std::int64_t whole = int_part.empty() ? 0 : ParseInt(int_part, text);
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  const std::int64_t frac = frac_part.empty() ? 0 : ParseInt(frac_part, text);
  Rational r = Rational(whole) + Rational(frac, scale);
  return negative ? -r : r;
}

std::string FormatRational(const Rational& r) {
  std::int64_t den = r.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (r.denominator() == 1) return std::to_string(r.numerator());
  if (den == 1) {
    const int digits = std::max(twos, fives);
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const std::int64_t scaled = r.numerator() * (scale / r.denominator());
    const bool negative = scaled < 0;
    const std::int64_t mag = negative ? -scaled : scaled;
    std::string frac = std::to_string(mag % scale);
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    return (negative ? "-" : "") + std::to_string(mag / scale) + "." + frac;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), " (~%.6f)", ToDouble(r));
  return std::to_string(r.numerator()) + "/" +
         std::to_string(r.denominator()) + buf;
}

std::int64_t Ceil(const Rational& r) {
  const std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();  // always positive
  std::int64_t q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

double ToDouble(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

}  // namespace sdmm
