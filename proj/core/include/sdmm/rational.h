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
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace sdmm {

using Rational = boost::rational<std::int64_t>;

// Accepts "3", "-2", "0.6", "2.807", "3/4". Throws kParseError.
Rational ParseRational(std::string_view text);

// Exact decimal when the denominator is of the form 2^a 5^b ("2.6"),
// otherwise "num/den (~d.dddddd)".
std::string FormatRational(const Rational& r);

// Smallest integer >= r.
std::int64_t Ceil(const Rational& r);

double ToDouble(const Rational& r);

}  // namespace sdmm
