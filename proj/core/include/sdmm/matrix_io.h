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


// Plain-text matrix files: a "rows cols q" line, then `rows` lines of `cols`
// decimal entries in [0, q). The file must end with a newline.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sdmm/field_matrix.h"

namespace sdmm {

// kParseError on malformed text or out-of-range entries, kNotPrime when q
// is not prime.
FieldMatrix ParseMatrix(std::string_view text);
std::string FormatMatrix(const FieldMatrix& m);

FieldMatrix ReadMatrixFile(const std::string& path);
void WriteMatrixFile(const std::string& path, const FieldMatrix& m);

}  // namespace sdmm
