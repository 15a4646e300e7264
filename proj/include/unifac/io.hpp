// Copyright 2026 The unifac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNIFAC_IO_HPP
#define UNIFAC_IO_HPP

#include <span>
#include <string>
#include <string_view>

#include "unifac/core.hpp"

namespace unifac::io {

/// Malformed document: invalid JSON, missing field, wrong value type.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Contents of a parameter file.
struct ParamDocument {
  ParameterSet params;
  bool special_unitary = false;
};

// Matrix file:
//   {"n": N, "entries": [[[re, im], ...], ...]}   (N rows of N pairs)
// Parameter file:
//   {"n": N, "angles": [...], "phases": [...], "special_unitary": bool?}
// Numbers are written with 17 significant digits so doubles round-trip.

std::string format_matrix(const ComplexMatrix& m);
/// Throws ParseError for malformed documents and DimensionError when the
/// entries do not form an n x n array.
ComplexMatrix parse_matrix(std::string_view text);

std::string format_params(const ParamDocument& doc);
/// Throws ParseError for malformed documents; count or range violations come
/// from ParameterSet (DimensionError / DomainError).
ParamDocument parse_params(std::string_view text);

/// {"n": N, "levels": [{"level": k, "blocks": [{"plane": i, "angle": t}, ...]}, ...]}
/// with one chain per orthogonal factor. Plane indices are 1-based in the full
/// N-dimensional space, so level k uses planes N-1, ..., k+1.
std::string format_givens(std::size_t n, std::span<const GivensChain> levels);

/// printf "%.17g".
std::string format_number(double x);

/// Throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);
/// Throws ParseError when the file cannot be written.
void write_file(const std::string& path, std::string_view text);

}  // namespace unifac::io

#endif  // UNIFAC_IO_HPP
