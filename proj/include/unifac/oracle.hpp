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

#ifndef UNIFAC_ORACLE_HPP
#define UNIFAC_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unifac/core.hpp"

namespace unifac {

enum class RandomKind { haar_unitary, haar_special_unitary, random_parameters, haar_orthogonal };

std::string_view to_string(RandomKind kind);
/// Returns nullopt for an unknown name.
std::optional<RandomKind> parse_random_kind(std::string_view name);

/// Same (n, seed, kind) always gives bit-identical output.
struct RandomSpec {
  std::size_t n;
  std::uint64_t seed;
  RandomKind kind;
};

/// Haar-random element of U(n) (kind haar_unitary) or SU(n) (kind
/// haar_special_unitary): modified Gram-Schmidt, applied twice, on a matrix of
/// standard complex Gaussians. Gram-Schmidt leaves the triangular factor with
/// a positive real diagonal, which is what makes the sample Haar.
ComplexMatrix random_unitary(const RandomSpec& spec);

/// Haar-random element of O(n) from real Gaussians (kind haar_orthogonal).
RealMatrix random_orthogonal(const RandomSpec& spec);

/// Interior parameters: angles uniform in [delta, pi/2 - delta], phases
/// uniform in [delta, 2 pi - delta] (kind random_parameters).
ParameterSet random_parameters(const RandomSpec& spec, double delta = 1e-3);

/// Determinant by LU with partial pivoting.
Complex determinant(const ComplexMatrix& a);
double determinant(const RealMatrix& a);

struct FactorCheck {
  std::size_t position;
  bool orthogonal;
  std::size_t level;
  double unitarity_defect;
  /// Orthogonal factors: every structural zero of the O block, and every entry
  /// outside it that is not on the identity diagonal, is exactly 0.0.
  /// Diagonal factors: the leading `level` entries are exactly 1 and all
  /// off-diagonal entries are exactly 0.
  bool structure_ok;
};

struct VerificationReport {
  double residual;
  std::vector<FactorCheck> factors;

  bool structure_ok() const;
  double max_factor_defect() const;
};

/// Multiplies the 2n-1 dense factors left to right with matmul and compares
/// against `a`. Throws DimensionError when a.size() != f.n().
VerificationReport verify_factorization(const ComplexMatrix& a, const FactorSequence& f);

}  // namespace unifac

#endif  // UNIFAC_ORACLE_HPP
