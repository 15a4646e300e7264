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

#ifndef UNIFAC_FACTORIZER_HPP
#define UNIFAC_FACTORIZER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "unifac/core.hpp"

namespace unifac {

/// A_n = d_n O_n d^1_{n-1} O^1_{n-1} ... d^{n-2}_2 O^{n-1}_2 d^{n-1}_1, where the
/// level-k factors act on the trailing n-k coordinates.
ComplexMatrix compose(const ParameterSet& p);

/// Unitarity gate applied by decompose when none is given: 1e-8 * n.
inline double default_decompose_gate(std::size_t n) { return 1e-8 * static_cast<double>(n); }

/// Recovers canonical parameters by peeling one (d, O) pair per level.
///
/// At level k the phases of column k (rows k..n-1) are stripped, the angles
/// of the resulting nonnegative column give O, and O^t is applied so the
/// trailing block can be handled the same way. A first-column entry with
/// modulus below kDegeneracyThreshold gets phase 0.
///
/// Throws DimensionError for an empty matrix and NotUnitaryError when
/// unitarity_defect(a) exceeds the gate.
ParameterSet decompose(const ComplexMatrix& a, std::optional<double> gate = std::nullopt);

/// Copy of `p` with the final phase shifted so that all phases sum to 0 mod 2 pi.
ParameterSet special_unitary_parameters(const ParameterSet& p);

/// compose(special_unitary_parameters(p)); the result has determinant 1.
ComplexMatrix compose_su(const ParameterSet& p);

/// R_n = O_n O^1_{n-1} ... O^{n-2}_2 in SO(n), computed in real arithmetic.
/// With `reflect` the result is right-multiplied by diag(1, ..., 1, -1).
/// `angles` holds all n(n-1)/2 angles in level order.
RealMatrix compose_so(std::size_t n, std::span<const double> angles, bool reflect = false);

/// W = w^* diag(e^{i phi_1}, ..., e^{i phi_n}) w with
/// w = O_n d^1_{n-1} O^1_{n-1} ... d^{n-1}_1.
struct WeylForm {
  std::size_t n;
  std::vector<double> d;
  ComplexMatrix w;

  ComplexMatrix reconstruct() const;
  /// max_k ||W c_k - e^{i phi_k} c_k|| over the columns c_k of w^*.
  double eigen_residual() const;
};

WeylForm weyl_form(const ParameterSet& p);

/// Identity with rows i and j swapped (1-based). Throws DomainError when
/// i == j or either index is outside [1, n].
ComplexMatrix permutation_matrix(std::size_t n, std::size_t i, std::size_t j);

/// The 2n-1 factors of compose(p) as structured records.
FactorSequence factor_sequence(const ParameterSet& p);

/// Dense n x n matrix of one factor.
ComplexMatrix factor_matrix(const Factor& f, std::size_t n);

}  // namespace unifac

#endif  // UNIFAC_FACTORIZER_HPP
