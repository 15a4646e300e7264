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

#ifndef UNIFAC_ORTHOGEN_HPP
#define UNIFAC_ORTHOGEN_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "unifac/core.hpp"

namespace unifac {

/// Real n x n matrix O_n in SO(n) whose first column is the sphere point
/// parametrized by n-1 angles. Entries (i, j) with j >= i+2 are exact zeros.
using OrthogonalMatrix = RealMatrix;

/// Throws DomainError unless every angle is in [0, pi/2].
void check_angles(std::span<const double> angles);

/// Hyperspherical coordinates: (cos t1, sin t1 cos t2, ..., sin t1 ... sin t_{n-1}).
UnitVector angles_to_unit_vector(std::span<const double> angles);

/// Inverse of angles_to_unit_vector for a vector with nonnegative coordinates.
///
/// Once the running product sin t1 ... sin tk drops below
/// kDegeneracyThreshold the remaining angles are set to 0.
std::vector<double> unit_vector_to_angles(const UnitVector& v);

/// Builds O_n column by column. Column 1 is angles_to_unit_vector(angles);
/// column 2 is (-sin t1, cos t1 cos t2, cos t1 sin t2 cos t3, ...); column
/// k+2 has k leading zeros followed by (-sin t_{k+1}, cos t_{k+1} cos t_{k+2},
/// ..., cos t_{k+1} sin t_{k+2} ... sin t_{n-1}).
OrthogonalMatrix build_orthogonal(std::span<const double> angles);

/// Rotation J_{i,i+1} in the (i, i+1) plane of R^n, `plane` 1-based.
RealMatrix build_givens_block(std::size_t n, std::size_t plane, double angle);

/// O_n = J_{n-1,n} ... J_{1,2}, where the block for plane i carries angle t_i.
GivensChain givens_chain(std::span<const double> angles);

/// Multiplies out a Givens chain in written order.
RealMatrix evaluate(const GivensChain& chain);

/// Right-multiplies by diag(1, ..., 1, -1) when `reflect` is set.
RealMatrix reflection_extend(RealMatrix o, bool reflect);

/// ||O^t D O - diag(0, I_{n-1})||_F with D = I - b b^t and b the first column.
double defect_eigencheck(std::span<const double> angles);

namespace detail {

/// Angle recovery without the unit-norm and sign checks: the direction of
/// `coords` (assumed nonnegative) is what matters, so the input need not be
/// normalized.
std::vector<double> direction_angles(std::span<const double> coords);

}  // namespace detail

}  // namespace unifac

#endif  // UNIFAC_ORTHOGEN_HPP
