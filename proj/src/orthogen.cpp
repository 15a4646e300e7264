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

#include "unifac/orthogen.hpp"

#include <cmath>
#include <string>

namespace unifac {

void check_angles(std::span<const double> angles) {
  for (double a : angles) {
    if (!(a >= 0.0 && a <= kHalfPi)) {
      throw DomainError("angle " + std::to_string(a) + " outside [0, pi/2]");
    }
  }
}

UnitVector angles_to_unit_vector(std::span<const double> angles) {
  check_angles(angles);
  const std::size_t n = angles.size() + 1;
  std::vector<double> coords(n);
  double sines = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    coords[k] = sines * std::cos(angles[k]);
    sines *= std::sin(angles[k]);
  }
  coords[n - 1] = sines;
  return UnitVector(std::move(coords));
}

namespace detail {

std::vector<double> direction_angles(std::span<const double> coords) {
  const std::size_t n = coords.size();
  if (n == 0) throw DimensionError("cannot recover angles of an empty vector");
  std::vector<double> angles(n - 1, 0.0);
  if (n == 1) return angles;

  // tail[k] = ||coords[k..n)||, which equals ||coords|| * sin t1 ... sin tk.
  std::vector<double> tail(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;) tail[k] = std::hypot(tail[k + 1], coords[k]);
  const double norm = tail[0];
  if (norm == 0.0) throw DomainError("cannot recover angles of the zero vector");

  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (k > 0 && tail[k] < kDegeneracyThreshold * norm) break;
    // atan2 stays accurate where arccos of the ratio loses digits near 0.
    angles[k] = std::atan2(tail[k + 1], coords[k]);
  }
  return angles;
}

}  // namespace detail

std::vector<double> unit_vector_to_angles(const UnitVector& v) {
  for (double c : v.coords()) {
    if (c < 0.0) throw DomainError("unit vector coordinates must be nonnegative");
  }
  return detail::direction_angles(v.coords());
}

OrthogonalMatrix build_orthogonal(std::span<const double> angles) {
  const UnitVector first = angles_to_unit_vector(angles);
  const std::size_t n = first.n();
  std::vector<double> c(n), s(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    c[k] = std::cos(angles[k]);
    s[k] = std::sin(angles[k]);
  }

  OrthogonalMatrix o(n);
  for (std::size_t i = 0; i < n; ++i) o(i, 0) = first[i];

  // Column j >= 1 (0-based) is zero above row j-1, carries -sin t_j at row
  // j-1, and cos t_j sin t_{j+1} ... sin t_i cos t_{i+1} below, with the
  // trailing cosine dropped on the last row. Angles are 1-based here, so
  // t_j lives in c[j-1], s[j-1].
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i + 1 < j; ++i) o(i, j) = 0.0;
    o(j - 1, j) = -s[j - 1];
    double running = c[j - 1];
    for (std::size_t i = j; i < n; ++i) {
      o(i, j) = (i + 1 < n) ? running * c[i] : running;
      if (i + 1 < n) running *= s[i];
    }
  }
  return o;
}

RealMatrix build_givens_block(std::size_t n, std::size_t plane, double angle) {
  if (plane < 1 || plane + 1 > n) {
    throw DomainError("plane index " + std::to_string(plane) + " outside [1, " +
                      std::to_string(n == 0 ? 0 : n - 1) + "]");
  }
  RealMatrix j = RealMatrix::identity(n);
  const std::size_t r = plane - 1;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  j(r, r) = c;
  j(r, r + 1) = -s;
  j(r + 1, r) = s;
  j(r + 1, r + 1) = c;
  return j;
}

GivensChain givens_chain(std::span<const double> angles) {
  check_angles(angles);
  const std::size_t n = angles.size() + 1;
  std::vector<GivensBlock> blocks;
  blocks.reserve(n - 1);
  for (std::size_t plane = n - 1; plane >= 1; --plane) {
    blocks.push_back({plane, angles[plane - 1]});
  }
  return GivensChain(n, std::move(blocks));
}

RealMatrix evaluate(const GivensChain& chain) {
  const std::size_t n = chain.n();
  RealMatrix m = RealMatrix::identity(n);
  // m <- m * J_{p,p+1} mixes columns p-1 and p (0-based).
  for (const GivensBlock& b : chain.blocks()) {
    const std::size_t p = b.plane - 1;
    const double c = std::cos(b.angle);
    const double s = std::sin(b.angle);
    for (std::size_t i = 0; i < n; ++i) {
      const double left = m(i, p);
      const double right = m(i, p + 1);
      m(i, p) = c * left + s * right;
      m(i, p + 1) = -s * left + c * right;
    }
  }
  return m;
}

RealMatrix reflection_extend(RealMatrix o, bool reflect) {
  if (reflect && o.size() > 0) {
    const std::size_t last = o.size() - 1;
    for (std::size_t i = 0; i < o.size(); ++i) o(i, last) = -o(i, last);
  }
  return o;
}

double defect_eigencheck(std::span<const double> angles) {
  const OrthogonalMatrix o = build_orthogonal(angles);
  const std::size_t n = o.size();

  RealMatrix projector = RealMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) projector(i, j) -= o(i, 0) * o(j, 0);

  RealMatrix diagonalized = matmul(transpose(o), matmul(projector, o));
  RealMatrix expected = RealMatrix::identity(n);
  expected(0, 0) = 0.0;
  return frobenius_distance(diagonalized, expected);
}

}  // namespace unifac
