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

#ifndef UNIFAC_CORE_HPP
#define UNIFAC_CORE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace unifac {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Running sine products (equivalently, tail norms of a unit vector) below this
// are treated as exactly zero when recovering angles and phases.
inline constexpr double kDegeneracyThreshold = 1e-12;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension mismatch, zero dimension, or a parameter/factor count that does
/// not match the dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value outside its admissible range: angle outside [0, pi/2], non-finite
/// number, negative sphere coordinate, plane index out of range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input matrix failed the unitarity gate.
class NotUnitaryError : public Error {
 public:
  NotUnitaryError(double defect, double gate);
  double defect() const noexcept { return defect_; }
  double gate() const noexcept { return gate_; }

 private:
  double defect_;
  double gate_;
};

/// Dense square matrix, row-major, 0-based.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T{}) {}
  /// Takes ownership of n*n row-major entries; all entries must be finite.
  Matrix(std::size_t n, std::vector<T> entries);

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const T> entries() const noexcept { return data_; }
  std::span<T> entries() noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

extern template class Matrix<double>;
extern template class Matrix<Complex>;

/// Standard matrix product. Throws DimensionError when sizes differ.
template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
RealMatrix transpose(const RealMatrix& a);
ComplexMatrix to_complex(const RealMatrix& a);

double frobenius_norm(const ComplexMatrix& a);
double frobenius_norm(const RealMatrix& a);
/// ||a - b||_F. Throws DimensionError when sizes differ.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_distance(const RealMatrix& a, const RealMatrix& b);

/// ||A* A - I||_F.
double unitarity_defect(const ComplexMatrix& a);
/// ||A^t A - I||_F.
double orthogonality_defect(const RealMatrix& a);

/// Default "is unitary" gate for outputs: 1e-10 * n.
inline double default_unitary_tolerance(std::size_t n) { return 1e-10 * static_cast<double>(n); }

/// diag(e^{i phi_1}, ..., e^{i phi_n}).
ComplexMatrix diagonal_phases(std::span<const double> phases);

/// Reduces x into [0, 2 pi). Throws DomainError for non-finite input.
double canonicalize_phase(double x);

/// Canonical coordinates of U(n): n(n-1)/2 angles in [0, pi/2] and
/// n(n+1)/2 phases in [0, 2 pi).
///
/// Angles are stored level by level in blocks of n-1, n-2, ..., 1 (one block
/// per orthogonal factor); phases in blocks of n, n-1, ..., 1 (one block per
/// diagonal factor). Level k acts on the trailing n-k coordinates.
class ParameterSet {
 public:
  /// Validates counts (DimensionError) and angle range (DomainError). Phases
  /// must be finite and are reduced into [0, 2 pi).
  ParameterSet(std::size_t n, std::vector<double> angles, std::vector<double> phases);

  static ParameterSet zeros(std::size_t n);

  static constexpr std::size_t angle_count(std::size_t n) { return n * (n - 1) / 2; }
  static constexpr std::size_t phase_count(std::size_t n) { return n * (n + 1) / 2; }

  std::size_t n() const noexcept { return n_; }
  std::span<const double> angles() const noexcept { return angles_; }
  std::span<const double> phases() const noexcept { return phases_; }

  /// Angles of the level-k orthogonal factor (n-1-k of them), 0 <= k < n-1.
  std::span<const double> angle_block(std::size_t level) const;
  /// Phases of the level-k diagonal factor (n-k of them), 0 <= k < n.
  std::span<const double> phase_block(std::size_t level) const;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

 private:
  std::size_t n_;
  std::vector<double> angles_;
  std::vector<double> phases_;
};

/// Point on the real unit sphere S^{n-1}.
class UnitVector {
 public:
  /// Throws DomainError on non-finite entries or when | ||v|| - 1 | exceeds
  /// 1e-12 * n. Throws DimensionError for an empty vector.
  explicit UnitVector(std::vector<double> coords);

  std::size_t n() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

 private:
  std::vector<double> coords_;
};

/// One rotation J_{i,i+1}; `plane` is the 1-based index i.
struct GivensBlock {
  std::size_t plane;
  double angle;

  friend bool operator==(const GivensBlock&, const GivensBlock&) = default;
};

/// The product J_{n-1,n} J_{n-2,n-1} ... J_{1,2}, stored in written order:
/// planes n-1, n-2, ..., 1.
class GivensChain {
 public:
  /// Throws DimensionError unless blocks carry planes n-1, ..., 1 in order.
  GivensChain(std::size_t n, std::vector<GivensBlock> blocks);

  std::size_t n() const noexcept { return n_; }
  std::span<const GivensBlock> blocks() const noexcept { return blocks_; }

 private:
  std::size_t n_;
  std::vector<GivensBlock> blocks_;
};

/// Level-k diagonal factor: k leading ones followed by n-k phases.
struct DiagonalPhase {
  std::size_t level;
  std::vector<double> phases;
};

/// Level-k orthogonal factor: diag(I_k, O_{n-k}) with O_{n-k} built from
/// n-k-1 angles.
struct OrthogonalFactor {
  std::size_t level;
  std::vector<double> angles;
};

using Factor = std::variant<DiagonalPhase, OrthogonalFactor>;

/// d_n, O_n, d^1_{n-1}, O^1_{n-1}, ..., O^{n-2}_2, d^{n-1}_1.
class FactorSequence {
 public:
  /// Throws DimensionError if the list is not 2n-1 long, does not alternate
  /// diagonal/orthogonal, or has a level/block-size mismatch.
  FactorSequence(std::size_t n, std::vector<Factor> factors);

  std::size_t n() const noexcept { return n_; }
  std::span<const Factor> factors() const noexcept { return factors_; }

 private:
  std::size_t n_;
  std::vector<Factor> factors_;
};

}  // namespace unifac

#endif  // UNIFAC_CORE_HPP
