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

#include "unifac/core.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

namespace unifac {

namespace {

bool is_finite(double x) { return std::isfinite(x); }
bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <typename T>
void require_same_size(const Matrix<T>& a, const Matrix<T>& b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
}

template <typename T>
double frobenius(const Matrix<T>& a) {
  double sum = 0.0;
  for (const auto& x : a.entries()) sum += std::norm(x);
  return std::sqrt(sum);
}

template <typename T>
double distance(const Matrix<T>& a, const Matrix<T>& b) {
  require_same_size(a, b, "frobenius_distance");
  double sum = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) sum += std::norm(ea[i] - eb[i]);
  return std::sqrt(sum);
}

// ||conj(A)^t A - I||_F without forming the product.
template <typename T>
double gram_defect(const Matrix<T>& a) {
  const std::size_t n = a.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T g{};
      for (std::size_t k = 0; k < n; ++k) {
        if constexpr (std::is_same_v<T, Complex>) {
          g += std::conj(a(k, i)) * a(k, j);
        } else {
          g += a(k, i) * a(k, j);
        }
      }
      if (i == j) g -= T{1};
      sum += std::norm(g);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

NotUnitaryError::NotUnitaryError(double defect, double gate)
    : Error("matrix is not unitary: defect " + std::to_string(defect) + " exceeds gate " +
            std::to_string(gate)),
      defect_(defect),
      gate_(gate) {}

template <typename T>
Matrix<T>::Matrix(std::size_t n, std::vector<T> entries) : n_(n), data_(std::move(entries)) {
  if (data_.size() != n_ * n_) {
    throw DimensionError("matrix of dimension " + std::to_string(n_) + " needs " +
                         std::to_string(n_ * n_) + " entries, got " + std::to_string(data_.size()));
  }
  for (const auto& x : data_) {
    if (!is_finite(x)) throw DomainError("matrix entries must be finite");
  }
}

template class Matrix<double>;
template class Matrix<Complex>;

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  require_same_size(a, b, "matmul");
  const std::size_t n = a.size();
  Matrix<T> c(n);
  // i-k-j order walks rows of b and c contiguously.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template RealMatrix matmul(const RealMatrix&, const RealMatrix&);
template ComplexMatrix matmul(const ComplexMatrix&, const ComplexMatrix&);

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

RealMatrix transpose(const RealMatrix& a) {
  const std::size_t n = a.size();
  RealMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(j, i) = a(i, j);
  return r;
}

ComplexMatrix to_complex(const RealMatrix& a) {
  ComplexMatrix r(a.size());
  std::ranges::transform(a.entries(), r.entries().begin(), [](double x) { return Complex(x, 0.0); });
  return r;
}

double frobenius_norm(const ComplexMatrix& a) { return frobenius(a); }
double frobenius_norm(const RealMatrix& a) { return frobenius(a); }
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) { return distance(a, b); }
double frobenius_distance(const RealMatrix& a, const RealMatrix& b) { return distance(a, b); }

double unitarity_defect(const ComplexMatrix& a) { return gram_defect(a); }
double orthogonality_defect(const RealMatrix& a) { return gram_defect(a); }

ComplexMatrix diagonal_phases(std::span<const double> phases) {
  ComplexMatrix d(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) d(i, i) = std::polar(1.0, phases[i]);
  return d;
}

double canonicalize_phase(double x) {
  if (!std::isfinite(x)) throw DomainError("phase must be finite");
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative number lifts to exactly 2 pi after rounding.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

ParameterSet::ParameterSet(std::size_t n, std::vector<double> angles, std::vector<double> phases)
    : n_(n), angles_(std::move(angles)), phases_(std::move(phases)) {
  if (n_ == 0) throw DimensionError("parameter set dimension must be positive");
  if (angles_.size() != angle_count(n_) || phases_.size() != phase_count(n_)) {
    throw DimensionError("U(" + std::to_string(n_) + ") needs " + std::to_string(angle_count(n_)) +
                         " angles and " + std::to_string(phase_count(n_)) + " phases, got " +
                         std::to_string(angles_.size()) + " and " + std::to_string(phases_.size()));
  }
  for (double a : angles_) {
    if (!(a >= 0.0 && a <= kHalfPi)) {
      throw DomainError("angle " + std::to_string(a) + " outside [0, pi/2]");
    }
  }
  for (double& p : phases_) p = canonicalize_phase(p);
}

ParameterSet ParameterSet::zeros(std::size_t n) {
  return ParameterSet(n, std::vector<double>(angle_count(n), 0.0),
                      std::vector<double>(phase_count(n), 0.0));
}

std::span<const double> ParameterSet::angle_block(std::size_t level) const {
  if (level + 1 >= n_) throw DimensionError("angle block level out of range");
  // Blocks before `level` hold (n-1) + (n-2) + ... + (n-level) angles.
  const std::size_t offset = level * (n_ - 1) - level * (level - 1) / 2;
  return std::span<const double>(angles_).subspan(offset, n_ - 1 - level);
}

std::span<const double> ParameterSet::phase_block(std::size_t level) const {
  if (level >= n_) throw DimensionError("phase block level out of range");
  const std::size_t offset = level * n_ - level * (level - 1) / 2;
  return std::span<const double>(phases_).subspan(offset, n_ - level);
}

UnitVector::UnitVector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("unit vector must be non-empty");
  double sum = 0.0;
  for (double c : coords_) {
    if (!std::isfinite(c)) throw DomainError("unit vector coordinates must be finite");
    sum += c * c;
  }
  const double tol = 1e-12 * static_cast<double>(coords_.size());
  if (std::abs(std::sqrt(sum) - 1.0) > tol) {
    throw DomainError("vector norm " + std::to_string(std::sqrt(sum)) + " is not 1");
  }
}

GivensChain::GivensChain(std::size_t n, std::vector<GivensBlock> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ == 0 || blocks_.size() != n_ - 1) {
    throw DimensionError("Givens chain of dimension " + std::to_string(n_) + " needs " +
                         std::to_string(n_ == 0 ? 0 : n_ - 1) + " blocks");
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].plane != n_ - 1 - k) {
      throw DimensionError("Givens chain planes must run n-1, ..., 1");
    }
  }
}

FactorSequence::FactorSequence(std::size_t n, std::vector<Factor> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n_ == 0) throw DimensionError("factor sequence dimension must be positive");
  if (factors_.size() != 2 * n_ - 1) {
    throw DimensionError("factor sequence for n=" + std::to_string(n_) + " needs " +
                         std::to_string(2 * n_ - 1) + " factors, got " +
                         std::to_string(factors_.size()));
  }
  for (std::size_t pos = 0; pos < factors_.size(); ++pos) {
    const std::size_t level = pos / 2;
    if (pos % 2 == 0) {
      const auto* d = std::get_if<DiagonalPhase>(&factors_[pos]);
      if (d == nullptr) throw DimensionError("factor " + std::to_string(pos) + " must be diagonal");
      if (d->level != level || d->phases.size() != n_ - level) {
        throw DimensionError("diagonal factor " + std::to_string(pos) + " has wrong level structure");
      }
    } else {
      const auto* o = std::get_if<OrthogonalFactor>(&factors_[pos]);
      if (o == nullptr) {
        throw DimensionError("factor " + std::to_string(pos) + " must be orthogonal");
      }
      if (o->level != level || o->angles.size() != n_ - level - 1) {
        throw DimensionError("orthogonal factor " + std::to_string(pos) +
                             " has wrong level structure");
      }
    }
  }
}

}  // namespace unifac
