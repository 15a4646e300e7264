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

#include "unifac/factorizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "unifac/orthogen.hpp"

namespace unifac {

namespace {

// m <- diag(I_k, O) m where O = J_{l-1,l} ... J_{1,2} is built from `angles`
// (l = angles.size() + 1, k = offset). J_{1,2} acts first.
template <typename T>
void apply_orthogonal(std::span<const double> angles, std::size_t offset, Matrix<T>& m) {
  const std::size_t n = m.size();
  for (std::size_t p = 0; p < angles.size(); ++p) {
    const std::size_t r = offset + p;
    const double c = std::cos(angles[p]);
    const double s = std::sin(angles[p]);
    for (std::size_t j = 0; j < n; ++j) {
      const T top = m(r, j);
      const T bottom = m(r + 1, j);
      m(r, j) = c * top - s * bottom;
      m(r + 1, j) = s * top + c * bottom;
    }
  }
}

// m <- diag(I_k, O^t) m on columns [first_col, n). J_{l-1,l}^t acts first.
void apply_orthogonal_transpose(std::span<const double> angles, std::size_t offset,
                                std::size_t first_col, ComplexMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t p = angles.size(); p-- > 0;) {
    const std::size_t r = offset + p;
    const double c = std::cos(angles[p]);
    const double s = std::sin(angles[p]);
    for (std::size_t j = first_col; j < n; ++j) {
      const Complex top = m(r, j);
      const Complex bottom = m(r + 1, j);
      m(r, j) = c * top + s * bottom;
      m(r + 1, j) = -s * top + c * bottom;
    }
  }
}

void scale_rows(std::span<const double> phases, std::size_t offset, ComplexMatrix& m) {
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const Complex f = std::polar(1.0, phases[i]);
    for (std::size_t j = 0; j < m.size(); ++j) m(offset + i, j) *= f;
  }
}

// Full factor product, built right to left by row operations. The leading
// diagonal d_n is applied only when `with_leading_diagonal`.
ComplexMatrix compose_product(const ParameterSet& p, bool with_leading_diagonal) {
  const std::size_t n = p.n();
  ComplexMatrix m = ComplexMatrix::identity(n);
  scale_rows(p.phase_block(n - 1), n - 1, m);
  for (std::size_t level = n - 1; level-- > 0;) {
    apply_orthogonal(p.angle_block(level), level, m);
    if (level > 0 || with_leading_diagonal) scale_rows(p.phase_block(level), level, m);
  }
  return m;
}

}  // namespace

ComplexMatrix compose(const ParameterSet& p) { return compose_product(p, true); }

ParameterSet decompose(const ComplexMatrix& a, std::optional<double> gate) {
  const std::size_t n = a.size();
  if (n == 0) throw DimensionError("cannot decompose an empty matrix");
  const double limit = gate.value_or(default_decompose_gate(n));
  const double defect = unitarity_defect(a);
  if (!(defect <= limit)) throw NotUnitaryError(defect, limit);

  std::vector<double> angles;
  std::vector<double> phases;
  angles.reserve(ParameterSet::angle_count(n));
  phases.reserve(ParameterSet::phase_count(n));

  ComplexMatrix m = a;
  std::vector<double> column;
  for (std::size_t level = 0; level < n; ++level) {
    const std::size_t size = n - level;
    column.assign(size, 0.0);
    for (std::size_t i = 0; i < size; ++i) {
      const Complex z = m(level + i, level);
      column[i] = std::abs(z);
      const double phase = column[i] < kDegeneracyThreshold ? 0.0 : canonicalize_phase(std::arg(z));
      phases.push_back(phase);
      if (phase != 0.0) {
        const Complex strip = std::polar(1.0, -phase);
        for (std::size_t j = level + 1; j < n; ++j) m(level + i, j) *= strip;
      }
    }
    if (size == 1) break;

    const std::vector<double> level_angles = detail::direction_angles(column);
    angles.insert(angles.end(), level_angles.begin(), level_angles.end());
    apply_orthogonal_transpose(level_angles, level, level + 1, m);
  }
  return ParameterSet(n, std::move(angles), std::move(phases));
}

ParameterSet special_unitary_parameters(const ParameterSet& p) {
  std::vector<double> phases(p.phases().begin(), p.phases().end());
  // Extended-precision sum, reduced modulo 2 pi at every step.
  constexpr long double two_pi = 6.283185307179586476925286766559005768L;
  long double others = 0.0L;
  for (std::size_t i = 0; i + 1 < phases.size(); ++i) {
    others = std::fmod(others + static_cast<long double>(phases[i]), two_pi);
  }
  phases.back() = canonicalize_phase(static_cast<double>(two_pi - others));
  return ParameterSet(p.n(), std::vector<double>(p.angles().begin(), p.angles().end()),
                      std::move(phases));
}

ComplexMatrix compose_su(const ParameterSet& p) { return compose(special_unitary_parameters(p)); }

RealMatrix compose_so(std::size_t n, std::span<const double> angles, bool reflect) {
  if (n == 0) throw DimensionError("rotation dimension must be positive");
  if (angles.size() != ParameterSet::angle_count(n)) {
    throw DimensionError("SO(" + std::to_string(n) + ") needs " +
                         std::to_string(ParameterSet::angle_count(n)) + " angles, got " +
                         std::to_string(angles.size()));
  }
  check_angles(angles);
  RealMatrix m = RealMatrix::identity(n);
  std::size_t end = angles.size();
  for (std::size_t level = n - 1; level-- > 0;) {
    const std::size_t count = n - 1 - level;
    apply_orthogonal(angles.subspan(end - count, count), level, m);
    end -= count;
  }
  return reflection_extend(std::move(m), reflect);
}

ComplexMatrix WeylForm::reconstruct() const {
  return matmul(adjoint(w), matmul(diagonal_phases(d), w));
}

double WeylForm::eigen_residual() const {
  const ComplexMatrix big_w = reconstruct();
  const ComplexMatrix w_star = adjoint(w);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex lambda = std::polar(1.0, d[k]);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex image{};
      for (std::size_t j = 0; j < n; ++j) image += big_w(i, j) * w_star(j, k);
      sum += std::norm(image - lambda * w_star(i, k));
    }
    worst = std::max(worst, std::sqrt(sum));
  }
  return worst;
}

WeylForm weyl_form(const ParameterSet& p) {
  const auto d = p.phase_block(0);
  return WeylForm{p.n(), std::vector<double>(d.begin(), d.end()), compose_product(p, false)};
}

ComplexMatrix permutation_matrix(std::size_t n, std::size_t i, std::size_t j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw DomainError("permutation indices must be distinct and within [1, " + std::to_string(n) +
                      "]");
  }
  ComplexMatrix p = ComplexMatrix::identity(n);
  p(i - 1, i - 1) = 0.0;
  p(j - 1, j - 1) = 0.0;
  p(i - 1, j - 1) = 1.0;
  p(j - 1, i - 1) = 1.0;
  return p;
}

FactorSequence factor_sequence(const ParameterSet& p) {
  const std::size_t n = p.n();
  std::vector<Factor> factors;
  factors.reserve(2 * n - 1);
  for (std::size_t level = 0; level < n; ++level) {
    const auto d = p.phase_block(level);
    factors.emplace_back(DiagonalPhase{level, std::vector<double>(d.begin(), d.end())});
    if (level + 1 < n) {
      const auto o = p.angle_block(level);
      factors.emplace_back(OrthogonalFactor{level, std::vector<double>(o.begin(), o.end())});
    }
  }
  return FactorSequence(n, std::move(factors));
}

ComplexMatrix factor_matrix(const Factor& f, std::size_t n) {
  if (const auto* d = std::get_if<DiagonalPhase>(&f)) {
    if (d->level + d->phases.size() != n) throw DimensionError("diagonal factor does not fit n");
    ComplexMatrix m = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < d->phases.size(); ++i) {
      m(d->level + i, d->level + i) = std::polar(1.0, d->phases[i]);
    }
    return m;
  }
  const auto& o = std::get<OrthogonalFactor>(f);
  if (o.level + o.angles.size() + 1 != n) throw DimensionError("orthogonal factor does not fit n");
  const OrthogonalMatrix block = build_orthogonal(o.angles);
  ComplexMatrix m = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = 0; j < block.size(); ++j)
      m(o.level + i, o.level + j) = Complex(block(i, j), 0.0);
  return m;
}

}  // namespace unifac
