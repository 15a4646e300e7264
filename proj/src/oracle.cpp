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

#include "unifac/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>
#include <type_traits>
#include <utility>

#include "unifac/factorizer.hpp"

namespace unifac {

namespace {

constexpr std::array<std::pair<RandomKind, std::string_view>, 4> kKindNames{{
    {RandomKind::haar_unitary, "haar_unitary"},
    {RandomKind::haar_special_unitary, "haar_special_unitary"},
    {RandomKind::random_parameters, "random_parameters"},
    {RandomKind::haar_orthogonal, "haar_orthogonal"},
}};

// mt19937_64 has a fully specified output sequence; the distributions in
// <random> do not, so the conversions to uniform and normal variates are
// written out here.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Marsaglia polar method.
  double normal() {
    if (spare_) {
      spare_ = false;
      return saved_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    saved_ = v * scale;
    spare_ = true;
    return u * scale;
  }

 private:
  std::mt19937_64 engine_;
  bool spare_ = false;
  double saved_ = 0.0;
};

void require_kind(const RandomSpec& spec, std::initializer_list<RandomKind> allowed,
                  const char* what) {
  if (spec.n == 0) throw DimensionError(std::string(what) + ": n must be positive");
  if (std::find(allowed.begin(), allowed.end(), spec.kind) == allowed.end()) {
    throw DomainError(std::string(what) + ": unsupported kind " + std::string(to_string(spec.kind)));
  }
}

template <typename T>
T conj_if_complex(const T& x) {
  if constexpr (std::is_same_v<T, Complex>) {
    return std::conj(x);
  } else {
    return x;
  }
}

// Orthonormalizes the columns of m in place. Two passes of modified
// Gram-Schmidt keep the loss of orthogonality at rounding level.
template <typename T>
void orthonormalize_columns(Matrix<T>& m) {
  const std::size_t n = m.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        T proj{};
        for (std::size_t i = 0; i < n; ++i) proj += conj_if_complex(m(i, k)) * m(i, j);
        for (std::size_t i = 0; i < n; ++i) m(i, j) -= proj * m(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(m(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) m(i, j) /= norm;
  }
}

template <typename T>
T lu_determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  T det{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m(i, k)) > std::abs(m(pivot, k))) pivot = i;
    }
    if (m(pivot, k) == T{}) return T{};
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T f = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

bool diagonal_structure_ok(const ComplexMatrix& m, std::size_t level) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j) {
        if (i < level && m(i, j) != Complex(1.0, 0.0)) return false;
      } else if (m(i, j) != Complex(0.0, 0.0)) {
        return false;
      }
    }
  }
  return true;
}

bool orthogonal_structure_ok(const ComplexMatrix& m, std::size_t level) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const bool in_block = i >= level && j >= level;
      bool must_be_zero = false;
      if (in_block) {
        must_be_zero = j >= i + 2;
      } else if (i != j) {
        must_be_zero = true;
      } else if (m(i, j) != Complex(1.0, 0.0)) {
        return false;
      }
      if (m(i, j).imag() != 0.0) return false;
      if (must_be_zero && m(i, j).real() != 0.0) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(RandomKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<RandomKind> parse_random_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

ComplexMatrix random_unitary(const RandomSpec& spec) {
  require_kind(spec, {RandomKind::haar_unitary, RandomKind::haar_special_unitary}, "random_unitary");
  Sampler sampler(spec.seed);
  ComplexMatrix m(spec.n);
  for (auto& z : m.entries()) {
    const double re = sampler.normal();
    const double im = sampler.normal();
    z = Complex(re, im);
  }
  orthonormalize_columns(m);
  if (spec.kind == RandomKind::haar_special_unitary) {
    // Multiplying by a global phase e^{-i arg(det)/n} sets det to 1.
    const Complex det = lu_determinant(m);
    const Complex fix = std::polar(1.0, -std::arg(det) / static_cast<double>(spec.n));
    for (auto& z : m.entries()) z *= fix;
  }
  return m;
}

RealMatrix random_orthogonal(const RandomSpec& spec) {
  require_kind(spec, {RandomKind::haar_orthogonal}, "random_orthogonal");
  Sampler sampler(spec.seed);
  RealMatrix m(spec.n);
  for (auto& x : m.entries()) x = sampler.normal();
  orthonormalize_columns(m);
  return m;
}

ParameterSet random_parameters(const RandomSpec& spec, double delta) {
  require_kind(spec, {RandomKind::random_parameters}, "random_parameters");
  Sampler sampler(spec.seed);
  std::vector<double> angles(ParameterSet::angle_count(spec.n));
  std::vector<double> phases(ParameterSet::phase_count(spec.n));
  for (double& a : angles) a = sampler.uniform(delta, kHalfPi - delta);
  for (double& p : phases) p = sampler.uniform(delta, kTwoPi - delta);
  return ParameterSet(spec.n, std::move(angles), std::move(phases));
}

Complex determinant(const ComplexMatrix& a) { return lu_determinant(a); }
double determinant(const RealMatrix& a) { return lu_determinant(a); }

bool VerificationReport::structure_ok() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const FactorCheck& c) { return c.structure_ok; });
}

double VerificationReport::max_factor_defect() const {
  double worst = 0.0;
  for (const auto& c : factors) worst = std::max(worst, c.unitarity_defect);
  return worst;
}

VerificationReport verify_factorization(const ComplexMatrix& a, const FactorSequence& f) {
  const std::size_t n = f.n();
  if (a.size() != n) {
    throw DimensionError("matrix dimension " + std::to_string(a.size()) +
                         " does not match factor sequence dimension " + std::to_string(n));
  }
  VerificationReport report{0.0, {}};
  report.factors.reserve(f.factors().size());
  ComplexMatrix product = ComplexMatrix::identity(n);
  for (std::size_t pos = 0; pos < f.factors().size(); ++pos) {
    const Factor& factor = f.factors()[pos];
    const ComplexMatrix m = factor_matrix(factor, n);
    const bool orthogonal = std::holds_alternative<OrthogonalFactor>(factor);
    const std::size_t level = orthogonal ? std::get<OrthogonalFactor>(factor).level
                                         : std::get<DiagonalPhase>(factor).level;
    report.factors.push_back({pos, orthogonal, level, unitarity_defect(m),
                              orthogonal ? orthogonal_structure_ok(m, level)
                                         : diagonal_structure_ok(m, level)});
    product = matmul(product, m);
  }
  report.residual = frobenius_distance(a, product);
  return report;
}

}  // namespace unifac
