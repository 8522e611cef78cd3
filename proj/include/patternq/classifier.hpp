// Copyright 2026 The patternq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Classifier transforms G = G_{m-1} (x) ... (x) G_0 built from Hadamard (H)
// and C2 factors, applied to real amplitude vectors.
//
// Index-bit convention: the rightmost recipe factor acts on the least
// significant index bits. A C2 factor spans two adjacent bits.

#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstddef>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

#include "patternq/pattern_basis.hpp"
#include "patternq/pattern_vector.hpp"
#include "patternq/recipe.hpp"

namespace patternq {

template <typename Scalar>
using AmplitudeVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using DenseOperator = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Measurement probabilities over basis kets.
template <typename Scalar>
using OutcomeDistribution = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Factor list of a classifier, one-to-one with a basis recipe (H <-> B1,
/// C2 <-> Q2).
class ClassifierSpec {
 public:
  explicit ClassifierSpec(Recipe recipe);

  static ClassifierSpec parse(std::string_view text) { return ClassifierSpec(Recipe::parse(text)); }

  const Recipe& recipe() const noexcept { return recipe_; }
  int total_bits() const noexcept { return recipe_.total_rank(); }
  Eigen::Index dimension() const noexcept { return Eigen::Index{1} << total_bits(); }

 private:
  Recipe recipe_;
};

namespace detail {

inline int index_bits(Eigen::Index size) {
  if (size < 2 || (size & (size - 1)) != 0) {
    throw UsageError("amplitude vector length must be a power of two >= 2, got " +
                     std::to_string(size));
  }
  int bits = 0;
  while ((Eigen::Index{1} << bits) < size) ++bits;
  return bits;
}

}  // namespace detail

/// Input-register state after H^{(x)n} and the phase oracle (-1)^{h(x)}:
/// entry x = 2^{-n/2} * (h(x) ? -1 : +1).
template <typename Scalar = double>
AmplitudeVector<Scalar> initial_amplitudes(const PatternVector& h) {
  const auto n = static_cast<Eigen::Index>(h.size());
  const Scalar scale = Scalar(1) / std::sqrt(static_cast<Scalar>(n));
  AmplitudeVector<Scalar> v(n);
  for (Eigen::Index x = 0; x < n; ++x) v[x] = h[static_cast<std::size_t>(x)] ? -scale : scale;
  return v;
}

/// In-place butterfly (a, b) -> ((a + b)/sqrt2, (a - b)/sqrt2) over every
/// index pair differing only in `bit`.
template <typename Derived>
void apply_hadamard_factor(Eigen::MatrixBase<Derived>& v, int bit) {
  using Scalar = typename Derived::Scalar;
  const int n = detail::index_bits(v.size());
  if (bit < 0 || bit >= n) {
    throw UsageError("hadamard factor bit " + std::to_string(bit) + " out of range for " +
                     std::to_string(n) + " index bits");
  }
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  const Eigen::Index stride = Eigen::Index{1} << bit;
  for (Eigen::Index base = 0; base < v.size(); base += 2 * stride) {
    for (Eigen::Index i = base; i < base + stride; ++i) {
      const Scalar a = v[i];
      const Scalar b = v[i + stride];
      v[i] = (a + b) * r;
      v[i + stride] = (a - b) * r;
    }
  }
}

/// In-place C2 on bits (low_bit, low_bit + 1): within each aligned block of
/// four, every entry e becomes S/2 - e where S is the block sum. This is the
/// 4x4 matrix with -1/2 on the diagonal and 1/2 elsewhere.
template <typename Derived>
void apply_c2_factor(Eigen::MatrixBase<Derived>& v, int low_bit) {
  using Scalar = typename Derived::Scalar;
  const int n = detail::index_bits(v.size());
  if (low_bit < 0 || low_bit + 1 >= n) {
    throw UsageError("C2 factor bits (" + std::to_string(low_bit) + "," +
                     std::to_string(low_bit + 1) + ") out of range for " + std::to_string(n) +
                     " index bits");
  }
  const Eigen::Index s = Eigen::Index{1} << low_bit;
  for (Eigen::Index base = 0; base < v.size(); base += 4 * s) {
    for (Eigen::Index i = base; i < base + s; ++i) {
      const Scalar half_sum = (v[i] + v[i + s] + v[i + 2 * s] + v[i + 3 * s]) / Scalar(2);
      v[i] = half_sum - v[i];
      v[i + s] = half_sum - v[i + s];
      v[i + 2 * s] = half_sum - v[i + 2 * s];
      v[i + 3 * s] = half_sum - v[i + 3 * s];
    }
  }
}

/// Applies every factor of `spec` to `v` in place.
template <typename Derived>
void apply_classifier(const ClassifierSpec& spec, Eigen::MatrixBase<Derived>& v) {
  if (v.size() != spec.dimension()) {
    throw UsageError("classifier " + spec.recipe().to_string() + " acts on dimension " +
                     std::to_string(spec.dimension()) + ", got vector of length " +
                     std::to_string(v.size()));
  }
  const auto& factors = spec.recipe().factors();
  int offset = 0;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (*it == Factor::kB1) {
      apply_hadamard_factor(v, offset);
    } else {
      apply_c2_factor(v, offset);
    }
    offset += factor_rank(*it);
  }
}

/// The 2x2 Hadamard matrix.
template <typename Scalar = double>
DenseOperator<Scalar> hadamard_matrix() {
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  DenseOperator<Scalar> m(2, 2);
  m << r, r, r, -r;
  return m;
}

/// The 4x4 C2 matrix: -1/2 on the diagonal, 1/2 elsewhere.
template <typename Scalar = double>
DenseOperator<Scalar> c2_matrix() {
  DenseOperator<Scalar> m = DenseOperator<Scalar>::Constant(4, 4, Scalar(0.5));
  m.diagonal().setConstant(Scalar(-0.5));
  return m;
}

/// Dense G = G_{m-1} (x) ... (x) G_0 assembled by Kronecker products. Used as
/// the reference for the in-place path.
template <typename Scalar = double>
DenseOperator<Scalar> dense_unitary(const ClassifierSpec& spec) {
  DenseOperator<Scalar> g = DenseOperator<Scalar>::Identity(1, 1);
  for (Factor f : spec.recipe().factors()) {
    const DenseOperator<Scalar> factor =
        f == Factor::kB1 ? hadamard_matrix<Scalar>() : c2_matrix<Scalar>();
    DenseOperator<Scalar> next = Eigen::kroneckerProduct(g, factor);
    g = std::move(next);
  }
  return g;
}

/// Squared amplitudes of G applied to the oracle state of h.
template <typename Scalar = double>
OutcomeDistribution<Scalar> outcome_distribution(const ClassifierSpec& spec, const PatternVector& h) {
  if (static_cast<Eigen::Index>(h.size()) != spec.dimension()) {
    throw UsageError("classifier " + spec.recipe().to_string() + " expects functions of length " +
                     std::to_string(spec.dimension()) + ", got " + std::to_string(h.size()));
  }
  AmplitudeVector<Scalar> v = initial_amplitudes<Scalar>(h);
  apply_classifier(spec, v);
  return v.array().square().matrix();
}

/// Probability that the measured ket is one of h's nearest basis kets.
struct ThresholdReport {
  double theta = 0.0;
  NearestSet nearest;
  OutcomeDistribution<double> distribution;
};

ThresholdReport classification_threshold(const ClassifierSpec& spec, const PatternBasis& basis,
                                         const PatternVector& h);

}  // namespace patternq
