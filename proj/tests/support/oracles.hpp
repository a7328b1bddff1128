// Copyright 2026 The qspeed Authors
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

#pragma once

// Test-only generators and reference computations. Nothing here calls into
// the code path it is used to check.

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "qspeed/matrix.hpp"

namespace qspeed::testing {

inline ComplexMatrix random_complex(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index d, std::mt19937_64& rng, double scale = 1.0) {
  const ComplexMatrix g = random_complex(d, d, rng);
  return scale * 0.5 * (g + g.adjoint());
}

/// Ginibre density matrix of the given rank.
inline ComplexMatrix random_density(Eigen::Index d, Eigen::Index rank, std::mt19937_64& rng) {
  const ComplexMatrix g = random_complex(d, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

/// Projector onto a random k-dimensional subspace.
inline ComplexMatrix random_projector(Eigen::Index d, Eigen::Index k, std::mt19937_64& rng) {
  const ComplexMatrix g = random_complex(d, d, rng);
  const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(g).householderQ();
  const ComplexMatrix cols = q.leftCols(k);
  return cols * cols.adjoint();
}

inline ComplexVector random_vector(Eigen::Index d, std::mt19937_64& rng) {
  return random_complex(d, 1, rng).col(0);
}

/// exp(-i H t) by Pade scaling-and-squaring, independent of the
/// eigendecomposition route.
inline ComplexMatrix pade_unitary(const ComplexMatrix& h, double t) {
  const ComplexMatrix a = Complex(0.0, -t) * h;
  return a.exp();
}

inline double central_difference(const std::function<double(double)>& f, double t, double step) {
  return (f(t + step) - f(t - step)) / (2.0 * step);
}

/// Trace norm from singular values (independent of the Hermitian route).
inline double singular_value_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qspeed::testing
