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

// Dense complex-matrix primitives for small Hilbert spaces.
//
// Units: hbar = 1 throughout the library, so a Hamiltonian has units of
// 1/time and U(t) = exp(-i H t).

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace qspeed {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest Hilbert-space dimension accepted anywhere (10 qubits).
inline constexpr Eigen::Index kMaxDimension = 1024;

/// Numerical thresholds shared by all modules. The defaults are the
/// library-wide constants; callers override individual fields.
struct Tolerances {
  /// ||m - m^dagger||_max <= hermiticity * max(1, ||m||_max)
  double hermiticity = 1e-10;
  /// eigenvalues in [-psd_negativity, 0) are clamped to zero
  double psd_negativity = 1e-10;
  /// eigenvalues of a density matrix above this count towards its range
  double rank = 1e-10;
  /// Fisher pair terms with pi_i + pi_j <= pair are skipped
  double fisher_pair = 1e-12;
  /// binary Fisher ratio undefined when p(1-p) < degeneracy
  double degeneracy = 1e-12;
};

/// Raised when an input violates a named invariant ("hermiticity",
/// "trace", "positivity", "dimension", ...).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string invariant, const std::string& what)
      : std::invalid_argument(invariant + ": " + what),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Eigenvalues ascending, eigenvectors as orthonormal columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  Eigen::Index dim() const { return eigenvalues.size(); }

  /// U f(diag(lambda)) U^dagger for an element-wise scalar function f.
  template <typename F>
  ComplexMatrix apply(F&& f) const {
    ComplexVector values(dim());
    for (Eigen::Index i = 0; i < dim(); ++i) values(i) = f(eigenvalues(i));
    return eigenvectors * values.asDiagonal() * eigenvectors.adjoint();
  }

  ComplexMatrix reconstruct() const {
    return apply([](double x) { return Complex(x, 0.0); });
  }
};

double max_abs(const ComplexMatrix& m);

/// Square, finite and within the dimension cap; throws otherwise.
void check_square_finite(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, const Tolerances& tol = {});

/// Hermitian eigendecomposition. The input is symmetrised before solving.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m,
                                    const Tolerances& tol = {});

/// A validated Hermitian matrix with its spectral decomposition cached.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  HermitianOperator scaled(double factor) const;
  HermitianOperator shifted(double offset) const;

 private:
  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
};

/// exp(-i H t) assembled from the cached spectrum of H.
ComplexMatrix unitary_exp(const HermitianOperator& h, double t);

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-psd_negativity, 0) are clamped; anything more negative is rejected.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerances& tol = {});

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m, const Tolerances& tol = {});

/// Tensor product a (x) b with a as the most significant factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace qspeed
