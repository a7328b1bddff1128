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

#include "qspeed/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qspeed {

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void check_square_finite(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ValidationError("dimension", "matrix must be square and non-empty, got " +
                                           std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()));
  }
  if (m.rows() > kMaxDimension) {
    throw ValidationError("dimension", "dimension " + std::to_string(m.rows()) +
                                           " exceeds cap " +
                                           std::to_string(kMaxDimension));
  }
  if (!m.allFinite()) {
    throw ValidationError("finite", "matrix has NaN or infinite entries");
  }
}

bool is_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m));
  return max_abs(m - m.adjoint()) <= tol.hermiticity * scale;
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m, const Tolerances& tol) {
  check_square_finite(m);
  if (!is_hermitian(m, tol)) {
    throw ValidationError("hermiticity", "matrix is not Hermitian within tolerance");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m, const Tolerances& tol)
    : spectrum_(hermitian_eig(m, tol)) {
  matrix_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::scaled(double factor) const {
  return HermitianOperator(factor * matrix_);
}

HermitianOperator HermitianOperator::shifted(double offset) const {
  ComplexMatrix m = matrix_;
  m.diagonal().array() += offset;
  return HermitianOperator(m);
}

ComplexMatrix unitary_exp(const HermitianOperator& h, double t) {
  if (t == 0.0) return ComplexMatrix::Identity(h.dim(), h.dim());
  return h.spectrum().apply(
      [t](double e) { return std::exp(Complex(0.0, -e * t)); });
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerances& tol) {
  const SpectralDecomposition s = hermitian_eig(m, tol);
  if (s.eigenvalues(0) < -tol.psd_negativity) {
    throw ValidationError("positivity", "eigenvalue " + std::to_string(s.eigenvalues(0)) +
                                            " below negativity tolerance");
  }
  return s.apply([](double e) { return Complex(std::sqrt(std::max(e, 0.0)), 0.0); });
}

double trace_norm(const ComplexMatrix& m, const Tolerances& tol) {
  const SpectralDecomposition s = hermitian_eig(m, tol);
  return s.eigenvalues.cwiseAbs().sum();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > kMaxDimension || cols > kMaxDimension) {
    throw ValidationError("dimension", "tensor product dimension " +
                                           std::to_string(std::max(rows, cols)) +
                                           " exceeds cap " +
                                           std::to_string(kMaxDimension));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace pauli {

ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

}  // namespace qspeed
