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

#include <utility>
#include <vector>

#include "qspeed/matrix.hpp"

namespace qspeed {

/// Hermitian, positive semidefinite, unit-trace operator.
///
/// The spectrum is cached with eigenvalues in [-psd_negativity, 0) clamped
/// to zero. The rank counts eigenvalues strictly above the rank threshold of
/// the tolerances the state was built with.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m, const Tolerances& tol = {});

  /// Builds from a known spectrum without re-diagonalising. The eigenvalues
  /// must already satisfy the density-matrix invariants.
  static DensityMatrix from_spectrum(SpectralDecomposition spectrum,
                                     const Tolerances& tol = {});

  const ComplexMatrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  int rank() const { return rank_; }
  bool is_pure() const { return rank_ == 1; }
  double rank_threshold() const { return rank_threshold_; }

  /// Eigenvector of the largest eigenvalue; the state vector when pure.
  ComplexVector dominant_vector() const;

 private:
  DensityMatrix() = default;
  void finish(const Tolerances& tol);

  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
  int rank_ = 0;
  double rank_threshold_ = 0.0;
};

/// Orthogonal projector onto a subspace.
class Projector {
 public:
  explicit Projector(const ComplexMatrix& m, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const { return matrix_; }
  int subspace_dim() const { return subspace_dim_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  Projector complement() const;

 private:
  ComplexMatrix matrix_;
  int subspace_dim_ = 0;
};

/// |v><v| / <v|v>.
DensityMatrix pure_state(const ComplexVector& v, const Tolerances& tol = {});

/// Convex combination sum_i w_i rho_i; weights must be non-negative and sum
/// to one within 1e-10.
DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& pairs,
                  const Tolerances& tol = {});

/// Uhlmann fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)) (not squared).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// ||rho - sigma||_1 / 2.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma,
                      const Tolerances& tol = {});

/// Projector onto the span of eigenvectors with eigenvalue above the rank
/// threshold of rho.
Projector range_projector(const DensityMatrix& rho);

double expectation(const ComplexMatrix& obs, const DensityMatrix& rho);
double expectation(const HermitianOperator& obs, const DensityMatrix& rho);
double expectation(const Projector& obs, const DensityMatrix& rho);

/// sqrt(<H^2> - <H>^2), clamped at zero.
double std_dev(const HermitianOperator& h, const DensityMatrix& rho);

/// Throws ValidationError("dimension") unless a == b.
void check_same_dim(Eigen::Index a, Eigen::Index b, const char* what);

}  // namespace qspeed
