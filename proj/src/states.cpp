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

#include "qspeed/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qspeed {

namespace {

constexpr double kTraceTolerance = 1e-10;
constexpr double kProjectorTolerance = 1e-9;
constexpr double kWeightSumTolerance = 1e-10;

}  // namespace

void check_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw ValidationError("dimension", std::string(what) + ": dimension mismatch (" +
                                           std::to_string(a) + " vs " +
                                           std::to_string(b) + ")");
  }
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m, const Tolerances& tol) {
  spectrum_ = hermitian_eig(m, tol);
  if (spectrum_.eigenvalues(0) < -tol.psd_negativity) {
    throw ValidationError("positivity",
                          "density matrix has eigenvalue " +
                              std::to_string(spectrum_.eigenvalues(0)));
  }
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    throw ValidationError("trace", "density matrix trace is " + std::to_string(trace) +
                                       ", expected 1");
  }
  matrix_ = 0.5 * (m + m.adjoint());
  finish(tol);
}

DensityMatrix DensityMatrix::from_spectrum(SpectralDecomposition spectrum,
                                           const Tolerances& tol) {
  DensityMatrix out;
  out.spectrum_ = std::move(spectrum);
  out.spectrum_.eigenvalues = out.spectrum_.eigenvalues.cwiseMax(0.0);
  out.matrix_ = out.spectrum_.reconstruct();
  out.finish(tol);
  return out;
}

void DensityMatrix::finish(const Tolerances& tol) {
  spectrum_.eigenvalues = spectrum_.eigenvalues.cwiseMax(0.0);
  rank_threshold_ = tol.rank;
  rank_ = static_cast<int>((spectrum_.eigenvalues.array() > tol.rank).count());
}

ComplexVector DensityMatrix::dominant_vector() const {
  return spectrum_.eigenvectors.col(dim() - 1);
}

Projector::Projector(const ComplexMatrix& m, const Tolerances& tol) {
  check_square_finite(m);
  if (!is_hermitian(m, tol)) {
    throw ValidationError("hermiticity", "projector is not Hermitian");
  }
  matrix_ = 0.5 * (m + m.adjoint());
  if (max_abs(matrix_ * matrix_ - matrix_) > kProjectorTolerance) {
    throw ValidationError("idempotence", "projector does not satisfy P^2 = P");
  }
  const double trace = matrix_.trace().real();
  const double rounded = std::round(trace);
  if (std::abs(trace - rounded) > kProjectorTolerance) {
    throw ValidationError("trace", "projector trace " + std::to_string(trace) +
                                       " is not an integer");
  }
  subspace_dim_ = static_cast<int>(rounded);
}

Projector Projector::complement() const {
  return Projector(ComplexMatrix::Identity(dim(), dim()) - matrix_);
}

DensityMatrix pure_state(const ComplexVector& v, const Tolerances& tol) {
  if (v.size() == 0 || v.size() > kMaxDimension) {
    throw ValidationError("dimension", "state vector size " + std::to_string(v.size()));
  }
  if (!v.allFinite()) {
    throw ValidationError("finite", "state vector has non-finite entries");
  }
  const double norm = v.norm();
  if (!(norm > 0.0)) {
    throw ValidationError("norm", "cannot normalise the zero vector");
  }
  const ComplexVector u = v / norm;
  return DensityMatrix(u * u.adjoint(), tol);
}

DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& pairs,
                  const Tolerances& tol) {
  if (pairs.empty()) {
    throw ValidationError("weights", "mixture needs at least one component");
  }
  const Eigen::Index d = pairs.front().second.dim();
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  double total = 0.0;
  for (const auto& [weight, rho] : pairs) {
    if (!(weight >= 0.0) || !std::isfinite(weight)) {
      throw ValidationError("weights", "mixture weight " + std::to_string(weight) +
                                           " is negative or not finite");
    }
    check_same_dim(rho.dim(), d, "mix");
    acc += weight * rho.matrix();
    total += weight;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw ValidationError("weights", "mixture weights sum to " + std::to_string(total));
  }
  return DensityMatrix(acc, tol);
}

namespace {

// sqrt(rho) restricted to its range: columns sqrt(pi_i) |i> for pi_i above
// the rank threshold.
ComplexMatrix range_factor(const DensityMatrix& rho) {
  const SpectralDecomposition& s = rho.spectrum();
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    if (s.eigenvalues(i) > rho.rank_threshold()) support.push_back(i);
  }
  ComplexMatrix factor(rho.dim(), static_cast<Eigen::Index>(support.size()));
  for (Eigen::Index k = 0; k < factor.cols(); ++k) {
    const Eigen::Index i = support[static_cast<std::size_t>(k)];
    factor.col(k) = std::sqrt(s.eigenvalues(i)) * s.eigenvectors.col(i);
  }
  return factor;
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dim(rho.dim(), sigma.dim(), "fidelity");
  // Tr sqrt(sqrt(rho) sigma sqrt(rho)) is the sum of singular values of
  // sqrt(rho) sqrt(sigma); only the range factors contribute.
  const ComplexMatrix a = range_factor(rho);
  const ComplexMatrix b = range_factor(sigma);
  if (a.cols() == 0 || b.cols() == 0) return 0.0;
  const ComplexMatrix overlap = a.adjoint() * b;
  Eigen::JacobiSVD<ComplexMatrix> svd(overlap);
  return std::min(svd.singularValues().sum(), 1.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma,
                      const Tolerances& tol) {
  check_same_dim(rho.dim(), sigma.dim(), "trace_distance");
  return 0.5 * trace_norm(rho.matrix() - sigma.matrix(), tol);
}

Projector range_projector(const DensityMatrix& rho) {
  const SpectralDecomposition& s = rho.spectrum();
  ComplexMatrix p = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    if (s.eigenvalues(i) > rho.rank_threshold()) {
      p += s.eigenvectors.col(i) * s.eigenvectors.col(i).adjoint();
    }
  }
  return Projector(p);
}

double expectation(const ComplexMatrix& obs, const DensityMatrix& rho) {
  check_same_dim(obs.rows(), rho.dim(), "expectation");
  return (obs.cwiseProduct(rho.matrix().transpose())).sum().real();
}

double expectation(const HermitianOperator& obs, const DensityMatrix& rho) {
  return expectation(obs.matrix(), rho);
}

double expectation(const Projector& obs, const DensityMatrix& rho) {
  return expectation(obs.matrix(), rho);
}

double std_dev(const HermitianOperator& h, const DensityMatrix& rho) {
  check_same_dim(h.dim(), rho.dim(), "std_dev");
  // Central moment: shift by the mean first so large offsets do not cancel.
  const double mean = expectation(h, rho);
  ComplexMatrix centred = h.matrix();
  centred.diagonal().array() -= mean;
  const double variance = expectation(ComplexMatrix(centred * centred), rho);
  return std::sqrt(std::max(variance, 0.0));
}

}  // namespace qspeed
