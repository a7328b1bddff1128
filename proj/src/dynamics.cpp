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

#include "qspeed/dynamics.hpp"

#include <cmath>
#include <string>

#include "qspeed/bounds.hpp"
#include "qspeed/fisher.hpp"

namespace qspeed {

EvolutionSpec::EvolutionSpec(DensityMatrix rho0, HermitianOperator h,
                             std::optional<Projector> projector, const Tolerances& tol)
    : rho0_(std::move(rho0)),
      h_(std::move(h)),
      projector_(projector ? *projector : range_projector(rho0_)),
      default_projector_(!projector.has_value()),
      tol_(tol) {
  check_same_dim(h_.dim(), rho0_.dim(), "EvolutionSpec hamiltonian");
  check_same_dim(projector_.dim(), rho0_.dim(), "EvolutionSpec projector");
}

BinaryOutcome binary_outcome(const EvolutionSpec& spec, double t) {
  const SpectralDecomposition& s = spec.rho0().spectrum();
  const ComplexMatrix evolved = unitary_exp(spec.h(), t) * s.eigenvectors;
  const ComplexMatrix& pi = spec.projector().matrix();
  const ComplexMatrix& h = spec.h().matrix();

  // With u_i = U|i>:  p = sum pi_i ||Pi u_i||^2,  q = sum pi_i ||(1-Pi) u_i||^2
  // and dp/dt = 2 sum pi_i Im<Pi u_i|H u_i> = -2 sum pi_i Im<(1-Pi) u_i|H u_i>.
  BinaryOutcome out;
  double dot_in = 0.0;
  double dot_out = 0.0;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    const double w = s.eigenvalues(i);
    if (w <= 0.0) continue;
    const ComplexVector u = evolved.col(i);
    const ComplexVector inside = pi * u;
    const ComplexVector outside = u - inside;
    const ComplexVector hu = h * u;
    out.p += w * inside.squaredNorm();
    out.q += w * outside.squaredNorm();
    dot_in += w * inside.dot(hu).imag();
    dot_out -= w * outside.dot(hu).imag();
  }
  out.p_dot = 2.0 * (out.p > 0.5 ? dot_out : dot_in);
  return out;
}

DensityMatrix evolve(const EvolutionSpec& spec, double t) {
  const SpectralDecomposition& s = spec.rho0().spectrum();
  SpectralDecomposition moved{s.eigenvalues, unitary_exp(spec.h(), t) * s.eigenvectors};
  return DensityMatrix::from_spectrum(std::move(moved), spec.tolerances());
}

double survival_P(const ComplexVector& psi0, const HermitianOperator& h, double t) {
  check_same_dim(psi0.size(), h.dim(), "survival_P");
  const double norm2 = psi0.squaredNorm();
  if (!(norm2 > 0.0)) {
    throw ValidationError("norm", "survival_P needs a non-zero state vector");
  }
  const Complex overlap = psi0.dot(unitary_exp(h, t) * psi0) / norm2;
  return std::norm(overlap);
}

double survival_P(const DensityMatrix& psi0, const HermitianOperator& h, double t) {
  if (!psi0.is_pure()) {
    throw ValidationError("purity", "survival_P is defined for pure states only (rank " +
                                        std::to_string(psi0.rank()) + ")");
  }
  return survival_P(ComplexVector(psi0.dominant_vector()), h, t);
}

double survival_T(const EvolutionSpec& spec, double t) {
  const double f = fidelity(spec.rho0(), evolve(spec, t));
  return f * f;
}

double survival_E(const EvolutionSpec& spec, double t) {
  return binary_outcome(spec, t).p;
}

double survival_D(const EvolutionSpec& spec, double t) {
  const DensityMatrix rt = evolve(spec, t);
  const double norm = trace_norm(rt.matrix() - spec.rho0().matrix(), spec.tolerances());
  return 1.0 - 0.25 * norm * norm;
}

double e_dot(const EvolutionSpec& spec, double t) {
  return binary_outcome(spec, t).p_dot;
}

EDecomposition e_decomposition(const EvolutionSpec& spec, double t) {
  if (!spec.has_default_projector()) {
    throw ValidationError("projector",
                          "e_decomposition requires the range projector of rho0");
  }
  const SpectralDecomposition& s = spec.rho0().spectrum();
  const double threshold = spec.rho0().rank_threshold();
  const ComplexMatrix amplitudes =
      s.eigenvectors.adjoint() * unitary_exp(spec.h(), t) * s.eigenvectors;

  EDecomposition out;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    const double w = s.eigenvalues(i);
    if (w <= 0.0) continue;
    out.coherent_sum += w * std::norm(amplitudes(i, i));
    for (Eigen::Index j = 0; j < s.dim(); ++j) {
      if (j == i || s.eigenvalues(j) <= threshold) continue;
      out.leakage_sum += w * std::norm(amplitudes(j, i));
    }
  }
  return out;
}

std::vector<double> uniform_grid(double t_max, int steps) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw ValidationError("t_max", "t_max must be positive and finite");
  }
  if (steps < 2) {
    throw ValidationError("steps", "need at least 2 grid points");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double h = t_max / static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = h * i;
  grid.back() = t_max;
  return grid;
}

EvolutionTrace trace_evolution(const EvolutionSpec& spec, double t_max, int steps) {
  EvolutionTrace trace;
  trace.times = uniform_grid(t_max, steps);
  trace.std_dev = std_dev(spec.h(), spec.rho0());
  trace.qfi = quantum_fisher(spec.rho0(), spec.h(), spec.tolerances()).qfi;
  const BinaryOutcome start = binary_outcome(spec, 0.0);
  trace.initial_projection = start.p / (start.p + start.q);

  const BoundCurve mt = mt_bound(trace.std_dev);
  const BoundCurve fisher = fisher_bound(trace.qfi);
  const GeneralizedBounds general = generalized_bounds(trace.qfi, start.p, start.q);

  const bool pure = spec.rho0().is_pure();
  const ComplexVector psi = spec.rho0().dominant_vector();
  if (pure) trace.survival_P.emplace();

  const std::size_t n = trace.times.size();
  trace.survival_T.reserve(n);
  trace.survival_E.reserve(n);
  trace.survival_D.reserve(n);
  for (const double t : trace.times) {
    if (pure) trace.survival_P->push_back(survival_P(psi, spec.h(), t));
    trace.survival_T.push_back(survival_T(spec, t));
    trace.survival_E.push_back(survival_E(spec, t));
    trace.survival_D.push_back(survival_D(spec, t));
    trace.bound_mt.push_back(mt.value(t));
    trace.bound_fisher.push_back(fisher.value(t));
    trace.gen_lower.push_back(general.lower.value(t));
    trace.gen_upper.push_back(general.upper.value(t));
    trace.in_mt_window.push_back(mt.in_window(t));
    trace.in_fisher_window.push_back(fisher.in_window(t));
  }
  return trace;
}

}  // namespace qspeed
