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

// Exact unitary evolution rho(t) = U(t) rho U(t)^dagger and the survival
// probabilities built on it:
//
//   P(t) = |<psi|psi(t)>|^2                 pure states only
//   T(t) = F(rho, rho(t))^2                 squared Uhlmann fidelity
//   E(t) = Tr[Pi rho(t)]                    Pi defaults to the range of rho
//   D(t) = 1 - ||rho(t) - rho||_1^2 / 4     trace-distance complement

#include <optional>
#include <vector>

#include "qspeed/matrix.hpp"
#include "qspeed/states.hpp"

namespace qspeed {

class EvolutionSpec {
 public:
  /// Without a projector, E uses the range projector of rho0.
  EvolutionSpec(DensityMatrix rho0, HermitianOperator h,
                std::optional<Projector> projector = std::nullopt,
                const Tolerances& tol = {});

  const DensityMatrix& rho0() const { return rho0_; }
  const HermitianOperator& h() const { return h_; }
  const Projector& projector() const { return projector_; }
  bool has_default_projector() const { return default_projector_; }
  const Tolerances& tolerances() const { return tol_; }
  Eigen::Index dim() const { return rho0_.dim(); }

 private:
  DensityMatrix rho0_;
  HermitianOperator h_;
  Projector projector_;
  bool default_projector_;
  Tolerances tol_;
};

/// Outcome statistics of the binary measurement {Pi, 1 - Pi} on rho(t).
/// p and q = 1 - p are accumulated separately as sums of squared norms, so
/// each keeps full relative precision near 0.
struct BinaryOutcome {
  double p = 0.0;
  double q = 0.0;
  double p_dot = 0.0;
};

BinaryOutcome binary_outcome(const EvolutionSpec& spec, double t);

DensityMatrix evolve(const EvolutionSpec& spec, double t);

/// Throws ValidationError("purity") for a mixed psi0.
double survival_P(const DensityMatrix& psi0, const HermitianOperator& h, double t);
double survival_P(const ComplexVector& psi0, const HermitianOperator& h, double t);

double survival_T(const EvolutionSpec& spec, double t);
double survival_E(const EvolutionSpec& spec, double t);
double survival_D(const EvolutionSpec& spec, double t);

/// Analytic dE/dt = -i Tr(Pi [H, rho(t)]).
double e_dot(const EvolutionSpec& spec, double t);

/// Split of E(t) in the eigenbasis {pi_i, |i>} of rho0:
///   coherent = sum_i pi_i |<i|U|i>|^2
///   leakage  = sum_{i != j, j in range} pi_i |<j|U|i>|^2
struct EDecomposition {
  double coherent_sum = 0.0;
  double leakage_sum = 0.0;
};

/// Requires the default (range) projector.
EDecomposition e_decomposition(const EvolutionSpec& spec, double t);

/// Sampled survival probabilities and bound curves on a uniform grid.
/// Bound samples outside their validity window are std::nullopt.
struct EvolutionTrace {
  std::vector<double> times;
  std::optional<std::vector<double>> survival_P;
  std::vector<double> survival_T;
  std::vector<double> survival_E;
  std::vector<double> survival_D;
  std::vector<std::optional<double>> bound_mt;
  std::vector<std::optional<double>> bound_fisher;
  std::vector<std::optional<double>> gen_lower;
  std::vector<std::optional<double>> gen_upper;
  std::vector<bool> in_mt_window;
  std::vector<bool> in_fisher_window;

  double std_dev = 0.0;
  double qfi = 0.0;
  /// <Pi> at t = 0
  double initial_projection = 1.0;

  std::size_t size() const { return times.size(); }
};

/// Uniform grid of `steps` points on [0, t_max].
std::vector<double> uniform_grid(double t_max, int steps);

EvolutionTrace trace_evolution(const EvolutionSpec& spec, double t_max, int steps);

}  // namespace qspeed
