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

#include <optional>

#include "qspeed/dynamics.hpp"
#include "qspeed/matrix.hpp"
#include "qspeed/states.hpp"

namespace qspeed {

struct FisherResult {
  /// quantum Fisher information of the family rho(t), units 1/time^2
  double qfi = 0.0;
  /// 4 (Delta H)^2, the pure-state value and an upper bound on qfi
  double variance_bound = 0.0;
  /// qfi equals variance_bound within 1e-9 relative
  bool saturated = false;
};

/// Quantum Fisher information for the unitary family generated by h:
///
///   F = 2 sum_{i,j} (pi_i - pi_j)^2 / (pi_i + pi_j) |<i|H|j>|^2
///
/// over the eigenbasis of rho. Pairs with pi_i + pi_j <= tol.fisher_pair
/// are skipped. Only off-diagonal elements of H enter, so the result is
/// independent of t and of constant energy shifts.
FisherResult quantum_fisher(const DensityMatrix& rho, const HermitianOperator& h,
                            const Tolerances& tol = {});

/// Classical Fisher information of the two-outcome measurement
/// {Pi, 1 - Pi} with respect to time: p_dot^2 / (p (1 - p)).
/// std::nullopt when p (1 - p) falls below tol.degeneracy.
std::optional<double> classical_fisher_binary(const EvolutionSpec& spec, double t);

/// Bures-distance finite-difference estimate 8 (1 - F(rho, rho(dt))) / dt^2.
/// A test oracle for quantum_fisher, not a production path. dt must lie in
/// [1e-5, 1e-2].
double qfi_bures_oracle(const DensityMatrix& rho, const HermitianOperator& h,
                        double dt);

}  // namespace qspeed
