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

// Speed limits on survival probabilities (hbar = 1).
//
//   MT          cos^2(dH t)                  on dH |t| <= pi/2
//   FISHER      cos^2(sqrt(F) t / 2)         on sqrt(F) |t| <= pi
//   GEN_LOWER   cos^2(sqrt(F) t / 2 + d)     on 0 <= t <= (pi - 2d)/sqrt(F),  d  = acos(sqrt(c))
//   GEN_UPPER   sin^2(sqrt(F) t / 2 + d')    on 0 <= t <= (pi - 2d')/sqrt(F), d' = asin(sqrt(c))
//
// FISHER lower-bounds T, D and (default projector) E; GEN_LOWER/GEN_UPPER
// sandwich <Pi>_{rho(t)} for an arbitrary projector with <Pi>_{rho} = c.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qspeed/dynamics.hpp"
#include "qspeed/local_hamiltonian.hpp"
#include "qspeed/states.hpp"

namespace qspeed {

enum class BoundKind { kMandelstamTamm, kFisher, kGeneralLower, kGeneralUpper };

class BoundCurve {
 public:
  BoundCurve(BoundKind kind, double rate, double offset);

  BoundKind kind() const { return kind_; }
  /// slope of the cos^2/sin^2 argument
  double rate() const { return rate_; }
  double offset() const { return offset_; }
  /// end of the validity window; +infinity when rate is zero
  double window_end() const { return window_end_; }

  bool in_window(double t) const;
  /// Curve value, or std::nullopt outside the validity window.
  std::optional<double> value(double t) const;

 private:
  BoundKind kind_;
  double rate_;
  double offset_;
  double window_end_;
};

BoundCurve mt_bound(double dh);
BoundCurve fisher_bound(double qfi);

struct GeneralizedBounds {
  BoundCurve lower;
  BoundCurve upper;
};

/// Throws ValidationError("projection") unless c lies in [0, 1].
GeneralizedBounds generalized_bounds(double qfi, double c);

/// Same, from the two outcome weights p = <Pi> and q = 1 - <Pi> computed
/// separately; keeps the offsets accurate when c is within rounding of 0 or 1.
GeneralizedBounds generalized_bounds(double qfi, double p, double q);

enum class Dichotomy { kStrictAbove, kExactEquality, kViolation };

std::string to_string(Dichotomy d);

/// Classifies E(t) against cos^2(sqrt(F) t / 2) on the grid points inside
/// (0, pi/sqrt(F)]: either E stays strictly above, or it equals the bound
/// everywhere. Anything else is reported as a violation. Requires the
/// default projector.
Dichotomy dichotomy_check(const EvolutionSpec& spec, std::span<const double> grid);

inline constexpr double kDichotomyTolerance = 1e-8;

/// Lower bounds on the orthogonalisation time; +infinity when unbounded.
struct ThetaPerpBounds {
  double mt;
  double fisher;
};

ThetaPerpBounds theta_perp_bounds(double dh, double qfi);

enum class Survival { kT, kE, kD };

std::string to_string(Survival s);

/// Survival value below which a refined minimum counts as a root.
inline constexpr double kRootThreshold = 1e-7;

/// First time in [0, t_max] at which the chosen survival probability reaches
/// zero. The grid is scanned for the first local minimum, which is refined
/// by bisection on the sign of the time derivative to 1e-9 and accepted if
/// the survival there is below kRootThreshold.
std::optional<double> empirical_theta_perp(const EvolutionSpec& spec, Survival which,
                                           double t_max, int steps);

/// s k^2 + (N - s k)^2 with s = floor(N / k): the Fisher ceiling of
/// k-producible states for H/(2 eps).
std::int64_t producibility_bound(int n, int k);

struct WitnessReport {
  int n_qubits = 0;
  double epsilon = 0.0;
  /// F(rho, H / (2 eps))
  double qfi_normalized = 0.0;
  bool entangled = false;
  int min_k = 0;
  /// pi / (2 eps sqrt(producibility_bound(N, min_k)))
  double theta_bound = 0.0;
  /// (k, bound) for k = 1..N
  std::vector<std::pair<int, std::int64_t>> ladder;
};

WitnessReport entanglement_witness(const DensityMatrix& rho, const LocalHamiltonian& h,
                                   const Tolerances& tol = {});

}  // namespace qspeed
