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

#include "qspeed/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "qspeed/fisher.hpp"

namespace qspeed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWindowSlack = 1e-12;
constexpr double kProjectionSlack = 1e-12;
constexpr double kRootResolution = 1e-9;
constexpr double kDerivativeStep = 1e-6;

double squared(double x) { return x * x; }

}  // namespace

BoundCurve::BoundCurve(BoundKind kind, double rate, double offset)
    : kind_(kind), rate_(rate), offset_(offset) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw ValidationError("rate", "bound rate must be finite and non-negative");
  }
  // rate * t_end + offset = pi/2 for every kind
  const double span = std::numbers::pi / 2.0 - offset;
  window_end_ = rate > 0.0 ? std::max(span, 0.0) / rate : kInf;
}

bool BoundCurve::in_window(double t) const {
  const double reach = window_end_ * (1.0 + kWindowSlack);
  switch (kind_) {
    case BoundKind::kMandelstamTamm:
    case BoundKind::kFisher:
      return std::abs(t) <= reach;
    case BoundKind::kGeneralLower:
    case BoundKind::kGeneralUpper:
      return t >= 0.0 && t <= reach;
  }
  return false;
}

std::optional<double> BoundCurve::value(double t) const {
  if (!in_window(t)) return std::nullopt;
  const double phase = rate_ * std::abs(t) + offset_;
  if (kind_ == BoundKind::kGeneralUpper) return squared(std::sin(phase));
  return squared(std::cos(phase));
}

BoundCurve mt_bound(double dh) { return BoundCurve(BoundKind::kMandelstamTamm, dh, 0.0); }

BoundCurve fisher_bound(double qfi) {
  if (!(qfi >= 0.0)) {
    throw ValidationError("qfi", "Fisher information must be non-negative");
  }
  return BoundCurve(BoundKind::kFisher, std::sqrt(qfi) / 2.0, 0.0);
}

GeneralizedBounds generalized_bounds(double qfi, double c) {
  if (!(c >= -kProjectionSlack && c <= 1.0 + kProjectionSlack)) {
    throw ValidationError("projection", "initial projection <Pi> = " + std::to_string(c) +
                                            " outside [0, 1]");
  }
  const double inside = std::clamp(c, 0.0, 1.0);
  return generalized_bounds(qfi, inside, 1.0 - inside);
}

GeneralizedBounds generalized_bounds(double qfi, double p, double q) {
  if (!(qfi >= 0.0)) {
    throw ValidationError("qfi", "Fisher information must be non-negative");
  }
  if (!(p >= 0.0 && q >= 0.0 && p + q > 0.0)) {
    throw ValidationError("projection", "outcome probabilities must be non-negative");
  }
  // delta = acos(sqrt(c)), delta' = asin(sqrt(c)) with c = p / (p + q)
  const double rate = std::sqrt(qfi) / 2.0;
  return {BoundCurve(BoundKind::kGeneralLower, rate, std::atan2(std::sqrt(q), std::sqrt(p))),
          BoundCurve(BoundKind::kGeneralUpper, rate, std::atan2(std::sqrt(p), std::sqrt(q)))};
}

std::string to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::kStrictAbove:
      return "STRICT_ABOVE";
    case Dichotomy::kExactEquality:
      return "EXACT_EQUALITY";
    case Dichotomy::kViolation:
      return "VIOLATION";
  }
  return "UNKNOWN";
}

Dichotomy dichotomy_check(const EvolutionSpec& spec, std::span<const double> grid) {
  if (!spec.has_default_projector()) {
    throw ValidationError("projector", "dichotomy_check requires the range projector");
  }
  const BoundCurve bound = fisher_bound(quantum_fisher(spec.rho0(), spec.h()).qfi);
  bool above_seen = false;
  for (const double t : grid) {
    if (t == 0.0) continue;
    const std::optional<double> b = bound.value(t);
    if (!b) continue;
    const double gap = survival_E(spec, t) - *b;
    if (gap < -kDichotomyTolerance) return Dichotomy::kViolation;
    if (gap > kDichotomyTolerance) {
      above_seen = true;
    } else if (above_seen) {
      // once strictly above, E cannot return to the bound
      return Dichotomy::kViolation;
    }
  }
  return above_seen ? Dichotomy::kStrictAbove : Dichotomy::kExactEquality;
}

ThetaPerpBounds theta_perp_bounds(double dh, double qfi) {
  return {dh > 0.0 ? std::numbers::pi / (2.0 * dh) : kInf,
          qfi > 0.0 ? std::numbers::pi / std::sqrt(qfi) : kInf};
}

std::string to_string(Survival s) {
  switch (s) {
    case Survival::kT:
      return "T";
    case Survival::kE:
      return "E";
    case Survival::kD:
      return "D";
  }
  return "?";
}

std::optional<double> empirical_theta_perp(const EvolutionSpec& spec, Survival which,
                                           double t_max, int steps) {
  std::function<double(double)> value;
  switch (which) {
    case Survival::kT:
      value = [&spec](double t) { return survival_T(spec, t); };
      break;
    case Survival::kE:
      value = [&spec](double t) { return survival_E(spec, t); };
      break;
    case Survival::kD:
      value = [&spec](double t) { return survival_D(spec, t); };
      break;
  }
  const auto slope = [&](double t) {
    if (which == Survival::kE) return e_dot(spec, t);
    return (value(t + kDerivativeStep) - value(t - kDerivativeStep)) /
           (2.0 * kDerivativeStep);
  };

  const std::vector<double> grid = uniform_grid(t_max, steps);
  std::vector<double> samples(grid.size());
  std::transform(grid.begin(), grid.end(), samples.begin(), value);

  const std::size_t last = grid.size() - 1;
  for (std::size_t i = 1; i <= last; ++i) {
    const bool interior_min =
        i < last && samples[i] < samples[i - 1] && samples[i] <= samples[i + 1];
    const bool end_min = i == last && samples[i] < samples[i - 1];
    if (!interior_min && !end_min) continue;

    double lo = grid[i - 1];
    double hi = i < last ? grid[i + 1] : grid[i];
    while (hi - lo > kRootResolution) {
      const double mid = 0.5 * (lo + hi);
      if (slope(mid) < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    double best = 0.5 * (lo + hi);
    double best_value = value(best);
    if (samples[i] < best_value) {
      best = grid[i];
      best_value = samples[i];
    }
    if (best_value < kRootThreshold) return best;
  }
  return std::nullopt;
}

std::int64_t producibility_bound(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw ValidationError("producibility", "need 1 <= k <= N, got N=" + std::to_string(n) +
                                               " k=" + std::to_string(k));
  }
  const std::int64_t s = n / k;
  const std::int64_t rest = n - s * k;
  return s * k * k + rest * rest;
}

WitnessReport entanglement_witness(const DensityMatrix& rho, const LocalHamiltonian& h,
                                   const Tolerances& tol) {
  check_same_dim(rho.dim(), h.op().dim(), "entanglement_witness");
  WitnessReport report;
  report.n_qubits = h.n_qubits();
  report.epsilon = h.epsilon();
  report.qfi_normalized =
      quantum_fisher(rho, h.op().scaled(1.0 / (2.0 * h.epsilon())), tol).qfi;

  const double n = static_cast<double>(report.n_qubits);
  report.entangled = report.qfi_normalized > n + 1e-9 * std::max(1.0, n);

  for (int k = 1; k <= report.n_qubits; ++k) {
    const std::int64_t bound = producibility_bound(report.n_qubits, k);
    report.ladder.emplace_back(k, bound);
    const double b = static_cast<double>(bound);
    if (report.min_k == 0 && report.qfi_normalized <= b + 1e-9 * std::max(1.0, b)) {
      report.min_k = k;
    }
  }
  // k = N always admits qfi <= N^2; guard against rounding above it
  if (report.min_k == 0) report.min_k = report.n_qubits;

  const double ceiling =
      static_cast<double>(producibility_bound(report.n_qubits, report.min_k));
  report.theta_bound = std::numbers::pi / (2.0 * report.epsilon * std::sqrt(ceiling));
  return report;
}

}  // namespace qspeed
