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

#include "qspeed/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qspeed {

FisherResult quantum_fisher(const DensityMatrix& rho, const HermitianOperator& h,
                            const Tolerances& tol) {
  check_same_dim(h.dim(), rho.dim(), "quantum_fisher");
  const SpectralDecomposition& s = rho.spectrum();
  const ComplexMatrix elements = s.eigenvectors.adjoint() * h.matrix() * s.eigenvectors;

  double qfi = 0.0;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    for (Eigen::Index j = i + 1; j < s.dim(); ++j) {
      const double sum = s.eigenvalues(i) + s.eigenvalues(j);
      if (sum <= tol.fisher_pair) continue;
      const double diff = s.eigenvalues(i) - s.eigenvalues(j);
      // (i, j) and (j, i) contribute equally
      qfi += 4.0 * diff * diff / sum * std::norm(elements(i, j));
    }
  }

  const double sigma = std_dev(h, rho);
  FisherResult out;
  out.qfi = qfi;
  out.variance_bound = 4.0 * sigma * sigma;
  out.saturated =
      std::abs(out.qfi - out.variance_bound) <= 1e-9 * std::max(1.0, out.variance_bound);
  return out;
}

std::optional<double> classical_fisher_binary(const EvolutionSpec& spec, double t) {
  const BinaryOutcome o = binary_outcome(spec, t);
  const double spread = o.p * o.q;
  if (spread < spec.tolerances().degeneracy) return std::nullopt;
  return o.p_dot * o.p_dot / spread;
}

double qfi_bures_oracle(const DensityMatrix& rho, const HermitianOperator& h, double dt) {
  if (!(dt >= 1e-5 && dt <= 1e-2)) {
    throw ValidationError("dt", "Bures oracle step must lie in [1e-5, 1e-2], got " +
                                    std::to_string(dt));
  }
  const EvolutionSpec spec(rho, h);
  const double f = fidelity(rho, evolve(spec, dt));
  return 8.0 * (1.0 - f) / (dt * dt);
}

}  // namespace qspeed
