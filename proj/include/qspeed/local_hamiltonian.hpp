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

#include <vector>

#include "qspeed/matrix.hpp"

namespace qspeed {

/// A single-qubit Hermitian term acting on `site` (site 0 is the most
/// significant tensor factor).
struct LocalTerm {
  int site = 0;
  ComplexMatrix matrix;
};

/// H = sum of single-qubit terms on N qubits. epsilon is the largest
/// operator norm among the terms and must be positive.
class LocalHamiltonian {
 public:
  LocalHamiltonian(int n_qubits, std::vector<LocalTerm> terms,
                   const Tolerances& tol = {});

  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  int n_qubits() const { return n_qubits_; }
  double epsilon() const { return epsilon_; }
  const std::vector<LocalTerm>& terms() const { return terms_; }

 private:
  int n_qubits_;
  std::vector<LocalTerm> terms_;
  double epsilon_;
  HermitianOperator op_;
};

/// Embeds a single-qubit operator at `site` of an n-qubit register.
ComplexMatrix embed_single_qubit(const ComplexMatrix& term, int site, int n_qubits);

inline constexpr int kMaxQubits = 10;

}  // namespace qspeed
