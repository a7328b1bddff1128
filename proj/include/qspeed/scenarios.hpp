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

// Standard states, Hamiltonians and the worked examples, plus the JSON
// scenario file format (format version 1).
//
// Basis convention: |0> = (1, 0) and qubit 0 is the most significant tensor
// factor, so |01> is basis index 1.

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qspeed/dynamics.hpp"
#include "qspeed/local_hamiltonian.hpp"
#include "qspeed/matrix.hpp"
#include "qspeed/states.hpp"

namespace qspeed {

struct Scenario {
  std::string name;
  DensityMatrix rho0;
  HermitianOperator h;
  /// set when h is a sum of single-qubit terms
  std::optional<LocalHamiltonian> local;
  std::optional<Projector> projector;
  std::map<std::string, double> params;

  EvolutionSpec spec(const Tolerances& tol = {}) const;
};

enum class Axis { kX, kY, kZ };
enum class NamedState { kGhz, kProductPlus, kComputational };

Axis parse_axis(const std::string& s);
std::string to_string(Axis a);
NamedState parse_named_state(const std::string& s);

/// rho = (1-x)|00><00| + x|psi+><psi+|, H = (Omega/2)(sx(1) + sx(2)).
Scenario build_two_qubit_example(double x, double omega);

/// rho = (1-x)|0><0| + x|1><1|, H = Omega sx / 2, Pi = |0><0|.
Scenario build_one_qubit_example(double x, double omega);

/// coeff * sum_i sigma_axis^(i) on n qubits; epsilon = |coeff|.
LocalHamiltonian build_collective_spin(int n, Axis axis, double coeff);

/// ghz = (|0..0> + |1..1>)/sqrt(2), product_plus = |+>^n, computational = |0..0>.
DensityMatrix build_named_state(NamedState name, int n);

/// "fig1", "fig2", "plus_z" (|+> under sz) or "commuting" (|0> under sz).
Scenario builtin_scenario(const std::string& name);
std::vector<std::string> builtin_scenario_names();

/// Raised for unreadable or unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a scenario document. Syntax and schema problems raise
/// ValidationError("parse" / "field") with line or field diagnostics;
/// violated state invariants keep their own invariant name.
Scenario scenario_from_json(const std::string& text, const Tolerances& tol = {});
std::string scenario_to_json(const Scenario& s);

Scenario load_scenario(const std::filesystem::path& path, const Tolerances& tol = {});
void save_scenario(const Scenario& s, const std::filesystem::path& path);

}  // namespace qspeed
