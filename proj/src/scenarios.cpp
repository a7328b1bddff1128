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

#include "qspeed/scenarios.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qspeed {

using nlohmann::json;

// ---------------------------------------------------------------------------
// local Hamiltonians

ComplexMatrix embed_single_qubit(const ComplexMatrix& term, int site, int n_qubits) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int q = 0; q < n_qubits; ++q) {
    out = kron(out, q == site ? term : pauli::identity());
  }
  return out;
}

namespace {

int checked_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("dimension", "qubit count " + std::to_string(n) +
                                           " outside [1, " + std::to_string(kMaxQubits) +
                                           "]");
  }
  return n;
}

ComplexMatrix assemble(int n_qubits, const std::vector<LocalTerm>& terms,
                       const Tolerances& tol) {
  const Eigen::Index dim = Eigen::Index{1} << checked_qubits(n_qubits);
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (const LocalTerm& term : terms) {
    if (term.site < 0 || term.site >= n_qubits) {
      throw ValidationError("site", "local term site " + std::to_string(term.site) +
                                        " outside register of " +
                                        std::to_string(n_qubits));
    }
    if (term.matrix.rows() != 2 || term.matrix.cols() != 2) {
      throw ValidationError("dimension", "local terms must be 2x2");
    }
    check_square_finite(term.matrix);
    if (!is_hermitian(term.matrix, tol)) {
      throw ValidationError("hermiticity", "local term on site " +
                                               std::to_string(term.site) +
                                               " is not Hermitian");
    }
    h += embed_single_qubit(term.matrix, term.site, n_qubits);
  }
  return h;
}

double max_term_norm(const std::vector<LocalTerm>& terms, const Tolerances& tol) {
  double eps = 0.0;
  for (const LocalTerm& term : terms) {
    eps = std::max(eps, hermitian_eig(term.matrix, tol).eigenvalues.cwiseAbs().maxCoeff());
  }
  if (!(eps > 0.0)) {
    throw ValidationError("epsilon", "local Hamiltonian needs a non-zero term");
  }
  return eps;
}

}  // namespace

LocalHamiltonian::LocalHamiltonian(int n_qubits, std::vector<LocalTerm> terms,
                                   const Tolerances& tol)
    : n_qubits_(n_qubits),
      terms_(std::move(terms)),
      epsilon_(0.0),
      op_(assemble(n_qubits_, terms_, tol), tol) {
  epsilon_ = max_term_norm(terms_, tol);
}

// ---------------------------------------------------------------------------
// builders

EvolutionSpec Scenario::spec(const Tolerances& tol) const {
  return EvolutionSpec(rho0, h, projector, tol);
}

Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::kX;
  if (s == "y") return Axis::kY;
  if (s == "z") return Axis::kZ;
  throw ValidationError("axis", "unknown axis '" + s + "', expected x, y or z");
}

std::string to_string(Axis a) {
  switch (a) {
    case Axis::kX:
      return "x";
    case Axis::kY:
      return "y";
    case Axis::kZ:
      return "z";
  }
  return "?";
}

NamedState parse_named_state(const std::string& s) {
  if (s == "ghz") return NamedState::kGhz;
  if (s == "product_plus") return NamedState::kProductPlus;
  if (s == "computational") return NamedState::kComputational;
  throw ValidationError("state", "unknown state '" + s +
                                     "', expected ghz, product_plus or computational");
}

namespace {

void check_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError("parameter", std::string(name) + " = " + std::to_string(x) +
                                           " outside [0, 1]");
  }
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError("parameter", std::string(name) + " must be positive");
  }
}

ComplexVector basis_vector(Eigen::Index dim, Eigen::Index index) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

}  // namespace

LocalHamiltonian build_collective_spin(int n, Axis axis, double coeff) {
  checked_qubits(n);
  ComplexMatrix single;
  switch (axis) {
    case Axis::kX:
      single = pauli::x();
      break;
    case Axis::kY:
      single = pauli::y();
      break;
    case Axis::kZ:
      single = pauli::z();
      break;
  }
  std::vector<LocalTerm> terms;
  for (int site = 0; site < n; ++site) terms.push_back({site, coeff * single});
  return LocalHamiltonian(n, std::move(terms));
}

DensityMatrix build_named_state(NamedState name, int n) {
  const Eigen::Index dim = Eigen::Index{1} << checked_qubits(n);
  switch (name) {
    case NamedState::kGhz: {
      ComplexVector v = ComplexVector::Zero(dim);
      v(0) = 1.0;
      v(dim - 1) = 1.0;
      return pure_state(v);
    }
    case NamedState::kProductPlus:
      return pure_state(ComplexVector::Ones(dim));
    case NamedState::kComputational:
      return pure_state(basis_vector(dim, 0));
  }
  throw ValidationError("state", "unknown named state");
}

Scenario build_two_qubit_example(double x, double omega) {
  check_unit_interval(x, "x");
  check_positive(omega, "omega");
  const DensityMatrix zero_zero = pure_state(basis_vector(4, 0));
  ComplexVector psi_plus = ComplexVector::Zero(4);
  psi_plus(1) = 1.0;  // |01>
  psi_plus(2) = 1.0;  // |10>
  DensityMatrix rho = mix({{1.0 - x, zero_zero}, {x, pure_state(psi_plus)}});
  LocalHamiltonian local = build_collective_spin(2, Axis::kX, omega / 2.0);
  HermitianOperator h = local.op();
  return Scenario{"two_qubit",        std::move(rho), std::move(h), std::move(local),
                  std::nullopt,       {{"x", x}, {"omega", omega}}};
}

Scenario build_one_qubit_example(double x, double omega) {
  check_unit_interval(x, "x");
  check_positive(omega, "omega");
  DensityMatrix rho = mix({{1.0 - x, pure_state(basis_vector(2, 0))},
                           {x, pure_state(basis_vector(2, 1))}});
  LocalHamiltonian local = build_collective_spin(1, Axis::kX, omega / 2.0);
  HermitianOperator h = local.op();
  ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  return Scenario{"one_qubit",     std::move(rho), std::move(h), std::move(local),
                  Projector(zero), {{"x", x}, {"omega", omega}}};
}

Scenario builtin_scenario(const std::string& name) {
  if (name == "fig1") {
    Scenario s = build_two_qubit_example(std::sqrt(2.0) - 1.0, 1.0);
    s.name = "fig1";
    return s;
  }
  if (name == "fig2") {
    Scenario s = build_one_qubit_example(0.75, 1.0);
    s.name = "fig2";
    return s;
  }
  if (name == "plus_z" || name == "commuting") {
    LocalHamiltonian local = build_collective_spin(1, Axis::kZ, 1.0);
    HermitianOperator h = local.op();
    DensityMatrix rho = build_named_state(
        name == "plus_z" ? NamedState::kProductPlus : NamedState::kComputational, 1);
    return Scenario{name, std::move(rho), std::move(h), std::move(local), std::nullopt, {}};
  }
  throw ValidationError("scenario", "unknown builtin scenario '" + name + "'");
}

std::vector<std::string> builtin_scenario_names() {
  return {"fig1", "fig2", "plus_z", "commuting"};
}

// ---------------------------------------------------------------------------
// JSON format

namespace {

constexpr int kFormatVersion = 1;

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw ValidationError("field", path + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) field_error(path, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) field_error(path, "expected an integer");
  return j.get<int>();
}

Complex complex_entry(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) field_error(path, "expected [re, im] pair");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

ComplexVector read_vector(const json& j, Eigen::Index dim, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array");
  if (static_cast<Eigen::Index>(j.size()) != dim) {
    field_error(path, "expected " + std::to_string(dim) + " entries, got " +
                          std::to_string(j.size()));
  }
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = complex_entry(j[static_cast<std::size_t>(i)],
                         path + "[" + std::to_string(i) + "]");
  }
  return v;
}

ComplexMatrix read_matrix(const json& j, Eigen::Index dim, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of rows");
  if (static_cast<Eigen::Index>(j.size()) != dim) {
    field_error(path, "expected " + std::to_string(dim) + " rows, got " +
                          std::to_string(j.size()));
  }
  ComplexMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    m.row(r) = read_vector(j[static_cast<std::size_t>(r)], dim,
                           path + "[" + std::to_string(r) + "]")
                   .transpose();
  }
  return m;
}

json write_matrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Re-raises invariant violations with the JSON location prefixed.
template <typename F>
auto at_field(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const ValidationError& e) {
    if (e.invariant() == "field") throw;
    throw ValidationError(e.invariant(), path + ": " + e.what());
  }
}

DensityMatrix read_rho(const json& j, Eigen::Index dim, const Tolerances& tol) {
  if (!j.is_object()) field_error("rho", "expected an object");
  if (j.contains("dense")) {
    const ComplexMatrix m = read_matrix(j["dense"], dim, "rho.dense");
    return at_field("rho", [&] { return DensityMatrix(m, tol); });
  }
  if (j.contains("mixture")) {
    const json& parts = j["mixture"];
    if (!parts.is_array() || parts.empty()) {
      field_error("rho.mixture", "expected a non-empty array");
    }
    std::vector<std::pair<double, DensityMatrix>> pairs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::string path = "rho.mixture[" + std::to_string(i) + "]";
      const double w = number(require(parts[i], "weight", path), path + ".weight");
      if (parts[i].contains("state")) {
        const ComplexVector v = read_vector(parts[i]["state"], dim, path + ".state");
        pairs.emplace_back(w, at_field(path, [&] { return pure_state(v, tol); }));
      } else if (parts[i].contains("dense")) {
        const ComplexMatrix m = read_matrix(parts[i]["dense"], dim, path + ".dense");
        pairs.emplace_back(w, at_field(path, [&] { return DensityMatrix(m, tol); }));
      } else {
        field_error(path, "expected 'state' or 'dense'");
      }
    }
    return at_field("rho", [&] { return mix(pairs, tol); });
  }
  field_error("rho", "expected 'dense' or 'mixture'");
}

struct ReadHamiltonian {
  HermitianOperator h;
  std::optional<LocalHamiltonian> local;
};

ReadHamiltonian read_hamiltonian(const json& j, Eigen::Index dim, const Tolerances& tol) {
  if (!j.is_object()) field_error("hamiltonian", "expected an object");
  std::optional<LocalHamiltonian> local;
  if (j.contains("dense")) {
    const ComplexMatrix m = read_matrix(j["dense"], dim, "hamiltonian.dense");
    return {at_field("hamiltonian", [&] { return HermitianOperator(m, tol); }),
            std::nullopt};
  }
  if (j.contains("builder")) {
    const json& b = j["builder"];
    if (!b.is_string() || b.get<std::string>() != "collective_spin") {
      field_error("hamiltonian.builder", "only 'collective_spin' is supported");
    }
    const int n = integer(require(j, "n_qubits", "hamiltonian"), "hamiltonian.n_qubits");
    const json& axis = require(j, "axis", "hamiltonian");
    if (!axis.is_string()) field_error("hamiltonian.axis", "expected a string");
    const double coeff = number(require(j, "coeff", "hamiltonian"), "hamiltonian.coeff");
    local = at_field("hamiltonian", [&] {
      return build_collective_spin(n, parse_axis(axis.get<std::string>()), coeff);
    });
  } else if (j.contains("local_terms")) {
    const int n = integer(require(j, "n_qubits", "hamiltonian"), "hamiltonian.n_qubits");
    const json& list = j["local_terms"];
    if (!list.is_array()) field_error("hamiltonian.local_terms", "expected an array");
    std::vector<LocalTerm> terms;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "hamiltonian.local_terms[" + std::to_string(i) + "]";
      terms.push_back({integer(require(list[i], "site", path), path + ".site"),
                       read_matrix(require(list[i], "matrix", path), 2, path + ".matrix")});
    }
    local = at_field("hamiltonian",
                     [&] { return LocalHamiltonian(n, std::move(terms), tol); });
  } else {
    field_error("hamiltonian", "expected 'dense', 'builder' or 'local_terms'");
  }
  if (local->op().dim() != dim) {
    throw ValidationError("dimension", "hamiltonian: local Hamiltonian has dimension " +
                                           std::to_string(local->op().dim()) +
                                           ", scenario dim is " + std::to_string(dim));
  }
  HermitianOperator h = local->op();
  return {std::move(h), std::move(local)};
}

std::string locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Scenario scenario_from_json(const std::string& text, const Tolerances& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("parse", locate(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) field_error("<root>", "expected an object");

  const int format = integer(require(doc, "format", ""), "format");
  if (format != kFormatVersion) {
    field_error("format", "unsupported format version " + std::to_string(format));
  }
  const json& name = require(doc, "name", "");
  if (!name.is_string()) field_error("name", "expected a string");
  const int dim = integer(require(doc, "dim", ""), "dim");
  if (dim < 1 || dim > kMaxDimension) {
    throw ValidationError("dimension", "dim: " + std::to_string(dim) + " outside [1, " +
                                           std::to_string(kMaxDimension) + "]");
  }

  DensityMatrix rho = read_rho(require(doc, "rho", ""), dim, tol);
  ReadHamiltonian h = read_hamiltonian(require(doc, "hamiltonian", ""), dim, tol);

  std::optional<Projector> projector;
  if (doc.contains("projector") && !doc["projector"].is_null()) {
    const ComplexMatrix m =
        read_matrix(require(doc["projector"], "dense", "projector"), dim, "projector.dense");
    projector = at_field("projector", [&] { return Projector(m, tol); });
  }

  std::map<std::string, double> params;
  if (doc.contains("params")) {
    const json& p = doc["params"];
    if (!p.is_object()) field_error("params", "expected an object");
    for (const auto& [key, value] : p.items()) params[key] = number(value, "params." + key);
  }

  return Scenario{name.get<std::string>(), std::move(rho),       std::move(h.h),
                  std::move(h.local),      std::move(projector), std::move(params)};
}

std::string scenario_to_json(const Scenario& s) {
  json doc;
  doc["format"] = kFormatVersion;
  doc["name"] = s.name;
  doc["dim"] = s.rho0.dim();
  doc["rho"] = {{"dense", write_matrix(s.rho0.matrix())}};
  if (s.local) {
    json terms = json::array();
    for (const LocalTerm& t : s.local->terms()) {
      terms.push_back({{"site", t.site}, {"matrix", write_matrix(t.matrix)}});
    }
    doc["hamiltonian"] = {{"n_qubits", s.local->n_qubits()}, {"local_terms", terms}};
  } else {
    doc["hamiltonian"] = {{"dense", write_matrix(s.h.matrix())}};
  }
  if (s.projector) doc["projector"] = {{"dense", write_matrix(s.projector->matrix())}};
  doc["params"] = json::object();
  for (const auto& [key, value] : s.params) doc["params"][key] = value;
  return doc.dump(2) + "\n";
}

Scenario load_scenario(const std::filesystem::path& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_json(buffer.str(), tol);
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write scenario file " + path.string());
  out << scenario_to_json(s);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace qspeed
