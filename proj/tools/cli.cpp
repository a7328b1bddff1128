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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qspeed/bounds.hpp"
#include "qspeed/dynamics.hpp"
#include "qspeed/fisher.hpp"
#include "qspeed/scenarios.hpp"

namespace qspeed::cli {

namespace {

struct ScenarioSource {
  std::string scenario_path;
  std::string builtin;
  double tol_rank = Tolerances{}.rank;

  Tolerances tolerances() const {
    Tolerances tol;
    tol.rank = tol_rank;
    return tol;
  }
};

void add_source_options(CLI::App* cmd, ScenarioSource& src) {
  auto* file = cmd->add_option("--scenario", src.scenario_path, "Scenario JSON file");
  auto* builtin = cmd->add_option("--builtin", src.builtin,
                                  "Builtin scenario: fig1, fig2, plus_z, commuting");
  file->excludes(builtin);
  cmd->add_option("--tol-rank", src.tol_rank,
                  "Eigenvalue threshold for the range of rho (default 1e-10)");
}

Scenario resolve(const ScenarioSource& src) {
  const Tolerances tol = src.tolerances();
  if (!src.scenario_path.empty()) return load_scenario(src.scenario_path, tol);
  if (src.builtin.empty()) {
    throw ValidationError("scenario", "one of --scenario or --builtin is required");
  }
  Scenario s = builtin_scenario(src.builtin);
  // rebuild so a --tol-rank override reaches the range projector
  s.rho0 = DensityMatrix(s.rho0.matrix(), tol);
  return s;
}

std::string number(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  return buffer;
}

std::string cell(const std::optional<double>& v) { return v ? number(*v) : std::string(); }

std::string passage(double bound) {
  return std::isfinite(bound) ? number(bound) : std::string("unbounded");
}

void write_csv(const EvolutionTrace& trace, std::ostream& os) {
  os << "t,P,T,E,D,mt_bound,fisher_bound,gen_lower,gen_upper,in_mt_window,"
        "in_fisher_window\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    os << number(trace.times[i]) << ','
       << (trace.survival_P ? number((*trace.survival_P)[i]) : std::string()) << ','
       << number(trace.survival_T[i]) << ',' << number(trace.survival_E[i]) << ','
       << number(trace.survival_D[i]) << ',' << cell(trace.bound_mt[i]) << ','
       << cell(trace.bound_fisher[i]) << ',' << cell(trace.gen_lower[i]) << ','
       << cell(trace.gen_upper[i]) << ',' << (trace.in_mt_window[i] ? 1 : 0) << ','
       << (trace.in_fisher_window[i] ? 1 : 0) << '\n';
  }
}

void print_theta(std::ostream& out, const EvolutionSpec& spec, double t_max, int steps) {
  for (const Survival which : {Survival::kT, Survival::kE, Survival::kD}) {
    const std::optional<double> root = empirical_theta_perp(spec, which, t_max, steps);
    out << "empirical_theta_perp_" << to_string(which) << '='
        << (root ? number(*root) : std::string("none in range")) << '\n';
  }
}

// ---------------------------------------------------------------------------

struct TraceOptions {
  ScenarioSource source;
  std::optional<double> t_max;
  int steps = 400;
  std::string out_path;
  std::string format = "csv";
};

int cmd_trace(const TraceOptions& opt, std::ostream& out) {
  if (opt.format != "csv") {
    throw ValidationError("format", "unsupported output format '" + opt.format + "'");
  }
  const Scenario scenario = resolve(opt.source);
  const EvolutionSpec spec = scenario.spec(opt.source.tolerances());
  const FisherResult fisher = quantum_fisher(spec.rho0(), spec.h(), spec.tolerances());

  double t_max = 0.0;
  if (opt.t_max) {
    t_max = *opt.t_max;
  } else if (fisher.qfi > 0.0) {
    t_max = std::numbers::pi / std::sqrt(fisher.qfi);
  } else {
    throw ValidationError("t_max", "Fisher information is zero; pass --t-max explicitly");
  }

  const EvolutionTrace trace = trace_evolution(spec, t_max, opt.steps);
  if (opt.out_path.empty() || opt.out_path == "-") {
    write_csv(trace, out);
    return kExitOk;
  }

  std::ostringstream csv;
  write_csv(trace, csv);
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw IoError("cannot write " + opt.out_path);
  file << csv.str();
  if (!file) throw IoError("write failed for " + opt.out_path);

  const ThetaPerpBounds theta = theta_perp_bounds(trace.std_dev, trace.qfi);
  out << "scenario=" << scenario.name << '\n'
      << "dim=" << spec.dim() << '\n'
      << "delta_h=" << number(trace.std_dev) << '\n'
      << "qfi=" << number(trace.qfi) << '\n'
      << "variance_bound=" << number(fisher.variance_bound) << '\n'
      << "theta_perp_mt=" << passage(theta.mt) << '\n'
      << "theta_perp_fisher=" << passage(theta.fisher) << '\n';
  print_theta(out, spec, t_max, opt.steps);
  out << "rows=" << trace.size() << '\n' << "csv=" << opt.out_path << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct WitnessOptions {
  ScenarioSource source;
  std::string state;
  int n = 0;
  std::string axis = "z";
  double coeff = 0.5;
};

int cmd_witness(const WitnessOptions& opt, std::ostream& out) {
  std::optional<DensityMatrix> rho;
  std::optional<LocalHamiltonian> local;
  if (!opt.state.empty()) {
    if (!opt.source.scenario_path.empty() || !opt.source.builtin.empty()) {
      throw ValidationError("arguments", "--state cannot be combined with a scenario");
    }
    rho = build_named_state(parse_named_state(opt.state), opt.n);
    local = build_collective_spin(opt.n, parse_axis(opt.axis), opt.coeff);
  } else {
    Scenario s = resolve(opt.source);
    if (!s.local) {
      throw ValidationError("metadata",
                            "scenario hamiltonian is not a sum of single-qubit terms");
    }
    rho = std::move(s.rho0);
    local = std::move(s.local);
  }

  const WitnessReport r = entanglement_witness(*rho, *local, opt.source.tolerances());
  out << "n_qubits=" << r.n_qubits << '\n'
      << "epsilon=" << number(r.epsilon) << '\n'
      << "qfi_normalized=" << number(r.qfi_normalized) << '\n'
      << "threshold=" << r.n_qubits << '\n'
      << "entangled=" << (r.entangled ? "true" : "false") << '\n';
  for (const auto& [k, bound] : r.ladder) {
    out << "ladder k=" << k << " s=" << r.n_qubits / k << " bound=" << bound << '\n';
  }
  out << "theta_bound=" << number(r.theta_bound) << '\n' << "min_k=" << r.min_k << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BoundsOptions {
  ScenarioSource source;
  std::optional<double> t_max;
  int steps = 2000;
};

int cmd_bounds(const BoundsOptions& opt, std::ostream& out) {
  const Scenario scenario = resolve(opt.source);
  const EvolutionSpec spec = scenario.spec(opt.source.tolerances());
  const FisherResult fisher = quantum_fisher(spec.rho0(), spec.h(), spec.tolerances());
  const double dh = std_dev(spec.h(), spec.rho0());
  const ThetaPerpBounds theta = theta_perp_bounds(dh, fisher.qfi);

  out << "scenario=" << scenario.name << '\n'
      << "delta_h=" << number(dh) << '\n'
      << "qfi=" << number(fisher.qfi) << '\n'
      << "variance_gap=" << number(fisher.variance_bound - fisher.qfi) << '\n'
      << "theta_perp_mt=" << passage(theta.mt) << '\n';
  if (std::isfinite(theta.fisher)) {
    out << "theta_perp_fisher=" << number(theta.fisher) << '\n';
    if (std::isfinite(theta.mt)) {
      out << "theta_perp_gap=" << number(theta.fisher - theta.mt) << '\n';
    }
  } else {
    out << "theta_perp_fisher=unbounded (no finite passage time)\n";
  }

  double t_max = 10.0;
  if (opt.t_max) {
    t_max = *opt.t_max;
  } else if (std::isfinite(theta.fisher)) {
    t_max = 4.0 * theta.fisher;
  } else if (std::isfinite(theta.mt)) {
    t_max = 4.0 * theta.mt;
  }
  out << "scan_t_max=" << number(t_max) << '\n';
  print_theta(out, spec, t_max, opt.steps);

  if (spec.has_default_projector()) {
    const double window = std::isfinite(theta.fisher) ? theta.fisher : t_max;
    const std::vector<double> grid = uniform_grid(window, opt.steps);
    out << "dichotomy=" << to_string(dichotomy_check(spec, grid)) << '\n';
  } else {
    out << "dichotomy=n/a (custom projector)\n";
  }
  return kExitOk;
}

int cmd_validate(const ScenarioSource& src, std::ostream& out) {
  const Scenario s = resolve(src);
  out << "valid scenario=" << s.name << " dim=" << s.rho0.dim()
      << " rank=" << s.rho0.rank() << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "qspeed: quantum speed limits for unitary evolution of mixed states.\n"
      "Units: hbar = 1, so times are in units of 1/[H]."};
  app.require_subcommand(1);

  TraceOptions trace;
  auto* trace_cmd = app.add_subcommand("trace", "Sample survival probabilities and bounds as CSV");
  add_source_options(trace_cmd, trace.source);
  trace_cmd->add_option("--t-max", trace.t_max, "End of the time grid (default pi/sqrt(F))");
  trace_cmd->add_option("--steps", trace.steps, "Number of grid points (>= 2)");
  trace_cmd->add_option("--out", trace.out_path, "CSV output file (default stdout)");
  trace_cmd->add_option("--format", trace.format, "Output format (csv)");

  WitnessOptions witness;
  auto* witness_cmd = app.add_subcommand("witness", "Fisher entanglement witness and k-producibility");
  add_source_options(witness_cmd, witness.source);
  witness_cmd->add_option("--state", witness.state, "ghz, product_plus or computational");
  witness_cmd->add_option("--n", witness.n, "Number of qubits for --state");
  witness_cmd->add_option("--axis", witness.axis, "Collective spin axis (default z)");
  witness_cmd->add_option("--coeff", witness.coeff, "Coefficient per Pauli term (default 0.5)");

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Orthogonalisation-time bounds and dichotomy");
  add_source_options(bounds_cmd, bounds.source);
  bounds_cmd->add_option("--t-max", bounds.t_max, "End of the root scan (default 4 pi/sqrt(F))");
  bounds_cmd->add_option("--steps", bounds.steps, "Grid points for the scan");

  ScenarioSource validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check a scenario file");
  add_source_options(validate_cmd, validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*trace_cmd) return cmd_trace(trace, out);
    if (*witness_cmd) return cmd_witness(witness, out);
    if (*bounds_cmd) return cmd_bounds(bounds, out);
    if (*validate_cmd) return cmd_validate(validate, out);
  } catch (const ValidationError& e) {
    err << "validation error [" << e.invariant() << "]: " << e.what() << '\n';
    return kExitValidation;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitValidation;
}

}  // namespace qspeed::cli
