// Copyright 2026 The concur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "concur/cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "concur/cavity.hpp"
#include "concur/errors.hpp"
#include "concur/estimation.hpp"
#include "concur/kinematics.hpp"
#include "concur/protocol.hpp"

namespace concur::cli {

namespace {

using json = nlohmann::json;

constexpr double kRowTolerance = 1e-10;

std::string num(double x) { return fmt::format("{:.17g}", x); }

std::string order_string(const AtomOrder& o) {
  return fmt::format("{{{},{},{},{}}}", o[0], o[1], o[2], o[3]);
}

struct StateOptions {
  std::string path;
  bool normalize = false;
};

PureState load_with_flag(const StateOptions& opts) {
  return load_state_file(opts.path, opts.normalize);
}

struct RowResult {
  std::string line;
  double deviation;
  double residual;
};

RowResult sweep_row(std::uint64_t row_seed) {
  Rng rng(row_seed);
  const PureState psi = haar_random_state(rng);
  const ProtocolResult r = run_circuit(psi);
  const double analytic = concurrence_pure(psi);
  std::string line = std::to_string(row_seed);
  for (const auto& c : psi.coefficients()) {
    line += ',' + num(c.real()) + ',' + num(c.imag());
  }
  line += fmt::format(",{},{},{},{},{}", num(analytic), num(r.p_gggg), num(r.p_egeg),
                      num(r.concurrence_measured), num(r.oracle_residual));
  return {std::move(line), std::abs(r.concurrence_measured - analytic), r.oracle_residual};
}

int cmd_run(const StateOptions& opts, std::ostream& out) {
  const PureState psi = load_with_flag(opts);
  const ProtocolResult r = run_circuit(psi);
  const double analytic = concurrence_pure(psi);
  out << "C_analytic      = " << num(analytic) << '\n'
      << "P_gggg          = " << num(r.p_gggg) << '\n'
      << "P_egeg          = " << num(r.p_egeg) << '\n'
      << "C_measured      = " << num(r.concurrence_measured) << '\n'
      << "oracle_residual = " << num(r.oracle_residual) << '\n';
  if (std::abs(r.concurrence_measured - analytic) > kRowTolerance || !verify_egeg_variant(r)) {
    throw InvariantError("measured concurrence disagrees with the coefficient formula");
  }
  return kOk;
}

int cmd_sweep(std::uint64_t n_states, std::uint64_t seed, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  if (n_states == 0) throw std::invalid_argument("n_states must be at least 1");
  SweepSummary summary{};
  if (out_path.empty()) {
    summary = write_sweep(n_states, seed, out);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
    summary = write_sweep(n_states, seed, file);
    file.flush();
    if (!file) throw std::invalid_argument("failed writing '" + out_path + "'");
  }
  std::ostream& report = out_path.empty() ? err : out;
  report << "states = " << n_states << '\n'
         << "max |C_measured - C_analytic| = " << num(summary.max_concurrence_deviation) << '\n'
         << "max oracle_residual = " << num(summary.max_oracle_residual) << '\n';
  if (summary.max_concurrence_deviation > kRowTolerance) {
    throw InvariantError("a sweep row violates the concurrence identity");
  }
  return kOk;
}

int cmd_shots(const StateOptions& opts, std::uint64_t n_shots, std::uint64_t seed,
              const ReadoutModel& model, std::ostream& out) {
  if (n_shots == 0) throw std::invalid_argument("--shots must be at least 1");
  model.validate();
  const PureState psi = load_with_flag(opts);
  const ShotSummary s = simulate_shots(psi, n_shots, model, seed);
  out << "n_shots           = " << s.n_shots << '\n'
      << "n_no_fluorescence = " << s.n_no_fluorescence << '\n'
      << "p_hat             = " << num(s.p_hat) << '\n'
      << "c_hat             = " << num(s.c_hat) << '\n'
      << "ci95_low          = " << num(s.ci_low) << '\n'
      << "ci95_high         = " << num(s.ci_high) << '\n'
      << "C_analytic        = " << num(concurrence_pure(psi)) << '\n';
  return kOk;
}

int cmd_cavity_state(const StateOptions& opts, std::ostream& out) {
  const PureState psi = load_with_flag(opts);
  const ProtocolResult ideal = run_circuit(psi);
  const ProtocolResult cavity = run_cavity_realization(psi);
  const double deviation = std::abs(ideal.p_gggg - cavity.p_gggg);
  const double cnot_error =
      max_aligned_difference(compose_steps(decomposed_cnot()), concur::cnot());
  out << "P_gggg_ideal    = " << num(ideal.p_gggg) << '\n'
      << "P_gggg_cavity   = " << num(cavity.p_gggg) << '\n'
      << "deviation       = " << num(deviation) << '\n'
      << "C_cavity        = " << num(cavity.concurrence_measured) << '\n'
      << "cnot_decomposition_error = " << num(cnot_error) << '\n';
  return kOk;
}

struct Geometry {
  double v = 0, w = 0, x_c = 0, x_d = 0, l_c = 0, l_d = 0;
};

int cmd_cavity_kinematics(const Geometry& g, std::ostream& out) {
  const DelaySolution sol = solve_delays(g.v, g.w, g.x_c, g.x_d, g.l_c, g.l_d);
  if (!sol.feasible()) {
    out << "feasible = false\n"
        << "binding_constraint = " << sol.binding_constraint << '\n';
    return kInfeasible;
  }
  const FlightConfig& cfg = *sol.config;
  const OrderingReport& rep = *sol.report;
  out << "tau             = " << num(cfg.tau) << " s\n"
      << "tau_prime       = " << num(cfg.tau_prime) << " s\n"
      << "order_before_C  = " << order_string(rep.order_before_c) << '\n'
      << "order_after_C   = " << order_string(rep.order_after_c) << '\n'
      << "order_at_D      = " << order_string(rep.order_at_d) << '\n'
      << "pair12_cross_x  = " << num(rep.pair12_cross_position) << " m\n"
      << "pair34_cross_x  = " << num(rep.pair34_cross_position) << " m\n"
      << "swap14_x        = " << num(rep.swap14_position) << " m\n"
      << "photon_hold     = " << num(rep.photon_hold_time) << " s\n"
      << "feasible        = " << (rep.feasible ? "true" : "false") << '\n';
  return kOk;
}

constexpr const char* kFooter =
    "Exit codes: 0 success, 1 input error, 2 internal invariant violation, "
    "3 infeasible kinematics.\n"
    "State files: {\"amplitudes\": [[re,im],[re,im],[re,im],[re,im]], \"normalize\": false} "
    "ordered |gg>, |ge>, |eg>, |ee>.";

}  // namespace

PureState parse_state_json(std::string_view text, bool force_normalize) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("state file: top level must be an object");
  if (!doc.contains("amplitudes")) throw std::invalid_argument("state file: missing 'amplitudes'");
  const json& amps = doc.at("amplitudes");
  if (!amps.is_array() || amps.size() != 4) {
    throw std::invalid_argument("state file: 'amplitudes' must be an array of 4 [re, im] pairs");
  }
  bool normalize = force_normalize;
  if (doc.contains("normalize")) {
    if (!doc.at("normalize").is_boolean()) {
      throw std::invalid_argument("state file: 'normalize' must be a boolean");
    }
    normalize = normalize || doc.at("normalize").get<bool>();
  }
  PureState::Coefficients c;
  for (std::size_t i = 0; i < 4; ++i) {
    const json& pair = amps[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw std::invalid_argument(
          fmt::format("state file: 'amplitudes[{}]' must be a [re, im] number pair", i));
    }
    c[i] = {pair[0].get<double>(), pair[1].get<double>()};
  }
  try {
    return PureState(c, normalize);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("state file: 'amplitudes': ") + e.what());
  }
}

PureState load_state_file(const std::string& path, bool force_normalize) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read state file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str(), force_normalize);
}

SweepSummary write_sweep(std::uint64_t n_states, std::uint64_t seed, std::ostream& out,
                         unsigned workers) {
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_states));

  std::vector<RowResult> rows(n_states);
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t i = w; i < n_states; i += workers) {
            rows[i] = sweep_row(derive_seed(seed, i));
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  SweepSummary summary{0.0, 0.0};
  out << kSweepHeader << '\n';
  for (const auto& row : rows) {
    out << row.line << '\n';
    summary.max_concurrence_deviation = std::max(summary.max_concurrence_deviation, row.deviation);
    summary.max_oracle_residual = std::max(summary.max_oracle_residual, row.residual);
  }
  return summary;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulates direct concurrence measurement of a two-qubit pure state from two "
               "copies.",
               "concur"};
  app.footer(kFooter);
  app.require_subcommand(1);

  StateOptions state;
  std::uint64_t seed = 1;
  std::uint64_t n_states = 0;
  std::uint64_t n_shots = 1000000;
  std::string out_path;
  ReadoutModel readout;
  bool kinematics = false;
  Geometry geo;

  auto add_state = [&state](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("state_file", state.path, "JSON state file");
    if (required) opt->required();
    cmd->add_flag("--normalize", state.normalize, "Rescale the amplitudes to unit norm");
  };

  auto* run_cmd = app.add_subcommand("run", "Run the four-qubit circuit on one state");
  add_state(run_cmd, true);

  auto* sweep_cmd = app.add_subcommand("sweep", "Run the circuit on Haar-random states");
  sweep_cmd->add_option("n_states", n_states, "Number of states")->required();
  sweep_cmd->add_option("--seed", seed, "Master seed");
  sweep_cmd->add_option("--out", out_path, "CSV output path (stdout when omitted)");
  sweep_cmd->footer(fmt::format("CSV columns: {}", kSweepHeader));

  auto* shots_cmd = app.add_subcommand("shots", "Finite-shot global shelving readout");
  add_state(shots_cmd, true);
  shots_cmd->add_option("--shots", n_shots, "Number of shots");
  shots_cmd->add_option("--seed", seed, "RNG seed");
  shots_cmd->add_option("--p-dark", readout.p_dark, "Per-ion missed-fluorescence probability");
  shots_cmd->add_option("--p-bright-false", readout.p_bright_false,
                        "False fluorescence probability for an all-ground register");

  auto* cavity_cmd =
      app.add_subcommand("cavity", "Cavity-QED realization or atom-flight kinematics");
  add_state(cavity_cmd, false);
  cavity_cmd->add_flag("--kinematics", kinematics, "Solve emission delays instead");
  cavity_cmd->add_option("--v", geo.v, "Slow atom speed (m/s)");
  cavity_cmd->add_option("--w", geo.w, "Fast atom speed (m/s)");
  cavity_cmd->add_option("--xc", geo.x_c, "Cavity C center (m)");
  cavity_cmd->add_option("--xd", geo.x_d, "Cavity D center (m)");
  cavity_cmd->add_option("--lc", geo.l_c, "Cavity C length (m)");
  cavity_cmd->add_option("--ld", geo.l_d, "Cavity D length (m)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(state, out);
    if (sweep_cmd->parsed()) return cmd_sweep(n_states, seed, out_path, out, err);
    if (shots_cmd->parsed()) return cmd_shots(state, n_shots, seed, readout, out);
    if (kinematics) return cmd_cavity_kinematics(geo, out);
    if (state.path.empty()) {
      throw std::invalid_argument("cavity needs a state file or --kinematics");
    }
    return cmd_cavity_state(state, out);
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace concur::cli
