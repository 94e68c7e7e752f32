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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "concur/cavity.hpp"
#include "concur/concurrence.hpp"
#include "concur/estimation.hpp"
#include "concur/gates.hpp"
#include "concur/kinematics.hpp"
#include "concur/protocol.hpp"
#include "concur/rng.hpp"

namespace {

using namespace concur;

constexpr std::uint64_t kMasterSeed = 20260101;
constexpr int kStates = 1000;

std::vector<PureState> haar_states(int n, std::uint64_t stream) {
  Rng rng(derive_seed(kMasterSeed, stream));
  std::vector<PureState> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(haar_random_state(rng));
  return out;
}

struct Verdict {
  bool pass;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Verdict criterion1(const std::vector<PureState>& states) {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& psi : states) {
    const ProtocolResult r = run_circuit(psi);
    worst = std::max(worst, std::abs(2.0 * std::sqrt(2.0 * r.p_gggg) - concurrence_pure(psi)));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst < 1e-10 && secs < 5.0,
          "max |2 sqrt(2 P_gggg) - C| = " + sci(worst) + " (tol 1e-10), runtime " + sci(secs) +
              " s (limit 5 s)"};
}

Verdict criterion2(const std::vector<PureState>& states) {
  double worst = 0.0;
  for (const auto& psi : states) {
    const ProtocolResult r = run_circuit(psi);
    worst = std::max(worst, max_residual(r.final_state, analytic_phi1(psi)));
  }
  return {worst < 1e-12, "max amplitude residual = " + sci(worst) + " (tol 1e-12)"};
}

Verdict criterion3() {
  const double s = 1.0 / std::numbers::sqrt2;
  const ProtocolResult bell = run_circuit(PureState({0.0, s, s, 0.0}));
  const ProtocolResult flat = run_circuit(PureState({0.5, 0.5, 0.5, 0.5}));
  const bool ok = std::abs(bell.p_gggg - 0.125) < 1e-12 &&
                  std::abs(bell.concurrence_measured - 1.0) < 1e-12 && flat.p_gggg < 1e-24;
  return {ok, "Bell P_gggg = " + sci(bell.p_gggg) + ", C = " + sci(bell.concurrence_measured) +
                  "; uniform P_gggg = " + sci(flat.p_gggg) + " (tol 1e-24)"};
}

Verdict criterion4(const std::vector<PureState>& states) {
  double worst = 0.0;
  for (const auto& psi : states) {
    const ProtocolResult r = run_circuit(psi);
    worst = std::max(worst, std::abs(r.p_gggg - r.p_egeg));
  }
  const double s = 1.0 / std::numbers::sqrt2;
  for (const PureState& psi : {PureState({0.0, s, s, 0.0}), PureState({0.5, 0.5, 0.5, 0.5}),
                               PureState({1.0, 0.0, 0.0, 0.0})}) {
    const ProtocolResult r = run_circuit(psi);
    worst = std::max(worst, std::abs(r.p_gggg - r.p_egeg));
  }
  return {worst < 1e-12, "max |P_gggg - P_egeg| = " + sci(worst) + " (tol 1e-12)"};
}

Verdict criterion5(const std::vector<PureState>& states) {
  double worst = 0.0;
  for (const auto& psi : states) {
    worst = std::max(worst, std::abs(concurrence_wootters(DensityMatrix::from_pure(psi)) -
                                     concurrence_pure(psi)));
  }
  const double mixed = concurrence_wootters(DensityMatrix::maximally_mixed());
  return {worst < 1e-8 && mixed == 0.0,
          "max |C_wootters - C_pure| = " + sci(worst) + " (tol 1e-8); C(I/4) = " + sci(mixed)};
}

Verdict criterion6(const std::vector<PureState>& states) {
  const double cnot_error = max_aligned_difference(compose_steps(decomposed_cnot()), cnot());
  double worst = 0.0;
  for (std::size_t i = 0; i < 200; ++i) {
    const PureState& psi = states[i];
    worst = std::max(worst,
                     std::abs(run_cavity_realization(psi).p_gggg - run_circuit(psi).p_gggg));
  }
  return {cnot_error < 1e-12 && worst < 1e-10,
          "CNOT decomposition error = " + sci(cnot_error) + " (tol 1e-12); max cavity deviation = " +
              sci(worst) + " over 200 states (tol 1e-10)"};
}

std::string order_text(const AtomOrder& o) {
  return "{" + std::to_string(o[0]) + "," + std::to_string(o[1]) + "," + std::to_string(o[2]) +
         "," + std::to_string(o[3]) + "}";
}

Verdict criterion7() {
  constexpr AtomOrder before{4, 3, 2, 1};
  constexpr AtomOrder after{3, 4, 1, 2};
  constexpr AtomOrder at_d{3, 1, 4, 2};
  bool ok = true;
  std::string detail;
  for (double x_d : {0.6, 1.0}) {
    const DelaySolution sol = solve_delays(300.0, 500.0, 0.2, x_d, 0.02, 0.02);
    if (!sol.feasible()) {
      ok = false;
      detail += "x_D=" + sci(x_d) + " infeasible (" + sol.binding_constraint + "); ";
      continue;
    }
    const OrderingReport rep = kinematics_report(*sol.config);
    ok = ok && std::abs(sol.config->tau - 2.6667e-4) < 5e-9 && rep.feasible &&
         rep.order_before_c == before && rep.order_after_c == after && rep.order_at_d == at_d;
    detail += "x_D=" + sci(x_d) + ": tau = " + sci(sol.config->tau) + " s, " +
              order_text(rep.order_before_c) + " -> " + order_text(rep.order_after_c) + " -> " +
              order_text(rep.order_at_d) + ", feasible = " + (rep.feasible ? "true" : "false") +
              "; ";
  }
  bool rejected = false;
  try {
    solve_delays(500.0, 300.0, 0.2, 0.6, 0.02, 0.02);
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  bool rejected_equal = false;
  try {
    solve_delays(300.0, 300.0, 0.2, 0.6, 0.02, 0.02);
  } catch (const std::invalid_argument&) {
    rejected_equal = true;
  }
  ok = ok && rejected && rejected_equal;
  detail += std::string("w <= v rejected = ") + (rejected && rejected_equal ? "true" : "false");
  return {ok, detail};
}

Verdict criterion8() {
  const double s = 1.0 / std::numbers::sqrt2;
  const PureState bell({0.0, s, s, 0.0});
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ShotSummary sum = simulate_shots(bell, 1000000, {}, derive_seed(kMasterSeed, seed));
    worst = std::max(worst, std::abs(sum.p_hat - 0.125));
  }

  // Coverage of the Wilson interval for P_gggg of the Bell state, and of the
  // mapped concurrence interval for a state whose interval is not clamped.
  const PureState partial({0.0, std::cos(std::numbers::pi / 8.0), std::sin(std::numbers::pi / 8.0),
                           0.0});
  const double c_partial = std::sin(std::numbers::pi / 4.0);
  const int reps = 1000;
  int covered_p = 0;
  int covered_c = 0;
  for (int r = 0; r < reps; ++r) {
    const ShotSummary b = simulate_shots(bell, 10000, {}, derive_seed(kMasterSeed + 1, r));
    const Interval p = wilson_interval(b.n_no_fluorescence, b.n_shots);
    covered_p += (p.low <= 0.125 && 0.125 <= p.high) ? 1 : 0;
    const ShotSummary q = simulate_shots(partial, 10000, {}, derive_seed(kMasterSeed + 2, r));
    covered_c += (q.ci_low <= c_partial && c_partial <= q.ci_high) ? 1 : 0;
  }
  const double cov_p = static_cast<double>(covered_p) / reps;
  const double cov_c = static_cast<double>(covered_c) / reps;
  const bool ok = worst < 1.65e-3 && cov_p >= 0.93 && cov_p <= 0.97 && cov_c >= 0.93 &&
                  cov_c <= 0.97;
  return {ok, "max |p_hat - 0.125| over 20 seeds at 1e6 shots = " + sci(worst) +
                  " (tol 1.65e-3); coverage at 1e4 shots: Bell P_gggg " + sci(cov_p) +
                  ", C=sin(pi/4) " + sci(cov_c) + " (band [0.93, 0.97])"};
}

}  // namespace

int main() {
  const std::vector<PureState> states = haar_states(kStates, 0);
  using Check = Verdict (*)(const std::vector<PureState>&);
  const std::vector<std::pair<int, Check>> checks = {
      {1, criterion1},
      {2, criterion2},
      {3, [](const std::vector<PureState>&) { return criterion3(); }},
      {4, criterion4},
      {5, criterion5},
      {6, criterion6},
      {7, [](const std::vector<PureState>&) { return criterion7(); }},
      {8, [](const std::vector<PureState>&) { return criterion8(); }},
  };
  int failures = 0;
  for (const auto& [id, check] : checks) {
    Verdict v{false, ""};
    try {
      v = check(states);
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s  %s\n", id, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    failures += v.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(checks.size()) - failures,
              checks.size());
  return failures == 0 ? 0 : 1;
}
