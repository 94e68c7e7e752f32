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

#include "concur/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "concur/errors.hpp"
#include "concur/gates.hpp"

namespace concur {

namespace {

// Local ket decoder so the analytic table does not depend on statevec.
constexpr std::size_t ket_index(std::string_view ket) {
  std::size_t index = 0;
  for (char c : ket) index = (index << 1) | (c == 'e' ? 1U : 0U);
  return index;
}

constexpr double kMaxAllGroundProbability = 0.125;

}  // namespace

Amplitude Phi1Coefficients::at(std::string_view ket) const {
  if (ket.size() != 4 || ket.find_first_not_of("ge") != std::string_view::npos) {
    throw std::invalid_argument("'" + std::string(ket) + "' is not a 4-letter g/e ket");
  }
  return amplitudes[ket_index(ket)];
}

double Phi1Coefficients::squared_norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return s;
}

Register prepare_input(const PureState& psi) {
  const Register copy = psi.to_register();
  Register flipped = apply_1q(copy, 1, sigma_y());
  flipped = apply_1q(flipped, 2, sigma_y());
  return tensor(copy, flipped);
}

Phi1Coefficients analytic_phi1(const PureState& psi) {
  const Amplitude c0 = psi[0];
  const Amplitude c1 = psi[1];
  const Amplitude c2 = psi[2];
  const Amplitude c3 = psi[3];

  const Amplitude a_minus = c1 * c2 - c0 * c3;
  const Amplitude a_plus = c1 * c2 + c0 * c3;
  const Amplitude b_minus = c0 * c2 - c1 * c3;
  const Amplitude b_plus = c0 * c2 + c1 * c3;
  const Amplitude c10_minus = c1 * c1 - c0 * c0;
  const Amplitude c10_plus = c1 * c1 + c0 * c0;
  const Amplitude c23_minus = c2 * c2 - c3 * c3;
  const Amplitude c23_plus = c2 * c2 + c3 * c3;

  Phi1Coefficients t{};
  auto set = [&t](std::string_view ket, Amplitude value) {
    t.amplitudes[ket_index(ket)] = value / std::numbers::sqrt2;
  };
  set("gggg", a_minus);
  set("gegg", a_plus);
  set("ggge", b_minus);
  set("gege", -b_plus);
  set("eegg", 2.0 * c2 * c3);
  set("geeg", -2.0 * c0 * c1);
  set("ggee", c10_minus);
  set("geee", c10_plus);
  set("egge", c23_minus);
  set("eege", -c23_plus);
  set("egeg", a_minus);
  set("eeeg", -a_plus);
  set("eeee", b_plus);
  set("egee", -b_minus);
  return t;
}

double max_residual(const Register& r, const Phi1Coefficients& table) {
  if (r.num_qubits() != 4) throw std::invalid_argument("residual needs a 4-qubit register");
  double worst = 0.0;
  for (std::size_t i = 0; i < table.amplitudes.size(); ++i) {
    worst = std::max(worst, std::abs(r.amplitude(i) - table.amplitudes[i]));
  }
  return worst;
}

ProtocolResult run_circuit(const PureState& psi) {
  Register state = prepare_input(psi);
  state = apply_2q(state, 2, 4, cnot());
  state = apply_1q(state, 2, r_minus());

  const double residual = max_residual(state, analytic_phi1(psi));
  if (residual > kOracleTolerance) {
    throw InvariantError("circuit output deviates from the analytic table by " +
                         std::to_string(residual));
  }
  const double p_gggg = basis_probability(state, "gggg");
  const double p_egeg = basis_probability(state, "egeg");
  const double c = extract_concurrence(p_gggg);
  return ProtocolResult{std::move(state), p_gggg, p_egeg, c, residual};
}

double extract_concurrence(double p) {
  if (!(p >= 0.0) || p > kMaxAllGroundProbability + 1e-9) {
    throw std::invalid_argument("all-ground probability " + std::to_string(p) +
                                " outside [0, 1/8]");
  }
  return std::min(1.0, 2.0 * std::sqrt(2.0 * p));
}

bool verify_egeg_variant(const ProtocolResult& result) {
  return std::abs(result.p_gggg - result.p_egeg) < 1e-10;
}

}  // namespace concur
