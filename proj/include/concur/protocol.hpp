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

#ifndef CONCUR_PROTOCOL_HPP
#define CONCUR_PROTOCOL_HPP

#include <array>
#include <string_view>

#include "concur/concurrence.hpp"
#include "concur/statevec.hpp"

namespace concur {

/// Tolerance on the simulated-vs-analytic amplitude residual before a run is
/// declared broken.
inline constexpr double kOracleTolerance = 1e-10;

struct ProtocolResult {
  Register final_state;
  double p_gggg;
  double p_egeg;
  double concurrence_measured;  // 2 sqrt(2 p_gggg)
  double oracle_residual;       // max |simulated - analytic| over all 16 kets
};

/// Post-circuit amplitudes written out in closed form from c0..c3:
///
///   sqrt2 |Phi1> =  A- |gggg> + A+ |gegg> + B- |ggge> - B+ |gege>
///                 + 2 c2 c3 |eegg> - 2 c0 c1 |geeg>
///                 + C10- |ggee> + C10+ |geee> + C23- |egge> - C23+ |eege>
///                 + A- |egeg> - A+ |eeeg> + B+ |eeee> - B- |egee>
///
/// with A+- = c1 c2 +- c0 c3, B+- = c0 c2 +- c1 c3, Cij+- = ci^2 +- cj^2.
/// The kets |ggeg> and |eggg> carry zero amplitude.
struct Phi1Coefficients {
  std::array<Amplitude, 16> amplitudes;  // same index convention as Register

  Amplitude at(std::string_view ket) const;
  double squared_norm() const;
};

/// |psi> (x) (sy (x) sy)|psi> on four qubits.
Register prepare_input(const PureState& psi);

/// prepare_input, CNOT(control 2, target 4), then R- on qubit 2. Throws
/// InvariantError if the state deviates from analytic_phi1 by more than
/// kOracleTolerance.
ProtocolResult run_circuit(const PureState& psi);

/// Evaluates the closed-form table directly from the coefficients; shares no
/// code with the gate simulator.
Phi1Coefficients analytic_phi1(const PureState& psi);

/// Largest amplitude difference between a 4-qubit register and the table,
/// with no global-phase alignment.
double max_residual(const Register& r, const Phi1Coefficients& table);

/// 2 sqrt(2 p), clamped to [0, 1]. Throws std::invalid_argument for p outside
/// [0, 1/8 + 1e-9].
double extract_concurrence(double p);

/// True when P_egeg reproduces P_gggg to 1e-10.
bool verify_egeg_variant(const ProtocolResult& result);

}  // namespace concur

#endif  // CONCUR_PROTOCOL_HPP
