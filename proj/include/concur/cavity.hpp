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

// Two-cavity microwave realization of the concurrence circuit. The CNOT
// between atoms 2 and 4 is carried out through the photon of cavity D: atom 2
// is swapped into the field, atom 4 performs a controlled phase with the
// photon between R- and R+ rotations, and the field is swapped out into a
// fresh atom 5, which from then on stands in for atom 2.

#ifndef CONCUR_CAVITY_HPP
#define CONCUR_CAVITY_HPP

#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "concur/concurrence.hpp"
#include "concur/gates.hpp"
#include "concur/protocol.hpp"
#include "concur/statevec.hpp"

namespace concur {

/// Which qubit of the (control, target) pair a decomposed step acts on.
enum class PairRole { Control, Target };

struct DecomposedStep {
  GateLabel gate;
  std::vector<PairRole> acts_on;
};

/// [R- on target, CPHASE(control, target), R+ on target]; equals cnot()
/// up to a global phase.
std::vector<DecomposedStep> decomposed_cnot();

/// Matrix of a step list on the (control, target) pair, first step applied
/// first.
Gate2Q compose_steps(std::span<const DecomposedStep> steps);

enum class Mode { Atom1, Atom2, Atom3, Atom4, Photon, Atom5 };

std::string_view to_string(Mode m);

/// A register whose qubits are labelled by the physical mode that carries
/// them. The cavity photon is a qubit on the {|0>, |1>} Fock states (bit 0 and
/// bit 1); the auxiliary level |i> of atom 4 is never stored, as it is empty
/// at every step boundary.
class RelayRegister {
 public:
  RelayRegister(Register state, std::vector<Mode> modes);

  /// Atoms 1-4 in |psi>|psi>, photon in vacuum, atom 5 in |g>.
  static RelayRegister initial(const PureState& psi);

  const Register& state() const { return state_; }
  const std::vector<Mode>& modes() const { return modes_; }
  bool has(Mode m) const;
  /// 1-based qubit position of a mode; throws if absent.
  int position(Mode m) const;

  RelayRegister with_state(Register state) const { return {std::move(state), modes_}; }

 private:
  Register state_;
  std::vector<Mode> modes_;
};

RelayRegister apply_local(const RelayRegister& r, Mode m, const Gate1Q& g);

/// Swaps atom 2 into the vacuum field of cavity D and drops atom 2, which
/// leaves in |g>. Throws std::invalid_argument if the photon is not in |0>.
RelayRegister map_atom_to_photon(const RelayRegister& r);

/// 2pi Rabi rotation on {|e>_4 |1>, |i>_4 |0>}. A full cycle returns
/// |e>|1> with phase e^{i pi} and leaves other states untouched. Other pulse
/// areas are accepted only to check the leakage guard: InvariantError if the
/// auxiliary level keeps more than 1e-12 population.
RelayRegister photonic_cphase(const RelayRegister& r,
                              double pulse_area = 2.0 * std::numbers::pi);

/// Swaps the field into atom 5, leaving the photon in |0>. Throws
/// std::invalid_argument if atom 5 is not in |g>.
RelayRegister map_photon_to_atom5(const RelayRegister& r);

/// Full sequence: sy on atoms 3 and 4, R- on 4, atom 2 -> photon, photonic
/// CPHASE, R+ on 4, photon -> atom 5, R- on atom 5. The reported state is
/// reordered to the logical qubits (1, 5, 3, 4) so it lines up with
/// run_circuit; p_gggg is then the all-ground probability of atoms
/// {5, 3, 1, 4}. Throws InvariantError if p_gggg differs from the ideal
/// circuit by more than 1e-10.
ProtocolResult run_cavity_realization(const PureState& psi);

}  // namespace concur

#endif  // CONCUR_CAVITY_HPP
