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

#include "concur/cavity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

#include "concur/errors.hpp"

namespace concur {

namespace {

constexpr double kPopulationTolerance = 1e-12;
constexpr double kEquivalenceTolerance = 1e-10;

Gate2Q swap_gate() {
  return Gate2Q({{{1.0, 0.0, 0.0, 0.0},
                  {0.0, 0.0, 1.0, 0.0},
                  {0.0, 1.0, 0.0, 0.0},
                  {0.0, 0.0, 0.0, 1.0}}});
}

}  // namespace

std::vector<DecomposedStep> decomposed_cnot() {
  return {
      {GateLabel::RMinus, {PairRole::Target}},
      {GateLabel::Cphase, {PairRole::Control, PairRole::Target}},
      {GateLabel::RPlus, {PairRole::Target}},
  };
}

Gate2Q compose_steps(std::span<const DecomposedStep> steps) {
  Gate2Q total(on_second(identity_1q()));
  for (const auto& step : steps) {
    const auto gate = gate_for(step.gate);
    Gate2Q lifted = total;
    if (const auto* g1 = std::get_if<Gate1Q>(&gate)) {
      if (step.acts_on.size() != 1) throw std::invalid_argument("1-qubit step needs one role");
      if (step.acts_on[0] == PairRole::Target) {
        lifted = on_second(*g1);
      } else {
        Gate2Q::Matrix m{};
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            m[2 * i][2 * j] = (*g1)(i, j);
            m[2 * i + 1][2 * j + 1] = (*g1)(i, j);
          }
        }
        lifted = Gate2Q(m);
      }
    } else {
      if (step.acts_on.size() != 2 || step.acts_on[0] == step.acts_on[1]) {
        throw std::invalid_argument("2-qubit step needs both roles");
      }
      lifted = std::get<Gate2Q>(gate);
      if (step.acts_on[0] == PairRole::Target) {
        lifted = compose(swap_gate(), compose(lifted, swap_gate()));
      }
    }
    total = compose(lifted, total);
  }
  return total;
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Atom1: return "atom1";
    case Mode::Atom2: return "atom2";
    case Mode::Atom3: return "atom3";
    case Mode::Atom4: return "atom4";
    case Mode::Photon: return "photon";
    case Mode::Atom5: return "atom5";
  }
  return "?";
}

RelayRegister::RelayRegister(Register state, std::vector<Mode> modes)
    : state_(std::move(state)), modes_(std::move(modes)) {
  if (static_cast<int>(modes_.size()) != state_.num_qubits()) {
    throw std::invalid_argument("mode labels do not match register size");
  }
  auto sorted = modes_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("mode labels repeat");
  }
}

RelayRegister RelayRegister::initial(const PureState& psi) {
  const Register copies = tensor(psi.to_register(), psi.to_register());
  return RelayRegister(tensor(copies, Register::ground(2)),
                       {Mode::Atom1, Mode::Atom2, Mode::Atom3, Mode::Atom4, Mode::Photon,
                        Mode::Atom5});
}

bool RelayRegister::has(Mode m) const {
  return std::find(modes_.begin(), modes_.end(), m) != modes_.end();
}

int RelayRegister::position(Mode m) const {
  const auto it = std::find(modes_.begin(), modes_.end(), m);
  if (it == modes_.end()) {
    throw std::invalid_argument(std::string(to_string(m)) + " is not in the register");
  }
  return static_cast<int>(it - modes_.begin()) + 1;
}

RelayRegister apply_local(const RelayRegister& r, Mode m, const Gate1Q& g) {
  return r.with_state(apply_1q(r.state(), r.position(m), g));
}

RelayRegister map_atom_to_photon(const RelayRegister& r) {
  const int atom = r.position(Mode::Atom2);
  const int photon = r.position(Mode::Photon);
  if (excited_population(r.state(), photon) > kPopulationTolerance) {
    throw std::invalid_argument("cavity D field is not in vacuum before the atom-2 map");
  }
  const Register swapped = apply_2q(r.state(), atom, photon, swap_gate());
  auto modes = r.modes();
  modes.erase(modes.begin() + (atom - 1));
  return RelayRegister(drop_ground_qubit(swapped, atom, kPopulationTolerance), std::move(modes));
}

RelayRegister photonic_cphase(const RelayRegister& r, double pulse_area) {
  const int n = r.state().num_qubits();
  const std::size_t atom_bit = std::size_t{1} << (n - r.position(Mode::Atom4));
  const std::size_t photon_bit = std::size_t{1} << (n - r.position(Mode::Photon));

  // Resonant rotation through the pulse area on {|e,1>, |i,0>} with |i,0>
  // initially empty: |e,1> -> cos(A/2)|e,1> - i sin(A/2)|i,0>.
  const double c = std::cos(pulse_area / 2.0);
  const double s = std::sin(pulse_area / 2.0);
  std::vector<Amplitude> amps(r.state().amplitudes().begin(), r.state().amplitudes().end());
  double aux_population = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & atom_bit) && (i & photon_bit)) {
      aux_population += std::norm(s * amps[i]);
      amps[i] *= c;
    }
  }
  if (aux_population > kPopulationTolerance) {
    throw InvariantError("auxiliary level keeps population " + std::to_string(aux_population) +
                         " after the photonic phase gate");
  }
  return r.with_state(Register::from_amplitudes(std::move(amps)));
}

RelayRegister map_photon_to_atom5(const RelayRegister& r) {
  const int photon = r.position(Mode::Photon);
  const int atom = r.position(Mode::Atom5);
  if (excited_population(r.state(), atom) > kPopulationTolerance) {
    throw std::invalid_argument("atom 5 is not in the ground state before the photon map");
  }
  return r.with_state(apply_2q(r.state(), photon, atom, swap_gate()));
}

ProtocolResult run_cavity_realization(const PureState& psi) {
  RelayRegister r = RelayRegister::initial(psi);
  // Ramsey zone: sy on the second copy.
  r = apply_local(r, Mode::Atom3, sigma_y());
  r = apply_local(r, Mode::Atom4, sigma_y());
  // Cavity D: CNOT(2, 4) = R+_4 CPHASE R-_4 with atom 2 relayed via the field.
  r = apply_local(r, Mode::Atom4, r_minus());
  r = map_atom_to_photon(r);
  r = photonic_cphase(r);
  r = apply_local(r, Mode::Atom4, r_plus());
  r = map_photon_to_atom5(r);
  r = apply_local(r, Mode::Atom5, r_minus());

  const std::array<int, 5> order{r.position(Mode::Atom1), r.position(Mode::Atom5),
                                 r.position(Mode::Atom3), r.position(Mode::Atom4),
                                 r.position(Mode::Photon)};
  const Register logical = drop_ground_qubit(permute_qubits(r.state(), order), 5,
                                             kPopulationTolerance);

  const double residual = max_residual(logical, analytic_phi1(psi));
  const double p_gggg = basis_probability(logical, "gggg");
  const double p_egeg = basis_probability(logical, "egeg");

  const ProtocolResult ideal = run_circuit(psi);
  if (std::abs(ideal.p_gggg - p_gggg) > kEquivalenceTolerance) {
    throw InvariantError("cavity realization all-ground probability deviates from the ideal "
                         "circuit by " + std::to_string(std::abs(ideal.p_gggg - p_gggg)));
  }
  return ProtocolResult{logical, p_gggg, p_egeg, extract_concurrence(p_gggg), residual};
}

}  // namespace concur
