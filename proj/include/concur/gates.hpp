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

#ifndef CONCUR_GATES_HPP
#define CONCUR_GATES_HPP

#include <string_view>
#include <variant>

#include "concur/statevec.hpp"

namespace concur {

enum class GateLabel { SigmaY, RPlus, RMinus, Cnot, Cphase, Identity };

std::string_view to_string(GateLabel label);

/// Pauli Y, [[0, -i], [i, 0]] in the (|g>, |e>) basis.
Gate1Q sigma_y();

/// R+ : |g> -> (|g> + |e>)/sqrt2, |e> -> (|e> - |g>)/sqrt2.
Gate1Q r_plus();
/// R- : |g> -> (|g> - |e>)/sqrt2, |e> -> (|e> + |g>)/sqrt2. Inverse of R+.
Gate1Q r_minus();

Gate1Q identity_1q();

/// Controlled-NOT with the first qubit of the pair as control: the target
/// flips only when the control is |e>.
Gate2Q cnot();

/// diag(1, 1, 1, -1): only |ee> picks up a sign.
Gate2Q cphase();

/// Identity for GateLabel::Identity is the single-qubit identity.
std::variant<Gate1Q, Gate2Q> gate_for(GateLabel label);

/// Matrix product a * b (b acts first).
Gate2Q compose(const Gate2Q& a, const Gate2Q& b);

/// Embeds g on the second (target) qubit of a pair: I (x) g.
Gate2Q on_second(const Gate1Q& g);

/// Largest element-wise difference |a - phase * b| after aligning the global
/// phase of b to a on b's largest-magnitude entry.
double max_aligned_difference(const Gate2Q& a, const Gate2Q& b);

}  // namespace concur

#endif  // CONCUR_GATES_HPP
