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

#ifndef CONCUR_ESTIMATION_HPP
#define CONCUR_ESTIMATION_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "concur/concurrence.hpp"
#include "concur/rng.hpp"

namespace concur {

/// Two-sided 95% standard normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

/// Global electron-shelving readout of a four-ion register. All ions are
/// illuminated at once and the detector only answers "any fluorescence?".
struct ReadoutModel {
  /// Chance that one excited (bright) ion emits no detected photon.
  double p_dark = 0.0;
  /// Chance that an all-ground (dark) register still shows fluorescence.
  double p_bright_false = 0.0;

  /// Throws std::invalid_argument unless both probabilities lie in [0, 1].
  void validate() const;
  bool ideal() const { return p_dark == 0.0 && p_bright_false == 0.0; }
};

/// True when the shot registers as dark (no fluorescence). Ideal readout is
/// dark exactly for the all-ground outcome; with imperfections a dark outcome
/// turns bright with p_bright_false, and an outcome with k excited ions reads
/// dark only if all k ions independently miss (probability p_dark^k).
bool shelving_readout(std::size_t outcome_index, int n_qubits, const ReadoutModel& model,
                      Rng& rng);
bool shelving_readout(std::string_view outcome, const ReadoutModel& model, Rng& rng);

struct Interval {
  double low;
  double high;
};

/// Wilson score interval on a binomial proportion k/n.
Interval wilson_interval(std::uint64_t k, std::uint64_t n, double z = kZ95);

/// 2 sqrt(2 max(0, p)), clamped to [0, 1]. Unlike extract_concurrence this
/// accepts finite-sample frequencies above 1/8.
double concurrence_from_frequency(double p);

/// 95% Wilson interval on p_gggg mapped through concurrence_from_frequency.
Interval confidence_interval(std::uint64_t k, std::uint64_t n);

struct ShotSummary {
  std::uint64_t n_shots;
  std::uint64_t n_no_fluorescence;
  double p_hat;
  double c_hat;
  double ci_low;
  double ci_high;
};

ShotSummary summarize(std::uint64_t n_no_fluorescence, std::uint64_t n_shots);

/// Runs the ideal circuit, draws n outcomes from its Born distribution and
/// passes each through the readout model. Deterministic in `seed`.
ShotSummary simulate_shots(const PureState& psi, std::uint64_t n, const ReadoutModel& model,
                           std::uint64_t seed);

}  // namespace concur

#endif  // CONCUR_ESTIMATION_HPP
