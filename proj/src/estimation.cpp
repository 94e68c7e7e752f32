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

#include "concur/estimation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "concur/protocol.hpp"
#include "concur/statevec.hpp"

namespace concur {

void ReadoutModel::validate() const {
  auto ok = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!ok(p_dark)) throw std::invalid_argument("p_dark must lie in [0, 1]");
  if (!ok(p_bright_false)) throw std::invalid_argument("p_bright_false must lie in [0, 1]");
}

bool shelving_readout(std::size_t outcome_index, int n_qubits, const ReadoutModel& model,
                      Rng& rng) {
  if (n_qubits < 1 || outcome_index >= (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("outcome index out of range");
  }
  if (outcome_index == 0) {
    return !(model.p_bright_false > 0.0 && uniform01(rng) < model.p_bright_false);
  }
  if (model.p_dark == 0.0) return false;
  const int excited = std::popcount(outcome_index);
  for (int k = 0; k < excited; ++k) {
    if (uniform01(rng) >= model.p_dark) return false;
  }
  return true;
}

bool shelving_readout(std::string_view outcome, const ReadoutModel& model, Rng& rng) {
  const int n = static_cast<int>(outcome.size());
  return shelving_readout(basis_index(outcome, n), n, model, rng);
}

Interval wilson_interval(std::uint64_t k, std::uint64_t n, double z) {
  if (n == 0) throw std::invalid_argument("Wilson interval needs n >= 1");
  if (k > n) throw std::invalid_argument("Wilson interval needs k <= n");
  const double nd = static_cast<double>(n);
  const double p = static_cast<double>(k) / nd;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nd;
  const double center = (p + z2 / (2.0 * nd)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nd + z2 / (4.0 * nd * nd)) / denom;
  // Exact endpoints at k = 0 and k = n.
  const double low = (k == 0) ? 0.0 : std::max(0.0, center - half);
  const double high = (k == n) ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

double concurrence_from_frequency(double p) {
  return std::min(1.0, 2.0 * std::sqrt(2.0 * std::max(0.0, p)));
}

Interval confidence_interval(std::uint64_t k, std::uint64_t n) {
  const Interval p = wilson_interval(k, n);
  return {concurrence_from_frequency(p.low), concurrence_from_frequency(p.high)};
}

ShotSummary summarize(std::uint64_t n_no_fluorescence, std::uint64_t n_shots) {
  const Interval ci = confidence_interval(n_no_fluorescence, n_shots);
  const double p_hat = static_cast<double>(n_no_fluorescence) / static_cast<double>(n_shots);
  return {n_shots, n_no_fluorescence, p_hat, concurrence_from_frequency(p_hat), ci.low, ci.high};
}

ShotSummary simulate_shots(const PureState& psi, std::uint64_t n, const ReadoutModel& model,
                           std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("need at least one shot");
  model.validate();
  const ProtocolResult run = run_circuit(psi);
  const BornSampler sampler(run.final_state);
  Rng rng(seed);
  std::uint64_t dark = 0;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (shelving_readout(sampler(rng), sampler.num_qubits(), model, rng)) ++dark;
  }
  return summarize(dark, n);
}

}  // namespace concur
