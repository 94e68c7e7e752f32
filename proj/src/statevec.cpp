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

#include "concur/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace concur {

namespace {

template <std::size_t N>
bool is_unitary(const std::array<std::array<Amplitude, N>, N>& m) {
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      Amplitude acc = 0.0;
      for (std::size_t k = 0; k < N; ++k) acc += std::conj(m[k][i]) * m[k][j];
      const Amplitude expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(acc - expected) > kUnitaryTolerance) return false;
    }
  }
  return true;
}

void check_qubit(int qubit, int n_qubits) {
  if (qubit < 1 || qubit > n_qubits) {
    throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                " out of range 1.." + std::to_string(n_qubits));
  }
}

// Bit position of a 1-based qubit; qubit 1 is the most significant bit.
constexpr int bit_of(int qubit, int n_qubits) { return n_qubits - qubit; }

double squared_norm(std::span<const Amplitude> amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

}  // namespace

Gate1Q::Gate1Q(const Matrix& m) : m_(m) {
  if (!is_unitary(m_)) throw std::invalid_argument("single-qubit gate is not unitary");
}

Gate2Q::Gate2Q(const Matrix& m) : m_(m) {
  if (!is_unitary(m_)) throw std::invalid_argument("two-qubit gate is not unitary");
}

Register Register::ground(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("register size " + std::to_string(n_qubits) +
                                " out of range 1.." + std::to_string(kMaxQubits));
  }
  std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
  amps[0] = 1.0;
  return Register(n_qubits, std::move(amps));
}

Register Register::from_amplitudes(std::vector<Amplitude> amps, bool normalize) {
  const std::size_t len = amps.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw std::invalid_argument("amplitude count " + std::to_string(len) +
                                " is not a power of two >= 2");
  }
  const int n = std::countr_zero(len);
  if (n > kMaxQubits) {
    throw std::invalid_argument("register of " + std::to_string(n) + " qubits exceeds limit " +
                                std::to_string(kMaxQubits));
  }
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("amplitude is not finite");
    }
  }
  const double nrm = std::sqrt(squared_norm(amps));
  if (normalize) {
    if (nrm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    for (auto& a : amps) a /= nrm;
  } else if (std::abs(nrm - 1.0) > kIngestNormTolerance) {
    throw std::invalid_argument("amplitudes have norm " + std::to_string(nrm) +
                                ", expected 1 (pass normalize to rescale)");
  }
  return Register(n, std::move(amps));
}

Amplitude Register::amplitude(std::string_view ket) const {
  return amps_[basis_index(ket, n_qubits_)];
}

double Register::norm() const { return std::sqrt(squared_norm(amps_)); }

std::size_t basis_index(std::string_view ket, int n_qubits) {
  if (static_cast<int>(ket.size()) != n_qubits) {
    throw std::invalid_argument("ket '" + std::string(ket) + "' does not have " +
                                std::to_string(n_qubits) + " letters");
  }
  std::size_t index = 0;
  for (char c : ket) {
    index <<= 1;
    if (c == 'e') {
      index |= 1;
    } else if (c != 'g') {
      throw std::invalid_argument("ket '" + std::string(ket) + "' has a letter other than g/e");
    }
  }
  return index;
}

std::string basis_label(std::size_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), 'g');
  for (int q = 1; q <= n_qubits; ++q) {
    if ((index >> bit_of(q, n_qubits)) & 1U) s[q - 1] = 'e';
  }
  return s;
}

Register tensor(const Register& a, const Register& b) {
  const int n = a.num_qubits() + b.num_qubits();
  if (n > kMaxQubits) {
    throw std::invalid_argument("tensor product of " + std::to_string(n) +
                                " qubits exceeds limit " + std::to_string(kMaxQubits));
  }
  std::vector<Amplitude> amps;
  amps.reserve(a.dimension() * b.dimension());
  for (const auto& x : a.amplitudes()) {
    for (const auto& y : b.amplitudes()) amps.push_back(x * y);
  }
  return Register::from_amplitudes(std::move(amps));
}

void apply_1q_kernel(std::span<Amplitude> amps, int n_qubits, int qubit, const Gate1Q& g) {
  check_qubit(qubit, n_qubits);
  const std::size_t stride = std::size_t{1} << bit_of(qubit, n_qubits);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & stride) continue;
    const Amplitude a0 = amps[i];
    const Amplitude a1 = amps[i | stride];
    amps[i] = g(0, 0) * a0 + g(0, 1) * a1;
    amps[i | stride] = g(1, 0) * a0 + g(1, 1) * a1;
  }
}

void apply_2q_kernel(std::span<Amplitude> amps, int n_qubits, int q1, int q2, const Gate2Q& g) {
  check_qubit(q1, n_qubits);
  check_qubit(q2, n_qubits);
  if (q1 == q2) throw std::invalid_argument("two-qubit gate needs distinct qubits");
  const std::size_t s1 = std::size_t{1} << bit_of(q1, n_qubits);
  const std::size_t s2 = std::size_t{1} << bit_of(q2, n_qubits);
  const std::array<std::size_t, 4> offsets{0, s2, s1, s1 | s2};
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & (s1 | s2)) continue;
    std::array<Amplitude, 4> in;
    for (int k = 0; k < 4; ++k) in[k] = amps[i | offsets[k]];
    for (int r = 0; r < 4; ++r) {
      Amplitude acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += g(r, c) * in[c];
      amps[i | offsets[r]] = acc;
    }
  }
}

Register apply_1q(const Register& r, int qubit, const Gate1Q& g) {
  std::vector<Amplitude> amps(r.amplitudes().begin(), r.amplitudes().end());
  apply_1q_kernel(amps, r.num_qubits(), qubit, g);
  return Register::from_amplitudes(std::move(amps));
}

Register apply_2q(const Register& r, int q1, int q2, const Gate2Q& g) {
  std::vector<Amplitude> amps(r.amplitudes().begin(), r.amplitudes().end());
  apply_2q_kernel(amps, r.num_qubits(), q1, q2, g);
  return Register::from_amplitudes(std::move(amps));
}

Register permute_qubits(const Register& r, std::span<const int> order) {
  const int n = r.num_qubits();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("permutation length does not match register size");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int q : order) {
    check_qubit(q, n);
    if (seen[q]) throw std::invalid_argument("permutation repeats qubit " + std::to_string(q));
    seen[q] = true;
  }
  std::vector<Amplitude> out(r.dimension());
  for (std::size_t src = 0; src < r.dimension(); ++src) {
    std::size_t dst = 0;
    for (int k = 1; k <= n; ++k) {
      const std::size_t bit = (src >> bit_of(order[k - 1], n)) & 1U;
      dst |= bit << bit_of(k, n);
    }
    out[dst] = r.amplitude(src);
  }
  return Register::from_amplitudes(std::move(out));
}

double excited_population(const Register& r, int qubit) {
  check_qubit(qubit, r.num_qubits());
  const std::size_t mask = std::size_t{1} << bit_of(qubit, r.num_qubits());
  double p = 0.0;
  for (std::size_t i = 0; i < r.dimension(); ++i) {
    if (i & mask) p += std::norm(r.amplitude(i));
  }
  return p;
}

Register drop_ground_qubit(const Register& r, int qubit, double tolerance) {
  const int n = r.num_qubits();
  if (n < 2) throw std::invalid_argument("cannot drop the only qubit of a register");
  const double p = excited_population(r, qubit);
  if (p > tolerance) {
    throw std::invalid_argument("qubit " + std::to_string(qubit) + " has excited population " +
                                std::to_string(p) + " and cannot be dropped");
  }
  const int b = bit_of(qubit, n);
  const std::size_t low_mask = (std::size_t{1} << b) - 1;
  std::vector<Amplitude> out(r.dimension() / 2);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const std::size_t src = ((j & ~low_mask) << 1) | (j & low_mask);
    out[j] = r.amplitude(src);
  }
  return Register::from_amplitudes(std::move(out));
}

double basis_probability(const Register& r, std::string_view ket) {
  return std::norm(r.amplitude(ket));
}

double overlap_fidelity(const Register& a, const Register& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("overlap of registers with different qubit counts");
  }
  Amplitude inner = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    inner += std::conj(a.amplitude(i)) * b.amplitude(i);
  }
  return std::min(1.0, std::norm(inner));
}

BornSampler::BornSampler(const Register& r) : n_qubits_(r.num_qubits()) {
  cumulative_.reserve(r.dimension());
  double acc = 0.0;
  for (const auto& a : r.amplitudes()) {
    acc += std::norm(a);
    cumulative_.push_back(acc);
  }
}

std::size_t BornSampler::operator()(Rng& rng) const {
  const double u = uniform01(rng) * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) {
    // u landed on the total through rounding; take the last outcome with weight.
    it = std::prev(cumulative_.end());
    while (it != cumulative_.begin() && *it == *std::prev(it)) --it;
  }
  return static_cast<std::size_t>(it - cumulative_.begin());
}

std::map<std::string, std::uint64_t> sample_outcomes(const Register& r, std::uint64_t n_shots,
                                                     std::uint64_t seed) {
  if (n_shots == 0) throw std::invalid_argument("n_shots must be at least 1");
  const BornSampler sampler(r);
  Rng rng(seed);
  std::vector<std::uint64_t> counts(r.dimension(), 0);
  for (std::uint64_t s = 0; s < n_shots; ++s) ++counts[sampler(rng)];
  std::map<std::string, std::uint64_t> out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) out.emplace(basis_label(i, r.num_qubits()), counts[i]);
  }
  return out;
}

}  // namespace concur
