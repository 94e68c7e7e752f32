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

#ifndef CONCUR_STATEVEC_HPP
#define CONCUR_STATEVEC_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "concur/rng.hpp"

namespace concur {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 8;
/// Norm tolerance for externally supplied amplitudes (may be rounded decimals).
inline constexpr double kIngestNormTolerance = 1e-9;
/// Unitarity tolerance checked once when a gate is constructed.
inline constexpr double kUnitaryTolerance = 1e-12;

/// Dense single-qubit gate. Unitarity is validated on construction.
class Gate1Q {
 public:
  using Matrix = std::array<std::array<Amplitude, 2>, 2>;

  explicit Gate1Q(const Matrix& m);

  const Matrix& matrix() const { return m_; }
  Amplitude operator()(int row, int col) const { return m_[row][col]; }

 private:
  Matrix m_;
};

/// Dense two-qubit gate in the ordered basis (|gg>, |ge>, |eg>, |ee>) of the
/// pair (first, second) it is applied to.
class Gate2Q {
 public:
  using Matrix = std::array<std::array<Amplitude, 4>, 4>;

  explicit Gate2Q(const Matrix& m);

  const Matrix& matrix() const { return m_; }
  Amplitude operator()(int row, int col) const { return m_[row][col]; }

 private:
  Matrix m_;
};

/// Immutable n-qubit state vector.
///
/// Qubits are numbered from 1. Qubit 1 is the leftmost letter of a ket and
/// the most significant bit of the amplitude index; |g> is bit 0 and |e> is
/// bit 1. With this convention the ket "gegg" is index 0b0100.
class Register {
 public:
  /// |g...g> on n qubits, 1 <= n <= kMaxQubits.
  static Register ground(int n_qubits);

  /// Takes 2^n amplitudes. Without `normalize`, the norm must already be 1
  /// within kIngestNormTolerance.
  static Register from_amplitudes(std::vector<Amplitude> amps, bool normalize = false);

  int num_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude amplitude(std::size_t index) const { return amps_.at(index); }
  Amplitude amplitude(std::string_view ket) const;
  double norm() const;

 private:
  Register(int n_qubits, std::vector<Amplitude> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  int n_qubits_;
  std::vector<Amplitude> amps_;
};

/// Index of a {g,e} ket string for an n-qubit register.
std::size_t basis_index(std::string_view ket, int n_qubits);
/// Inverse of basis_index.
std::string basis_label(std::size_t index, int n_qubits);

/// Kronecker product; the qubits of `a` precede those of `b`.
Register tensor(const Register& a, const Register& b);

Register apply_1q(const Register& r, int qubit, const Gate1Q& g);
/// Applies g to the ordered pair (q1, q2): q1 is the gate's first qubit.
Register apply_2q(const Register& r, int q1, int q2, const Gate2Q& g);

/// In-place kernels on a raw amplitude array of length 2^n_qubits. No norm is
/// assumed, so these are linear maps on arbitrary vectors.
void apply_1q_kernel(std::span<Amplitude> amps, int n_qubits, int qubit, const Gate1Q& g);
void apply_2q_kernel(std::span<Amplitude> amps, int n_qubits, int q1, int q2, const Gate2Q& g);

/// Reorders qubits: qubit k of the result is qubit order[k-1] of `r`.
Register permute_qubits(const Register& r, std::span<const int> order);

/// Removes a qubit that is in |g>. Throws std::invalid_argument if its |e>
/// population exceeds `tolerance`.
Register drop_ground_qubit(const Register& r, int qubit, double tolerance = 1e-12);

/// Probability that `qubit` is found in |e>.
double excited_population(const Register& r, int qubit);

double basis_probability(const Register& r, std::string_view ket);

/// |<a|b>|^2; insensitive to global phase.
double overlap_fidelity(const Register& a, const Register& b);

/// Draws basis indices from the Born distribution of a register by inverse
/// CDF lookup.
class BornSampler {
 public:
  explicit BornSampler(const Register& r);

  std::size_t operator()(Rng& rng) const;
  int num_qubits() const { return n_qubits_; }

 private:
  int n_qubits_;
  std::vector<double> cumulative_;
};

/// i.i.d. measurement of all qubits; the sum of counts equals n_shots and the
/// result depends only on (r, n_shots, seed).
std::map<std::string, std::uint64_t> sample_outcomes(const Register& r,
                                                     std::uint64_t n_shots,
                                                     std::uint64_t seed);

}  // namespace concur

#endif  // CONCUR_STATEVEC_HPP
