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

#ifndef CONCUR_CONCURRENCE_HPP
#define CONCUR_CONCURRENCE_HPP

#include <array>

#include "concur/rng.hpp"
#include "concur/statevec.hpp"

namespace concur {

/// Two-qubit pure state c0|gg> + c1|ge> + c2|eg> + c3|ee>.
class PureState {
 public:
  using Coefficients = std::array<Amplitude, 4>;

  /// Throws std::invalid_argument unless the norm is 1 within
  /// kIngestNormTolerance, or `normalize` is set and the vector is nonzero.
  explicit PureState(const Coefficients& c, bool normalize = false);

  const Coefficients& coefficients() const { return c_; }
  Amplitude operator[](int i) const { return c_[i]; }

  Register to_register() const;

 private:
  Coefficients c_;
};

/// Uniformly (Haar) distributed pure state: four i.i.d. standard complex
/// Gaussians, normalized.
PureState haar_random_state(Rng& rng);

/// 2 |c1 c2 - c0 c3|.
double concurrence_pure(const PureState& s);

/// 4x4 density matrix in the (|gg>, |ge>, |eg>, |ee>) basis.
class DensityMatrix {
 public:
  using Matrix = std::array<std::array<Amplitude, 4>, 4>;

  /// Validates Hermiticity and unit trace to 1e-10 and a spectrum bounded
  /// below by -1e-10.
  explicit DensityMatrix(const Matrix& m);

  static DensityMatrix from_pure(const PureState& s);
  static DensityMatrix maximally_mixed();

  const Matrix& matrix() const { return m_; }
  Amplitude operator()(int i, int j) const { return m_[i][j]; }

 private:
  Matrix m_;
};

/// (sy (x) sy) conj(rho) (sy (x) sy).
DensityMatrix spin_flip(const DensityMatrix& rho);

/// max{0, l1 - l2 - l3 - l4} where l_i are the descending square roots of
/// the eigenvalues of rho * spin_flip(rho). Throws InvariantError when an
/// eigenvalue has |imag| or negative real part beyond 1e-8.
double concurrence_wootters(const DensityMatrix& rho);

}  // namespace concur

#endif  // CONCUR_CONCURRENCE_HPP
