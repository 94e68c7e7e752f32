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

#include "concur/concurrence.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

#include "concur/errors.hpp"

namespace concur {

namespace {

constexpr double kDensityTolerance = 1e-10;
constexpr double kSpectrumTolerance = 1e-8;

// sy (x) sy is real and anti-diagonal: it sends basis index k to 3 - k with
// sign kSpinFlipSign[k].
constexpr std::array<double, 4> kSpinFlipSign{-1.0, 1.0, 1.0, -1.0};

using ExtMatrix = Eigen::Matrix<std::complex<long double>, 4, 4>;

ExtMatrix to_extended(const DensityMatrix::Matrix& m) {
  ExtMatrix out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out(i, j) = {static_cast<long double>(m[i][j].real()),
                   static_cast<long double>(m[i][j].imag())};
    }
  }
  return out;
}

}  // namespace

PureState::PureState(const Coefficients& c, bool normalize) : c_(c) {
  double sq = 0.0;
  for (const auto& a : c_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("pure-state coefficient is not finite");
    }
    sq += std::norm(a);
  }
  const double nrm = std::sqrt(sq);
  if (normalize) {
    if (nrm == 0.0) throw std::invalid_argument("cannot normalize the zero state");
    for (auto& a : c_) a /= nrm;
  } else if (std::abs(nrm - 1.0) > kIngestNormTolerance) {
    throw std::invalid_argument("pure state has norm " + std::to_string(nrm) + ", expected 1");
  }
}

Register PureState::to_register() const {
  return Register::from_amplitudes({c_.begin(), c_.end()});
}

PureState haar_random_state(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  PureState::Coefficients c;
  for (auto& a : c) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = {re, im};
  }
  return PureState(c, /*normalize=*/true);
}

double concurrence_pure(const PureState& s) {
  return 2.0 * std::abs(s[1] * s[2] - s[0] * s[3]);
}

DensityMatrix::DensityMatrix(const Matrix& m) : m_(m) {
  Amplitude trace = 0.0;
  for (int i = 0; i < 4; ++i) {
    trace += m_[i][i];
    for (int j = 0; j < 4; ++j) {
      if (std::abs(m_[i][j] - std::conj(m_[j][i])) > kDensityTolerance) {
        throw std::invalid_argument("density matrix is not Hermitian");
      }
    }
  }
  if (std::abs(trace - 1.0) > kDensityTolerance) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::Matrix4cd em;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) em(i, j) = m_[i][j];
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(em, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kDensityTolerance) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& s) {
  Matrix m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = s[i] * std::conj(s[j]);
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed() {
  Matrix m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 0.25;
  return DensityMatrix(m);
}

DensityMatrix spin_flip(const DensityMatrix& rho) {
  DensityMatrix::Matrix out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out[i][j] = kSpinFlipSign[i] * kSpinFlipSign[j] * std::conj(rho(3 - i, 3 - j));
    }
  }
  return DensityMatrix(out);
}

// The product rho * rho~ is not Hermitian, so a general complex eigensolver is
// used. Its spectrum is evaluated in extended precision: the square root maps
// a roundoff-level eigenvalue of size eps to sqrt(eps), which in binary64
// alone would be ~1e-8 and swamp the result for pure states.
double concurrence_wootters(const DensityMatrix& rho) {
  const ExtMatrix r = to_extended(rho.matrix());
  const ExtMatrix r_tilde = to_extended(spin_flip(rho).matrix());
  const ExtMatrix product = r * r_tilde;

  const Eigen::ComplexEigenSolver<ExtMatrix> solver(product, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw InvariantError("eigenvalue iteration did not converge");
  }
  std::array<double, 4> roots{};
  for (int k = 0; k < 4; ++k) {
    const auto ev = solver.eigenvalues()(k);
    if (std::abs(static_cast<double>(ev.imag())) > kSpectrumTolerance ||
        static_cast<double>(ev.real()) < -kSpectrumTolerance) {
      throw InvariantError("rho * spin_flip(rho) has eigenvalue (" +
                           std::to_string(static_cast<double>(ev.real())) + ", " +
                           std::to_string(static_cast<double>(ev.imag())) +
                           ") outside the non-negative reals");
    }
    roots[k] = static_cast<double>(std::sqrt(std::max(ev.real(), 0.0L)));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

}  // namespace concur
