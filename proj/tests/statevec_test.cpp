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

#include <gtest/gtest.h>

#include <array>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "concur/gates.hpp"
#include "test_support.hpp"

namespace concur {
namespace {

using testing::kInvSqrt2;
using testing::max_abs_diff;

Register bell_register() {
  return Register::from_amplitudes({0.0, kInvSqrt2, kInvSqrt2, 0.0});
}

TEST(StateVec, GroundRegister) {
  const Register one = Register::ground(1);
  EXPECT_EQ(one.amplitude(0), Amplitude(1.0));
  EXPECT_EQ(one.amplitude(1), Amplitude(0.0));

  const Register two = Register::ground(2);
  EXPECT_EQ(two.amplitude(0), Amplitude(1.0));
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(two.amplitude(i), Amplitude(0.0));

  EXPECT_EQ(basis_probability(Register::ground(4), "gggg"), 1.0);
  EXPECT_THROW(Register::ground(0), std::invalid_argument);
  EXPECT_THROW(Register::ground(9), std::invalid_argument);
}

TEST(StateVec, FromAmplitudes) {
  EXPECT_EQ(bell_register().num_qubits(), 2);
  EXPECT_THROW(Register::from_amplitudes({1.0, 1.0, 0.0, 0.0}), std::invalid_argument);

  const Register fixed = Register::from_amplitudes({1.0, 1.0, 0.0, 0.0}, true);
  EXPECT_NEAR(fixed.amplitude(0).real(), kInvSqrt2, 1e-15);

  const Register r = Register::from_amplitudes({0.6, 0.0, 0.0, Amplitude(0.0, 0.8)});
  EXPECT_NEAR(r.norm(), 1.0, 1e-15);

  EXPECT_THROW(Register::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(Register::from_amplitudes({1.0}), std::invalid_argument);
  EXPECT_THROW(Register::from_amplitudes({std::nan(""), 1.0}), std::invalid_argument);
  EXPECT_THROW(Register::from_amplitudes({0.0, 0.0}, true), std::invalid_argument);
  // Rounded decimals within the ingest tolerance are accepted as given.
  EXPECT_NO_THROW(Register::from_amplitudes({0.7071067812, 0.7071067812}));
}

TEST(StateVec, BitOrderConvention) {
  EXPECT_EQ(basis_index("gegg", 4), 0b0100U);
  EXPECT_EQ(basis_index("ggge", 4), 0b0001U);
  EXPECT_EQ(basis_label(0b1010, 4), "egeg");
  for (std::size_t i = 0; i < 256; ++i) EXPECT_EQ(basis_index(basis_label(i, 8), 8), i);
  EXPECT_THROW(basis_index("gx", 2), std::invalid_argument);
  EXPECT_THROW(basis_index("ggg", 2), std::invalid_argument);
}

TEST(StateVec, Tensor) {
  const Register e = apply_1q(Register::ground(1), 1, Gate1Q({{{0.0, 1.0}, {1.0, 0.0}}}));
  const Register ge = tensor(Register::ground(1), e);
  EXPECT_EQ(ge.amplitude(1), Amplitude(1.0));
  EXPECT_EQ(ge.amplitude("ge"), Amplitude(1.0));

  // (|ge> + |eg>)(|ge> + |eg>) / 2 expanded by hand.
  const Register bb = tensor(bell_register(), bell_register());
  for (const char* ket : {"gege", "geeg", "egge", "egeg"}) {
    EXPECT_NEAR(std::abs(bb.amplitude(ket) - 0.5), 0.0, 1e-15) << ket;
  }
  double rest = 0.0;
  for (std::size_t i = 0; i < 16; ++i) rest += std::norm(bb.amplitude(i));
  EXPECT_NEAR(rest, 1.0, 1e-15);

  EXPECT_NEAR(tensor(bell_register(), Register::ground(1)).norm(), 1.0, 1e-15);
  EXPECT_THROW(tensor(Register::ground(5), Register::ground(4)), std::invalid_argument);
}

TEST(StateVec, TensorAssociativity) {
  // At most one factor per product is not a power of two or +-i, so every
  // product is exact and both groupings agree bit for bit.
  const Register a = Register::from_amplitudes({0.5, Amplitude(0, 0.5), -0.5, Amplitude(0, -0.5)});
  const Register b = Register::from_amplitudes({kInvSqrt2, Amplitude(0, kInvSqrt2)});
  const Register c = Register::from_amplitudes({Amplitude(0, 1.0), 0.0});
  const Register left = tensor(tensor(a, b), c);
  const Register right = tensor(a, tensor(b, c));
  for (std::size_t i = 0; i < left.dimension(); ++i) {
    EXPECT_EQ(left.amplitude(i), right.amplitude(i));
  }

  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Register x = testing::random_register(2, rng);
    const Register y = testing::random_register(1, rng);
    const Register z = testing::random_register(3, rng);
    EXPECT_LT(max_abs_diff(tensor(tensor(x, y), z).amplitudes(),
                           tensor(x, tensor(y, z)).amplitudes()),
              1e-15);
  }
}

TEST(StateVec, ApplySingleQubit) {
  const Register y = apply_1q(Register::ground(1), 1, sigma_y());
  EXPECT_EQ(y.amplitude(0), Amplitude(0.0));
  EXPECT_EQ(y.amplitude(1), Amplitude(0.0, 1.0));

  const Register m = apply_1q(Register::ground(1), 1, r_minus());
  EXPECT_NEAR(std::abs(m.amplitude(0) - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m.amplitude(1) + kInvSqrt2), 0.0, 1e-15);

  Rng rng(3);
  const Register r = testing::random_register(3, rng);
  const Register same = apply_1q(r, 2, identity_1q());
  EXPECT_EQ(max_abs_diff(r.amplitudes(), same.amplitudes()), 0.0);

  EXPECT_THROW(apply_1q(r, 0, sigma_y()), std::invalid_argument);
  EXPECT_THROW(apply_1q(r, 4, sigma_y()), std::invalid_argument);
  EXPECT_THROW(Gate1Q({{{1.0, 1.0}, {0.0, 1.0}}}), std::invalid_argument);
}

TEST(StateVec, ApplyTwoQubit) {
  auto ket = [](const char* s) {
    std::vector<Amplitude> v(std::size_t{1} << std::strlen(s), 0.0);
    v[basis_index(s, static_cast<int>(std::strlen(s)))] = 1.0;
    return Register::from_amplitudes(v);
  };
  EXPECT_EQ(apply_2q(ket("eg"), 1, 2, cnot()).amplitude("ee"), Amplitude(1.0));
  EXPECT_EQ(apply_2q(ket("gg"), 1, 2, cnot()).amplitude("gg"), Amplitude(1.0));
  EXPECT_EQ(apply_2q(ket("ee"), 1, 2, cphase()).amplitude("ee"), Amplitude(-1.0));

  // Pair order matters: with (2, 1) the second qubit is the control.
  EXPECT_EQ(apply_2q(ket("ge"), 2, 1, cnot()).amplitude("ee"), Amplitude(1.0));
  EXPECT_EQ(apply_2q(ket("eg"), 2, 1, cnot()).amplitude("eg"), Amplitude(1.0));

  // Non-adjacent qubits in a larger register.
  EXPECT_EQ(apply_2q(ket("gegg"), 2, 4, cnot()).amplitude("gege"), Amplitude(1.0));
  EXPECT_EQ(apply_2q(ket("egg"), 1, 3, cnot()).amplitude("ege"), Amplitude(1.0));

  EXPECT_THROW(apply_2q(ket("gg"), 1, 1, cnot()), std::invalid_argument);
  EXPECT_THROW(apply_2q(ket("gg"), 1, 3, cnot()), std::invalid_argument);
}

TEST(StateVec, BasisProbability) {
  EXPECT_NEAR(basis_probability(bell_register(), "ge"), 0.5, 1e-15);
  EXPECT_EQ(basis_probability(Register::ground(4), "gggg"), 1.0);
  const Register r = Register::from_amplitudes({0.6, 0.0, 0.0, 0.8});
  EXPECT_NEAR(basis_probability(r, "ee"), 0.64, 1e-15);
  EXPECT_THROW(basis_probability(r, "eee"), std::invalid_argument);
  EXPECT_THROW(basis_probability(r, "eq"), std::invalid_argument);
}

TEST(StateVec, OverlapFidelity) {
  Rng rng(5);
  const Register a = testing::random_register(3, rng);
  EXPECT_NEAR(overlap_fidelity(a, a), 1.0, 1e-15);

  std::vector<Amplitude> rotated(a.amplitudes().begin(), a.amplitudes().end());
  for (auto& x : rotated) x *= std::polar(1.0, 0.7);
  EXPECT_NEAR(overlap_fidelity(a, Register::from_amplitudes(rotated)), 1.0, 1e-15);

  const Register g = Register::ground(1);
  const Register e = Register::from_amplitudes({0.0, 1.0});
  EXPECT_EQ(overlap_fidelity(g, e), 0.0);
  EXPECT_THROW(overlap_fidelity(g, a), std::invalid_argument);
}

TEST(StateVec, PermuteAndDrop) {
  const Register r = Register::from_amplitudes({0.0, 0.0, 0.6, 0.0, 0.0, 0.0, 0.0, 0.8});
  // |geg> 0.6 + |eee> 0.8; order (3, 1, 2) makes qubit 1 of the result old qubit 3.
  const std::array<int, 3> order{3, 1, 2};
  const Register p = permute_qubits(r, order);
  EXPECT_EQ(p.amplitude("gge"), Amplitude(0.6));
  EXPECT_EQ(p.amplitude("eee"), Amplitude(0.8));
  const std::array<int, 3> bad{1, 1, 2};
  EXPECT_THROW(permute_qubits(r, bad), std::invalid_argument);

  const Register with_ground = tensor(bell_register(), Register::ground(1));
  const Register dropped = drop_ground_qubit(with_ground, 3);
  EXPECT_EQ(max_abs_diff(dropped.amplitudes(), bell_register().amplitudes()), 0.0);
  EXPECT_THROW(drop_ground_qubit(bell_register(), 1), std::invalid_argument);
  EXPECT_NEAR(excited_population(bell_register(), 2), 0.5, 1e-15);
}

TEST(StateVec, SampleOutcomes) {
  const auto ground = sample_outcomes(Register::ground(4), 1000, 1);
  ASSERT_EQ(ground.size(), 1U);
  EXPECT_EQ(ground.at("gggg"), 1000U);

  const std::uint64_t n = 1000000;
  const auto counts = sample_outcomes(bell_register(), n, 2024);
  const double sigma = std::sqrt(0.25 / static_cast<double>(n));
  EXPECT_LT(std::abs(static_cast<double>(counts.at("ge")) / n - 0.5), 5.0 * sigma);
  EXPECT_EQ(counts.at("ge") + counts.at("eg"), n);
  EXPECT_EQ(counts.count("gg"), 0U);

  EXPECT_EQ(sample_outcomes(bell_register(), 5000, 9), sample_outcomes(bell_register(), 5000, 9));
  EXPECT_THROW(sample_outcomes(bell_register(), 0, 1), std::invalid_argument);
}

TEST(StateVecProperty, SamplingPassesChiSquare) {
  const std::uint64_t n = 100000;
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const Register r = testing::random_register(4, rng);
    const auto counts = sample_outcomes(r, n, 1000 + trial);
    double chi2 = 0.0;
    int cells = 0;
    for (std::size_t i = 0; i < r.dimension(); ++i) {
      const double expected = std::norm(r.amplitude(i)) * static_cast<double>(n);
      if (expected == 0.0) continue;
      const auto it = counts.find(basis_label(i, 4));
      const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
      chi2 += (observed - expected) * (observed - expected) / expected;
      ++cells;
    }
    const boost::math::chi_squared dist(cells - 1);
    EXPECT_LT(chi2, boost::math::quantile(dist, 0.999)) << "trial " << trial;
  }
}

TEST(StateVecProperty, NormPreservedByGateSequences) {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    Register r = testing::random_register(6, rng);
    for (int step = 0; step < 40; ++step) {
      const int q1 = 1 + static_cast<int>(rng() % 6);
      if (rng() % 2 == 0) {
        r = apply_1q(r, q1, testing::random_unitary_1q(rng));
      } else {
        const int q2 = 1 + static_cast<int>((q1 + rng() % 5) % 6);
        r = apply_2q(r, q1, q2, (rng() % 2) ? cnot() : cphase());
      }
    }
    EXPECT_LT(std::abs(r.norm() - 1.0), 1e-12);
  }
}

TEST(StateVecProperty, KernelIsLinear) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r1 = testing::random_vector(16, rng);
    const auto r2 = testing::random_vector(16, rng);
    const Amplitude alpha(uniform01(rng), uniform01(rng));
    const Amplitude beta(uniform01(rng), -uniform01(rng));
    const Gate1Q g = testing::random_unitary_1q(rng);
    const int q = 1 + static_cast<int>(rng() % 4);

    std::vector<Amplitude> combined(16);
    for (std::size_t i = 0; i < 16; ++i) combined[i] = alpha * r1[i] + beta * r2[i];
    apply_1q_kernel(combined, 4, q, g);

    auto a1 = r1;
    auto a2 = r2;
    apply_1q_kernel(a1, 4, q, g);
    apply_1q_kernel(a2, 4, q, g);
    std::vector<Amplitude> separate(16);
    for (std::size_t i = 0; i < 16; ++i) separate[i] = alpha * a1[i] + beta * a2[i];
    EXPECT_LT(max_abs_diff(combined, separate), 1e-14);
  }
}

TEST(StateVecProperty, DisjointGatesCommute) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Register r = testing::random_register(5, rng);
    const Gate1Q g = testing::random_unitary_1q(rng);
    const Register ab = apply_2q(apply_1q(r, 1, g), 3, 5, cnot());
    const Register ba = apply_1q(apply_2q(r, 3, 5, cnot()), 1, g);
    EXPECT_LT(max_abs_diff(ab.amplitudes(), ba.amplitudes()), 1e-14);

    const Gate1Q h = testing::random_unitary_1q(rng);
    const Register cd = apply_1q(apply_1q(r, 2, g), 4, h);
    const Register dc = apply_1q(apply_1q(r, 4, h), 2, g);
    EXPECT_LT(max_abs_diff(cd.amplitudes(), dc.amplitudes()), 1e-14);
  }
}

}  // namespace
}  // namespace concur
