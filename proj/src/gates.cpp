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

#include "concur/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace concur {

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr Amplitude kI{0.0, 1.0};
}  // namespace

std::string_view to_string(GateLabel label) {
  switch (label) {
    case GateLabel::SigmaY: return "sigma_y";
    case GateLabel::RPlus: return "R+";
    case GateLabel::RMinus: return "R-";
    case GateLabel::Cnot: return "CNOT";
    case GateLabel::Cphase: return "CPHASE";
    case GateLabel::Identity: return "I";
  }
  return "?";
}

Gate1Q sigma_y() { return Gate1Q({{{0.0, -kI}, {kI, 0.0}}}); }

// Columns are the images of |g> and |e>.
Gate1Q r_plus() {
  return Gate1Q({{{kInvSqrt2, -kInvSqrt2}, {kInvSqrt2, kInvSqrt2}}});
}

Gate1Q r_minus() {
  return Gate1Q({{{kInvSqrt2, kInvSqrt2}, {-kInvSqrt2, kInvSqrt2}}});
}

Gate1Q identity_1q() { return Gate1Q({{{1.0, 0.0}, {0.0, 1.0}}}); }

Gate2Q cnot() {
  return Gate2Q({{{1.0, 0.0, 0.0, 0.0},
                  {0.0, 1.0, 0.0, 0.0},
                  {0.0, 0.0, 0.0, 1.0},
                  {0.0, 0.0, 1.0, 0.0}}});
}

Gate2Q cphase() {
  return Gate2Q({{{1.0, 0.0, 0.0, 0.0},
                  {0.0, 1.0, 0.0, 0.0},
                  {0.0, 0.0, 1.0, 0.0},
                  {0.0, 0.0, 0.0, -1.0}}});
}

std::variant<Gate1Q, Gate2Q> gate_for(GateLabel label) {
  switch (label) {
    case GateLabel::SigmaY: return sigma_y();
    case GateLabel::RPlus: return r_plus();
    case GateLabel::RMinus: return r_minus();
    case GateLabel::Cnot: return cnot();
    case GateLabel::Cphase: return cphase();
    case GateLabel::Identity: break;
  }
  return identity_1q();
}

Gate2Q compose(const Gate2Q& a, const Gate2Q& b) {
  Gate2Q::Matrix m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Amplitude acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
      m[i][j] = acc;
    }
  }
  return Gate2Q(m);
}

Gate2Q on_second(const Gate1Q& g) {
  Gate2Q::Matrix m{};
  for (int blk = 0; blk < 2; ++blk) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) m[2 * blk + i][2 * blk + j] = g(i, j);
    }
  }
  return Gate2Q(m);
}

double max_aligned_difference(const Gate2Q& a, const Gate2Q& b) {
  int bi = 0;
  int bj = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (std::abs(b(i, j)) > std::abs(b(bi, bj))) {
        bi = i;
        bj = j;
      }
    }
  }
  Amplitude phase = 1.0;
  if (std::abs(a(bi, bj)) > 0.0) {
    const Amplitude ratio = a(bi, bj) / b(bi, bj);
    phase = ratio / std::abs(ratio);
  }
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(a(i, j) - phase * b(i, j)));
  }
  return worst;
}

}  // namespace concur
