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

#include "concur/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace concur {

namespace {

constexpr double kPositionTolerance = 1e-9;  // m
constexpr int kMaxBisectionSteps = 200;

constexpr AtomOrder kOrderBeforeC{4, 3, 2, 1};
constexpr AtomOrder kOrderAfterC{3, 4, 1, 2};
constexpr AtomOrder kOrderAtD{3, 1, 4, 2};

bool inside(double x, double lo, double hi) { return x >= lo && x <= hi; }

double or_nan(std::optional<double> x) {
  return x.value_or(std::numeric_limits<double>::quiet_NaN());
}

}  // namespace

void FlightConfig::validate() const {
  if (!(v > 0.0)) throw std::invalid_argument("slow speed v must be positive");
  if (!(w > v)) throw std::invalid_argument("fast speed w must exceed v");
  if (!(x_c > 0.0)) throw std::invalid_argument("cavity C position must be positive");
  if (!(x_d > x_c)) throw std::invalid_argument("cavity D must lie beyond cavity C");
  if (!(l_c > 0.0) || !(l_d > 0.0)) throw std::invalid_argument("cavity lengths must be positive");
  if (!(tau >= 0.0) || !(tau_prime >= 0.0)) throw std::invalid_argument("delays must be >= 0");
}

double FlightConfig::emission_time(int atom) const {
  switch (atom) {
    case 1: return 0.0;
    case 2: return tau;
    case 3: return tau + tau_prime;
    case 4: return 2.0 * tau + tau_prime;
    default: throw std::invalid_argument("atom label must be 1..4");
  }
}

double FlightConfig::speed(int atom) const {
  if (atom < 1 || atom > 4) throw std::invalid_argument("atom label must be 1..4");
  return (atom % 2 == 1) ? v : w;
}

std::optional<double> overtake_position(double speed_a, double t_a, double speed_b, double t_b) {
  if (speed_a == speed_b) return std::nullopt;
  const double x = speed_a * speed_b * (t_b - t_a) / (speed_b - speed_a);
  if (x < 0.0) return std::nullopt;
  return x;
}

AtomOrder order_at(const FlightConfig& cfg, double x) {
  std::array<std::pair<double, int>, 4> arrivals;
  for (int atom = 1; atom <= 4; ++atom) {
    arrivals[atom - 1] = {cfg.emission_time(atom) + x / cfg.speed(atom), atom};
  }
  std::sort(arrivals.begin(), arrivals.end());
  // First to arrive is furthest right.
  AtomOrder order{};
  for (int k = 0; k < 4; ++k) order[3 - k] = arrivals[k].second;
  return order;
}

OrderingReport kinematics_report(const FlightConfig& cfg) {
  cfg.validate();
  const double c_entry = cfg.x_c - cfg.l_c / 2.0;
  const double c_exit = cfg.x_c + cfg.l_c / 2.0;
  const double d_entry = cfg.x_d - cfg.l_d / 2.0;
  const double d_exit = cfg.x_d + cfg.l_d / 2.0;

  auto meet = [&cfg](int a, int b) {
    return overtake_position(cfg.speed(a), cfg.emission_time(a), cfg.speed(b),
                             cfg.emission_time(b));
  };
  const auto x12 = meet(1, 2);
  const auto x34 = meet(3, 4);
  const auto x14 = meet(1, 4);
  const auto x24 = meet(2, 4);

  OrderingReport rep{};
  rep.order_before_c = order_at(cfg, c_entry);
  rep.order_after_c = order_at(cfg, c_exit);
  rep.order_at_d = order_at(cfg, d_entry);
  rep.pair12_cross_position = or_nan(x12);
  rep.pair34_cross_position = or_nan(x34);
  rep.swap14_position = or_nan(x14);
  rep.photon_hold_time = cfg.emission_time(4) - cfg.emission_time(2);

  if (!x12 || !inside(*x12, c_entry, c_exit)) rep.violations.emplace_back("pair12_cross_in_C");
  if (!x34 || !inside(*x34, c_entry, c_exit)) rep.violations.emplace_back("pair34_cross_in_C");
  if (rep.order_before_c != kOrderBeforeC) rep.violations.emplace_back("order_before_C");
  if (rep.order_after_c != kOrderAfterC) rep.violations.emplace_back("order_after_C");
  if (!x14 || !(*x14 > c_exit && *x14 < d_entry)) {
    rep.violations.emplace_back("swap14_between_cavities");
  }
  if (rep.order_at_d != kOrderAtD) rep.violations.emplace_back("order_at_D");
  if (x24 && inside(*x24, d_entry, d_exit)) rep.violations.emplace_back("pair24_no_cross_in_D");

  rep.feasible = rep.violations.empty();
  return rep;
}

DelaySolution solve_delays(double v, double w, double x_c, double x_d, double l_c, double l_d) {
  FlightConfig cfg{v, w, 0.0, 0.0, x_c, x_d, l_c, l_d};
  cfg.validate();

  DelaySolution out;
  if (w - v < kMinSpeedGap) {
    out.binding_constraint = "speed_gap";
    return out;
  }
  const double gap_lo = x_c + l_c / 2.0;
  const double gap_hi = x_d - l_d / 2.0;
  if (!(gap_lo < gap_hi)) {
    out.binding_constraint = "cavity_gap";
    return out;
  }

  cfg.tau = x_c * (1.0 / v - 1.0 / w);
  const double target = 0.5 * (gap_lo + gap_hi);
  auto swap14 = [&](double tau_prime) {
    return v * w * (2.0 * cfg.tau + tau_prime) / (w - v);
  };

  if (swap14(0.0) > target + kPositionTolerance) {
    // Even with atom 3 leaving together with atom 2, atom 4 catches atom 1 too late.
    out.binding_constraint = "swap14_between_cavities";
    return out;
  }
  double lo = 0.0;
  double hi = 0.0;
  if (swap14(0.0) < target - kPositionTolerance) {
    hi = std::max(cfg.tau, 1e-9);
    while (swap14(hi) < target) hi *= 2.0;
    for (int step = 0; step < kMaxBisectionSteps; ++step) {
      const double mid = 0.5 * (lo + hi);
      const double x = swap14(mid);
      if (std::abs(x - target) <= kPositionTolerance) {
        lo = hi = mid;
        break;
      }
      (x < target ? lo : hi) = mid;
    }
  }
  cfg.tau_prime = 0.5 * (lo + hi);

  OrderingReport rep = kinematics_report(cfg);
  if (!rep.feasible) {
    out.binding_constraint = rep.violations.front();
    out.report = std::move(rep);
    return out;
  }
  out.config = cfg;
  out.report = std::move(rep);
  return out;
}

}  // namespace concur
