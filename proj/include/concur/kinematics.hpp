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

// Ballistic 1D flight of the four Rydberg atoms through cavities C and D.
//
// All atoms leave the source at x = 0 and move in +x at constant speed. Atoms
// 1 and 3 are slow (v), atoms 2 and 4 are fast (w > v). Emission times are
// t1 = 0, t2 = tau, t3 = tau + tau', t4 = 2 tau + tau'. Orderings are listed
// left to right, i.e. the atom furthest from the source is last.

#ifndef CONCUR_KINEMATICS_HPP
#define CONCUR_KINEMATICS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace concur {

struct FlightConfig {
  double v;          // m/s, atoms 1 and 3
  double w;          // m/s, atoms 2 and 4
  double tau;        // s, delay of atom 2 after atom 1 (and of 4 after 3)
  double tau_prime;  // s, delay of atom 3 after atom 2
  double x_c;        // m, cavity C center
  double x_d;        // m, cavity D center
  double l_c;        // m, cavity C mode length
  double l_d;        // m, cavity D mode length

  /// Throws std::invalid_argument unless w > v > 0, x_d > x_c > 0,
  /// l_c, l_d > 0 and tau, tau' >= 0.
  void validate() const;

  double emission_time(int atom) const;
  double speed(int atom) const;
};

/// Left-to-right atom labels.
using AtomOrder = std::array<int, 4>;

struct OrderingReport {
  AtomOrder order_before_c;  // at the entry face of cavity C
  AtomOrder order_after_c;   // at the exit face of cavity C
  AtomOrder order_at_d;      // at the entry face of cavity D
  double pair12_cross_position;
  double pair34_cross_position;
  double swap14_position;
  /// Time atom 2's qubit waits in the cavity-D field before atom 4 reaches
  /// the cavity center.
  double photon_hold_time;
  bool feasible;
  std::vector<std::string> violations;
};

/// Position where a later-emitted faster atom catches an earlier slower one,
/// s_a s_b (t_b - t_a) / (s_b - s_a). Empty when the speeds are equal or the
/// meeting point would lie behind the source.
std::optional<double> overtake_position(double speed_a, double t_a, double speed_b, double t_b);

/// Left-to-right order of the atoms as they pass position x.
AtomOrder order_at(const FlightConfig& cfg, double x);

/// Checks, by name:
///   pair12_cross_in_C   atoms 1-2 meet inside cavity C
///   pair34_cross_in_C   atoms 3-4 meet inside cavity C
///   order_before_C      {4,3,2,1} entering C
///   order_after_C       {3,4,1,2} leaving C
///   swap14_between_cavities  atom 4 passes atom 1 between C and D
///   order_at_D          {3,1,4,2} entering D
///   pair24_no_cross_in_D     atoms 2 and 4 do not meet inside D
/// Infeasibility is reported, never thrown; cfg must satisfy validate().
OrderingReport kinematics_report(const FlightConfig& cfg);

struct DelaySolution {
  std::optional<FlightConfig> config;
  std::optional<OrderingReport> report;
  std::string binding_constraint;  // empty when feasible

  bool feasible() const { return config.has_value(); }
};

/// Minimum speed gap below which the overtake geometry is treated as
/// degenerate.
inline constexpr double kMinSpeedGap = 1e-6;

/// tau = x_c (1/v - 1/w) puts the 1-2 and 3-4 meetings at the cavity-C
/// center; tau' is found by bisection (1e-9 m) so that atom 4 passes atom 1
/// midway between the exit of C and the entry of D. Throws
/// std::invalid_argument for w <= v or non-positive geometry.
DelaySolution solve_delays(double v, double w, double x_c, double x_d, double l_c, double l_d);

}  // namespace concur

#endif  // CONCUR_KINEMATICS_HPP
