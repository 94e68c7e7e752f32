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

#ifndef CONCUR_CLI_HPP
#define CONCUR_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "concur/concurrence.hpp"

namespace concur::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInvariantViolation = 2,
  kInfeasible = 3,
};

/// Column header of the sweep CSV.
inline constexpr std::string_view kSweepHeader =
    "seed,c0_re,c0_im,c1_re,c1_im,c2_re,c2_im,c3_re,c3_im,"
    "concurrence_analytic,p_gggg,p_egeg,concurrence_measured,oracle_residual";

/// Parses {"amplitudes": [[re, im] x4], "normalize": bool?}. Throws
/// std::invalid_argument naming the offending field. `force_normalize` has
/// the same effect as "normalize": true in the document.
PureState parse_state_json(std::string_view text, bool force_normalize = false);
PureState load_state_file(const std::string& path, bool force_normalize = false);

struct SweepSummary {
  double max_concurrence_deviation;
  double max_oracle_residual;
};

/// Writes the header and one row per Haar-random state. Row i uses the state
/// drawn from derive_seed(seed, i); rows appear in index order whatever the
/// worker count.
SweepSummary write_sweep(std::uint64_t n_states, std::uint64_t seed, std::ostream& out,
                         unsigned workers = 0);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace concur::cli

#endif  // CONCUR_CLI_HPP
