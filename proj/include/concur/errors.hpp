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

#ifndef CONCUR_ERRORS_HPP
#define CONCUR_ERRORS_HPP

#include <stdexcept>

namespace concur {

// Bad caller input (out-of-range index, unnormalized state, malformed ket)
// is reported with std::invalid_argument. InvariantError is reserved for
// internal consistency checks that should never fire on valid input, such as
// the simulated circuit disagreeing with its analytic table.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace concur

#endif  // CONCUR_ERRORS_HPP
