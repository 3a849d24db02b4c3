// Copyright 2026 The qbool Authors
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

#ifndef QBOOL_ERROR_H
#define QBOOL_ERROR_H

#include <stdexcept>
#include <string>

namespace qbool {

/// Malformed or out-of-range user input. The CLI maps this to exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A size guard was exceeded (qubit count, brute-force width). Exit code 3.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Random system generation ran out of retries.
struct GenerationError : std::runtime_error {
    GenerationError(const std::string &what, size_t attempts) : std::runtime_error(what), attempts(attempts) {
    }
    size_t attempts;
};

/// The requested oracle does not fit the ancilla budget.
struct CapacityError : InputError {
    CapacityError(const std::string &what, size_t required_ancillae)
        : InputError(what), required_ancillae(required_ancillae) {
    }
    size_t required_ancillae;
};

/// A precondition on a quantum state was violated (e.g. dirty ancillae before diffusion).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// No (J, K) pair satisfies the success constraint within the search bounds.
struct InfeasibleError : std::runtime_error {
    InfeasibleError(const std::string &what, double best_probability)
        : std::runtime_error(what), best_probability(best_probability) {
    }
    double best_probability;
};

}  // namespace qbool

#endif
