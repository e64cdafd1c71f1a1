// Copyright 2026 The qss Authors
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

#ifndef QSS_ERRORS_HPP
#define QSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qss {

/// Malformed or inconsistent caller input (bad subset, mismatched sizes, composite modulus).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A file or string that could not be parsed. The message carries the location.
struct ParseError : InputError {
    using InputError::InputError;
};

/// A stabilizer code that violates one of the code invariants.
struct ValidationError : InputError {
    using InputError::InputError;
};

/// A brute-force computation would exceed its configured size cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qss

#endif  // QSS_ERRORS_HPP
