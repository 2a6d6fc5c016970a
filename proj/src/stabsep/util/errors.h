// Copyright 2026 The stabsep Authors
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

#ifndef STABSEP_UTIL_ERRORS_H
#define STABSEP_UTIL_ERRORS_H

#include <stdexcept>
#include <string>

namespace stabsep {

/// Base class of every error raised by the library.
struct StabsepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : StabsepError {
    using StabsepError::StabsepError;
};

/// A configured size cap (dense, enumeration, partition) would be exceeded.
struct CapExceeded : StabsepError {
    using StabsepError::StabsepError;
};

struct InvalidInput : StabsepError {
    using StabsepError::StabsepError;
};

struct NoSuchClifford : StabsepError {
    using StabsepError::StabsepError;
};

/// The hypotheses of an identity verifier are not met by the given input.
struct NotApplicable : StabsepError {
    using StabsepError::StabsepError;
};

/// An internal exact re-verification failed. Always a bug.
struct VerificationFailure : StabsepError {
    using StabsepError::StabsepError;
};

}  // namespace stabsep

#endif
