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

#ifndef STABSEP_UTIL_CAPS_H
#define STABSEP_UTIL_CAPS_H

#include <cstddef>
#include <cstdint>

namespace stabsep {

/// Size limits shared by the dense, enumeration and partition code paths.
struct Caps {
    uint64_t dense_cap = 256;        // max matrix dimension d^n
    uint64_t enum_cap = 100000;      // max number of enumerated stabiliser states
    uint64_t partition_cap = 64;     // max number of points d^n in partition search
};

/// Process-wide defaults. Mutable only from the CLI before any work starts.
Caps &default_caps();

/// Integer power with overflow check; throws CapExceeded on overflow.
uint64_t checked_pow(uint64_t base, uint64_t exp);

/// Worker count from STABSEP_THREADS (default 1).
size_t worker_count();

}  // namespace stabsep

#endif
