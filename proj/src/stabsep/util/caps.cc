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

#include "stabsep/util/caps.h"

#include <cstdlib>
#include <string>

#include "stabsep/util/errors.h"

namespace stabsep {

Caps &default_caps() {
    static Caps caps;
    return caps;
}

uint64_t checked_pow(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < exp; i++) {
        if (base != 0 && r > UINT64_MAX / base) {
            throw CapExceeded("integer power overflows 64 bits");
        }
        r *= base;
    }
    return r;
}

size_t worker_count() {
    const char *env = std::getenv("STABSEP_THREADS");
    if (env == nullptr) {
        return 1;
    }
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v < 1) {
        return 1;
    }
    return (size_t)v;
}

}  // namespace stabsep
