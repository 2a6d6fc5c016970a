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

#ifndef STABSEP_SCALAR_RATIONAL_H
#define STABSEP_SCALAR_RATIONAL_H

#include <gmpxx.h>

#include <string>

namespace stabsep {

using Rational = mpq_class;

/// Canonical text form: "p/q", or "p" for integers.
std::string rational_str(const Rational &q);

/// Parses "p/q" or "p". Throws InvalidInput on malformed text or zero denominator.
Rational parse_rational(const std::string &text);

inline Rational rat(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace stabsep

#endif
