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

#include "stabsep/scalar/rational.h"

#include <cctype>

#include "stabsep/util/errors.h"

namespace stabsep {

std::string rational_str(const Rational &q) {
    return q.get_str();
}

Rational parse_rational(const std::string &text) {
    size_t slash = text.find('/');
    auto valid_int = [](const std::string &s) {
        size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            i++;
        }
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); i++) {
            if (!std::isdigit((unsigned char)s[i])) {
                return false;
            }
        }
        return true;
    };
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw InvalidInput("malformed rational: '" + text + "'");
    }
    if (num[0] == '+') {
        num = num.substr(1);
    }
    mpz_class p(num), q(den);
    if (q == 0) {
        throw InvalidInput("zero denominator: '" + text + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace stabsep
