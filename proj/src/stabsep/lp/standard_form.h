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

#ifndef STABSEP_LP_STANDARD_FORM_H
#define STABSEP_LP_STANDARD_FORM_H

#include <vector>

#include "stabsep/lp/lp.h"

namespace stabsep::lp_internal {

// max c·w  s.t.  A w = b, w ≥ 0, with b ≥ 0 after row sign flips.
// Rows: equality rows of the V-LP, then the convexity row.
struct StandardForm {
    size_t m = 0;
    size_t n = 0;
    std::vector<std::vector<std::pair<uint32_t, Rational>>> cols;
    std::vector<Rational> b;
    std::vector<Rational> c;
    std::vector<int> sign;  // row i of A, b was multiplied by sign[i]
    bool has_objective = false;
};

StandardForm standard_form(const VPolytopeLP &lp);

// Floating-point revised simplex; returns a (hopefully optimal) basis, or an
// empty vector if it gave up.
std::vector<size_t> float_presolve(const StandardForm &sf, size_t max_iterations);

}  // namespace stabsep::lp_internal

#endif
