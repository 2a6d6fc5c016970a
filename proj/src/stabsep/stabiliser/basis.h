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

#ifndef STABSEP_STABILISER_BASIS_H
#define STABSEP_STABILISER_BASIS_H

#include <optional>
#include <vector>

#include "stabsep/pauli/clifford.h"
#include "stabsep/stabiliser/state.h"

namespace stabsep {

/// The d^n joint eigenstates of a rank-n group: the state with label j is
/// stabilised by ω^{j_l} g_l for every generator g_l.
class StabBasis {
   public:
    StabBasis() = default;
    explicit StabBasis(StabGroup group);

    static StabBasis computational(size_t n, int d);

    const StabGroup &group() const {
        return group_;
    }
    size_t size() const {
        return states_.size();
    }
    const StabState &state(size_t j) const {
        return states_.at(j);
    }
    const std::vector<StabState> &states() const {
        return states_;
    }

   private:
    StabGroup group_;
    std::vector<StabState> states_;
};

/// (⟨α_i| ⊗ 1)|ψ⟩ = scalar · |β⟩ for the i-th basis state on the first n1 qudits.
struct Contraction {
    ScaledScalar scalar;
    std::optional<StabState> residual;  // none iff scalar = 0
};
Contraction contract(const StabState &psi, const StabBasis &basis, size_t index);

/// Polar form |s⟩ = c · d^{k/2} (U P ⊗ 1)|φ+⟩ of a 2n-qudit stabiliser state,
/// with |φ+⟩ = d^{-n/2} Σ_x |x⟩|x⟩ and |c| = 1.
struct PolarForm {
    CliffordOp u;
    StabCode p;
    size_t k = 0;
    ScaledScalar global_phase;
    std::vector<Gate> gates;  // synthesised gate list for U (operator-product order)
};

/// Computes and exactly verifies the polar form. Throws VerificationFailure
/// if the reconstruction does not match (a bug).
PolarForm polar_form(const StabState &s, bool synthesize = true);

/// d^{k/2}(U P ⊗ 1)|φ+⟩ as a dense vector (without the global phase).
ScaledMatrix polar_reconstruction(const PolarForm &f, int d, const Caps &caps = default_caps());

}  // namespace stabsep

#endif
