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

#ifndef STABSEP_STABILISER_STATE_H
#define STABSEP_STABILISER_STATE_H

#include <optional>
#include <vector>

#include "stabsep/field/affine.h"
#include "stabsep/stabiliser/group.h"

namespace stabsep {

/// A pure stabiliser state in canonical form:
///   ψ(x) = |K|^{-1/2} τ^{e(u)} for x = o + Σ u_i b_i ∈ K, else 0,
/// where K = o + span(b) is the support (canonical AffineSubspace, so o is
/// its least element) and e(u) = Σ_{i≤j} Q_ij u_i u_j + Σ_i l_i u_i mod D
/// is evaluated on integer representatives u_i ∈ [0, d).
///
/// Uniqueness: for d = 2, Q_ii = 0 and Q_ij ∈ {0, 2}; e(0) = 0 fixes the
/// global phase (the first nonzero amplitude is real positive).
class StabState {
   public:
    StabState() = default;
    /// Validates the normal-form constraints.
    StabState(AffineSubspace support, std::vector<std::vector<int>> quad, std::vector<int> lin);

    /// Computational basis state |x⟩.
    static StabState basis_state(const FVec &x);

    size_t n() const {
        return support_.ambient_dim();
    }
    int d() const {
        return support_.d();
    }
    const AffineSubspace &support() const {
        return support_;
    }
    /// quad()[i][j] for i ≤ j; entries below the diagonal are 0.
    const std::vector<std::vector<int>> &quad() const {
        return quad_;
    }
    const std::vector<int> &lin() const {
        return lin_;
    }
    /// e(u) mod D.
    int phase_exponent(const FVec &u) const;
    /// τ-exponent of the amplitude at x, or none if x ∉ K.
    std::optional<int> amplitude_exponent(const FVec &x) const;

    /// Amplitude column vector (d^n entries), scaled by d^{-dim K / 2}.
    ScaledMatrix amplitudes(const Caps &caps = default_caps()) const;
    /// |ψ⟩⟨ψ| as an exact matrix (d^{-dim K} is rational).
    CycMatrix density(const Caps &caps = default_caps()) const;
    /// The rank-n stabiliser group of the state.
    StabGroup stabiliser_group() const;

    bool operator==(const StabState &o) const {
        return support_ == o.support_ && quad_ == o.quad_ && lin_ == o.lin_;
    }
    bool operator!=(const StabState &o) const {
        return !(*this == o);
    }
    bool operator<(const StabState &o) const;

   private:
    AffineSubspace support_;
    std::vector<std::vector<int>> quad_;
    std::vector<int> lin_;
};

/// A vector v = c·|ψ⟩ with |ψ⟩ a canonical stabiliser state, if v has that form.
struct ScaledState {
    ScaledScalar scalar;
    StabState state;
};
std::optional<ScaledState> state_from_amplitudes(const ScaledMatrix &v, size_t n, int d);

/// The state stabilised by a rank-n group.
StabState state_from_group(const StabGroup &g);

/// |STAB(d, n)| = d^n Π_{k=1..n} (d^k + 1).
uint64_t stab_state_count(size_t n, int d);

/// Every n-qudit stabiliser state, each exactly once, in canonical order
/// (supports in enumeration order, then phase polynomials).
/// Throws CapExceeded if the count exceeds caps.enum_cap.
std::vector<StabState> enumerate_stab_states(size_t n, int d, const Caps &caps = default_caps());

/// Enumerated states with ⟨0|s⟩ = 0.
std::vector<StabState> states_orthogonal_to_zero(size_t n, int d, const Caps &caps = default_caps());

/// tr(w(a)† |ψ⟩⟨ψ|) for every a in the state's stabiliser support: the
/// nonzero Pauli coordinates, as (index of a, τ-exponent).
std::vector<std::pair<uint64_t, int>> pauli_coordinates(const StabState &s);

/// |ψ⟩ ⊗ |φ⟩.
StabState tensor(const StabState &a, const StabState &b);

}  // namespace stabsep

#endif
