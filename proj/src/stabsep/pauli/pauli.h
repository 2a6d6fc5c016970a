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

#ifndef STABSEP_PAULI_PAULI_H
#define STABSEP_PAULI_PAULI_H

#include <optional>
#include <string>
#include <vector>

#include "stabsep/field/fvec.h"
#include "stabsep/scalar/matrix.h"
#include "stabsep/util/caps.h"

namespace stabsep {

/// τ^phase · w(a), with w(a) = τ^{−γ(a)} Z(a_z) X(a_x), γ(a) = a_z·a_x mod D.
///
/// Z(z)|y⟩ = ω^{z·y}|y⟩, X(x)|y⟩ = |y + x⟩, ω = τ² = e^{2πi/d}.
/// a has length 2n laid out as (a_z, a_x).
struct PauliOp {
    int phase = 0;
    FVec a;

    PauliOp() = default;
    PauliOp(int phase, FVec a);

    static PauliOp identity(size_t n, int d);
    /// w(a) with phase 0.
    static PauliOp weyl(const FVec &a);
    /// Single-qudit generator Z_q^{power} / X_q^{power} on n qudits (as w(k e_q)).
    static PauliOp z(size_t n, int d, size_t q, int power = 1);
    static PauliOp x(size_t n, int d, size_t q, int power = 1);
    /// From z and x parts.
    static PauliOp from_zx(const FVec &z, const FVec &x, int phase = 0);

    size_t n() const {
        return a.size() / 2;
    }
    int d() const {
        return a.d;
    }
    int order() const {
        return tau_order(a.d);
    }
    FVec z_part() const {
        return a.slice(0, n());
    }
    FVec x_part() const {
        return a.slice(n(), n());
    }
    bool is_identity() const {
        return phase == 0 && a.is_zero();
    }

    bool operator==(const PauliOp &o) const {
        return phase == o.phase && a == o.a;
    }
    bool operator!=(const PauliOp &o) const {
        return !(*this == o);
    }
    bool operator<(const PauliOp &o) const {
        return a != o.a ? a < o.a : phase < o.phase;
    }
    /// Human-readable form such as "t^1*Z0.X1" (t = τ).
    std::string str() const;
};

/// γ(a) = a_z·a_x mod D, on integer representatives in [0, d).
int pauli_gamma(const FVec &a);

/// Exact product p·q.
PauliOp pauli_mul(const PauliOp &p, const PauliOp &q);
/// p^k for k ≥ 0.
PauliOp pauli_pow(const PauliOp &p, long k);
/// p† = p^{-1}.
PauliOp pauli_inverse(const PauliOp &p);
/// Multiplies the phase by τ^k.
PauliOp pauli_rephase(const PauliOp &p, long k);
bool commutes(const PauliOp &p, const PauliOp &q);

/// Places p on qudits [offset, offset + p.n()) of an n-qudit register.
PauliOp pauli_embed(const PauliOp &p, size_t offset, size_t n);
/// p ⊗ q.
PauliOp pauli_tensor(const PauliOp &p, const PauliOp &q);

/// Dense d^n × d^n matrix. Throws CapExceeded above caps.dense_cap.
CycMatrix weyl_matrix(const PauliOp &p, const Caps &caps = default_caps());
/// p applied to a column vector of length d^n.
CycMatrix apply_pauli(const PauliOp &p, const CycMatrix &v);

/// The PauliOp whose matrix equals m exactly, if any.
std::optional<PauliOp> pauli_from_matrix(const CycMatrix &m, size_t n, int d);
/// (c, a) with m = c·w(a), c ≠ 0, if m is proportional to a Pauli.
std::optional<std::pair<CycRat, FVec>> scaled_pauli_from_matrix(const CycMatrix &m, size_t n, int d);

/// All d^{2n} vectors a, in index order.
std::vector<FVec> all_pauli_vectors(size_t n, int d);

}  // namespace stabsep

#endif
