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

#ifndef STABSEP_PAULI_CLIFFORD_H
#define STABSEP_PAULI_CLIFFORD_H

#include <string>
#include <vector>

#include "stabsep/field/linalg.h"
#include "stabsep/pauli/pauli.h"

namespace stabsep {

/// Standard Clifford generators. Qudit indices are 0-based.
///
/// H: |x⟩ ↦ d^{-1/2} Σ_y ω^{xy}|y⟩      S: |x⟩ ↦ τ^{x²}|x⟩
/// CX(c, t): |x_c, x_t⟩ ↦ |x_c, x_t + x_c⟩   CZ(a, b): ω^{x_a x_b}
/// X(q, k), Z(q, k): Pauli powers.
struct Gate {
    enum class Kind { H, S, CX, CZ, X, Z };
    Kind kind;
    size_t q0 = 0;
    size_t q1 = 0;
    int param = 1;

    static Gate h(size_t q) {
        return {Kind::H, q, 0, 1};
    }
    static Gate s(size_t q) {
        return {Kind::S, q, 0, 1};
    }
    static Gate cx(size_t c, size_t t) {
        return {Kind::CX, c, t, 1};
    }
    static Gate cz(size_t a, size_t b) {
        return {Kind::CZ, a, b, 1};
    }
    static Gate x(size_t q, int k = 1) {
        return {Kind::X, q, 0, k};
    }
    static Gate z(size_t q, int k = 1) {
        return {Kind::Z, q, 0, k};
    }

    size_t arity() const {
        return kind == Kind::CX || kind == Kind::CZ ? 2 : 1;
    }
    /// e.g. "H(0)", "CX(0,1)", "X(2)^2".
    std::string str() const;
    bool operator==(const Gate &o) const {
        return kind == o.kind && q0 == o.q0 && q1 == o.q1 && param == o.param;
    }
};

/// Parses the text form produced by Gate::str.
Gate parse_gate(const std::string &text);

/// Dense unitary of a one- or two-qudit gate on its own qudits, as a √d-scaled matrix.
ScaledMatrix gate_matrix(const Gate &g, int d);

/// A Clifford unitary U (defined up to global phase) in tableau form: the
/// images U g U† of the 2n generators g = Z_0..Z_{n-1}, X_0..X_{n-1}.
class CliffordOp {
   public:
    CliffordOp() = default;
    /// Validates images: symplectic relations and g^d = 1 for each image.
    CliffordOp(size_t n, int d, std::vector<PauliOp> images);

    static CliffordOp identity(size_t n, int d);
    /// Conjugation by the Pauli w: g ↦ w g w†.
    static CliffordOp from_pauli(const PauliOp &w);
    /// Tableau with images τ^{phases_j} w(M e_j).
    static CliffordOp from_symplectic(const FMatrix &m, const std::vector<int> &phases);

    size_t n() const {
        return n_;
    }
    int d() const {
        return d_;
    }
    const std::vector<PauliOp> &images() const {
        return images_;
    }
    /// Column j is the a-vector of image j.
    FMatrix symplectic() const;
    std::vector<int> pauli_part() const;

    bool operator==(const CliffordOp &o) const {
        return n_ == o.n_ && d_ == o.d_ && images_ == o.images_;
    }
    bool operator!=(const CliffordOp &o) const {
        return !(*this == o);
    }

   private:
    size_t n_ = 0;
    int d_ = 2;
    std::vector<PauliOp> images_;
};

/// U p U†.
PauliOp conjugate(const CliffordOp &c, const PauliOp &p);
/// (A∘B) = A·B as operators: B acts first.
CliffordOp compose(const CliffordOp &a, const CliffordOp &b);
CliffordOp inverse(const CliffordOp &c);
CliffordOp tensor(const CliffordOp &a, const CliffordOp &b);
/// Places c on qudits [offset, offset + c.n()) of n qudits.
CliffordOp embed(const CliffordOp &c, size_t offset, size_t n);

CliffordOp gate_tableau(const Gate &g, size_t n, int d);
/// Operator product G_0·G_1·…·G_{m-1} (the last gate acts first).
CliffordOp clifford_from_gates(size_t n, int d, const std::vector<Gate> &gates);

/// Dense matrix of the state stabilised by the rank-n list gens, normalised,
/// first nonzero amplitude real positive. Throws InvalidInput if gens is not
/// a maximal stabiliser group.
ScaledMatrix stabiliser_state_vector(const std::vector<PauliOp> &gens, const Caps &caps = default_caps());

/// Dense unitary with the tableau's action; global phase fixed by making
/// the first nonzero entry of column 0 real positive.
ScaledMatrix clifford_unitary(const CliffordOp &c, const Caps &caps = default_caps());

/// Tableau of a dense Clifford unitary (given with its √d scaling).
CliffordOp clifford_from_unitary(const ScaledMatrix &u, size_t n, int d);

/// A Clifford C with conjugate(C, src_i) == tgt_i for all pairs. Throws
/// NoSuchClifford when the commutation or phase data are incompatible.
CliffordOp find_clifford_mapping(const std::vector<std::pair<PauliOp, PauliOp>> &pairs);

/// Gate sequence (operator-product order) whose tableau equals c.
std::vector<Gate> synthesize_gates(const CliffordOp &c);

}  // namespace stabsep

#endif
