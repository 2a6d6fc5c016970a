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

#ifndef STABSEP_CHANNELS_CHANNEL_H
#define STABSEP_CHANNELS_CHANNEL_H

#include <optional>
#include <string>
#include <vector>

#include "stabsep/pauli/pauli.h"
#include "stabsep/scalar/matrix.h"
#include "stabsep/util/caps.h"

namespace stabsep {

/// One Kraus term weight · K ρ K†, with K carrying its own √d power.
struct KrausOp {
    ScaledMatrix k;
    Rational weight = 1;
};

/// A linear map from n_in to n_out qudits, held either as a Kraus list or as
/// its images on the basis units |x⟩⟨y| (index x·d^{n_in} + y). Forms are
/// never converted implicitly.
class Channel {
   public:
    enum class Form { kraus, superop };

    Channel() = default;
    static Channel from_kraus(int d, size_t n_in, size_t n_out, std::vector<KrausOp> ops);
    static Channel from_superop(int d, size_t n_in, size_t n_out, std::vector<CycMatrix> unit_images);
    /// E(|x⟩⟨y|) = d^{n_in} (1 ⊗ ⟨x|) J (1 ⊗ |y⟩), J ordered output ⊗ input.
    static Channel from_choi(int d, size_t n_in, size_t n_out, const CycMatrix &j);

    int d() const {
        return d_;
    }
    size_t n_in() const {
        return n_in_;
    }
    size_t n_out() const {
        return n_out_;
    }
    Form form() const {
        return form_;
    }
    const std::vector<KrausOp> &kraus() const {
        return kraus_;
    }
    const std::vector<CycMatrix> &unit_images() const {
        return units_;
    }
    uint64_t dim_in() const;
    uint64_t dim_out() const;

    /// E(|x⟩⟨y|).
    CycMatrix unit_image(uint64_t x, uint64_t y) const;
    CycMatrix apply(const CycMatrix &rho) const;
    /// Explicit conversion to the basis-unit form.
    Channel to_superop() const;

   private:
    int d_ = 2;
    size_t n_in_ = 0, n_out_ = 0;
    Form form_ = Form::superop;
    std::vector<KrausOp> kraus_;
    std::vector<CycMatrix> units_;
};

/// J(E) = (E ⊗ id)(|φ+⟩⟨φ+|), ordered output ⊗ input, trace 1 for TP maps.
CycMatrix choi(const Channel &ch, const Caps &caps = default_caps());

/// tr_out J = 1/d^{n_in}, checked exactly.
bool is_tp(const Channel &ch);

/// Σ w K†K = 1 for Kraus channels (completeness).
bool kraus_complete(const Channel &ch);

/// E†(O): tr(E(ρ) O) = tr(ρ E†(O)).
CycMatrix adjoint_apply(const Channel &ch, const CycMatrix &obs);

/// E(|0⟩⟨0|) = |+⟩⟨+| and E(|x⟩⟨x|) = |x⟩⟨x| for x ≠ 0.
bool is_ad(const Channel &ch);

/// First non-identity Pauli (in index order) with E(w(a)) = 0.
std::optional<PauliOp> kernel_pauli_scan(const Channel &ch);

struct DilationCheck {
    bool pauli_to_pauli = true;    // every E†(generator) ∝ a single Pauli (nonzero)
    std::optional<PauliOp> witness;  // first generator that fails
};
/// Necessary condition for a Clifford-conjugation dilation: E† maps each
/// single-qudit Z_i, X_i to a nonzero multiple of one Pauli.
DilationCheck clifford_dilation_obstruction(const Channel &ch);

/// Equal action on every basis unit.
bool channels_equal(const Channel &a, const Channel &b);

/// σ ↦ E(ρ) = (d^n − 1) σ ∘ ρ + ⟨0|ρ|0⟩ |+⟩⟨+| on basis units.
Channel ad_embed(const CycMatrix &sigma, size_t n, int d);
/// Checks the ADSigma invariants (Hermitian, zero first row/column, pinned diagonal).
void validate_ad_sigma(const CycMatrix &sigma, size_t n, int d);

/// The extremal σ: 0 on label 0, (d^n−1)^{-1} on the diagonal,
/// d^{-1}(d^n−1)^{-1} for linearly independent x, y, and 0 for y = t x, t ≠ 1.
CycMatrix lambda_sigma(size_t n, int d);

/// Λ(n, d). Qubits: Kraus set {H^{⊗n}|0⟩⟨0|} ∪ {2^{-(n-1)/2} P_z : z ≠ 0}
/// with P_z = (1 − Z(z))/2. Odd d: ad_embed(lambda_sigma(n, d)).
Channel lambda_channel(size_t n, int d);

/// Named channels used by the CLI and tests:
///   lambda, identity, measure00-hadamard, reset-plus, dephase-z.
Channel builtin_channel(const std::string &name, size_t n, int d);
std::vector<std::string> builtin_channel_names();

}  // namespace stabsep

#endif
