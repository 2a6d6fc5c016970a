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

#ifndef STABSEP_SEPARATION_SEPARATION_H
#define STABSEP_SEPARATION_SEPARATION_H

#include <optional>
#include <string>
#include <vector>

#include "stabsep/channels/channel.h"
#include "stabsep/lp/lp.h"
#include "stabsep/stabiliser/basis.h"

namespace stabsep {

// ---------------------------------------------------------------------------
// Real coordinates
// ---------------------------------------------------------------------------

/// Rational coordinates of Hermitian operators on n qudits through their
/// Pauli expansion c_a = tr(w(a)† M). Since c_{−a} = conj(c_a), one
/// representative of each pair {a, −a} is kept and its value is split into
/// power-basis coefficients (φ(D) rows; a single row when c_a is forced real,
/// i.e. for a = −a). Every Hermitian M is determined by these rows.
class PauliCoordinates {
   public:
    PauliCoordinates(size_t n, int d);

    size_t n() const {
        return n_;
    }
    int d() const {
        return d_;
    }
    size_t rows() const {
        return rows_;
    }
    /// First row of Pauli index a; none for the non-representative of a pair.
    std::optional<size_t> first_row(uint64_t a) const;
    /// e.g. "Z0.X1#0" (Pauli, power-basis slot).
    std::string label(size_t row) const;

    std::vector<Rational> of_matrix(const CycMatrix &m) const;
    SparseVec of_state(const StabState &s) const;

   private:
    size_t n_;
    int d_;
    size_t rows_ = 0;
    std::vector<int64_t> first_;       // −1 for skipped partners
    std::vector<uint64_t> row_pauli_;  // row → Pauli index
    std::vector<int> row_slot_;
    size_t width(uint64_t a) const;
};

// ---------------------------------------------------------------------------
// CSP certification
// ---------------------------------------------------------------------------

struct CspOptions {
    bool presolve = true;
    /// Restrict the generators to these 2n-qudit states (candidate mode).
    std::optional<std::vector<StabState>> candidates;
    Caps caps = default_caps();
};

/// Either an exact convex decomposition of the Choi matrix into stabiliser
/// projectors, or a separating functional y on (coordinates, 1) with
/// y·(coords(s), 1) ≥ 0 for every generator s and y·(coords(J), 1) < 0.
struct CspCertificate {
    int d = 2;
    size_t n_in = 0, n_out = 0;
    bool tp = false;
    bool feasible = false;
    bool candidate_mode = false;
    size_t generators = 0;
    size_t rows = 0;
    size_t iterations = 0;
    // feasible
    std::vector<StabState> states;
    std::vector<Rational> weights;
    // infeasible
    std::vector<Rational> functional;
    std::vector<std::string> functional_labels;
    /// The exact re-check passed (weighted projector sum == J, or Farkas inequalities).
    bool verified = false;
};

/// Decides whether J(ch) lies in the stabiliser polytope of n_out + n_in
/// qudits. Full mode enumerates every stabiliser state (CapExceeded when
/// that exceeds caps.enum_cap; use candidate mode then).
CspCertificate certify_csp(const Channel &ch, const CspOptions &opts = {});

/// Σ w_j |s_j⟩⟨s_j| == J(ch), exactly.
bool verify_csp_weights(const Channel &ch, const std::vector<StabState> &states, const std::vector<Rational> &weights,
                        const Caps &caps = default_caps());

/// The Choi decomposition of Λ(n, d) into |+…+⟩|0…0⟩ and the flat states on
/// {(x, x) : x ∈ H} for every proper affine hyperplane H, each with weight d^{-n}.
struct WeightedStates {
    std::vector<StabState> states;
    std::vector<Rational> weights;
};
WeightedStates lambda_choi_decomposition(size_t n, int d);

// ---------------------------------------------------------------------------
// The P_n polytope and the functional L
// ---------------------------------------------------------------------------

/// Rational coordinates of σ: diagonal entries, then φ(D) power-basis rows
/// per off-diagonal pair x < y.
class SigmaCoordinates {
   public:
    SigmaCoordinates(size_t n, int d);

    size_t rows() const {
        return rows_;
    }
    size_t diag_row(uint64_t x) const {
        return x;
    }
    size_t pair_row(uint64_t x, uint64_t y) const;  // x < y, first slot
    size_t width() const {
        return phi_;
    }

    std::vector<Rational> of_matrix(const CycMatrix &sigma) const;
    SparseVec of_state(const StabState &s) const;
    CycMatrix to_matrix(const std::vector<Rational> &coords) const;
    /// L(σ) = ⟨+|σ|+⟩ as a rational functional; exact on every σ with rational L.
    std::vector<Rational> objective_L() const;

   private:
    size_t n_;
    int d_;
    uint64_t dim_;
    size_t phi_;
    size_t rows_;
};

/// ⟨+|σ|+⟩ computed directly (requires the value to be rational).
Rational functional_L(const CycMatrix &sigma);

struct PnReport {
    size_t n = 0;
    int d = 2;
    size_t generators = 0;
    Rational optimum;
    bool unique = false;
    CycMatrix sigma;  // the maximiser (per-coordinate maxima when not unique)
    bool equals_lambda = false;
    LPResult lp;
};

/// Maximises L over P_n(d) (convex hull of the states orthogonal to |0…0⟩,
/// diagonal pinned to (d^n − 1)^{-1}) and certifies uniqueness of the maximiser.
PnReport pn_polytope_lp(size_t n, int d, const SolveOptions &opts = {}, const Caps &caps = default_caps());

/// σ ∈ P_n(d), decided by LP.
LPResult pn_membership(const CycMatrix &sigma, size_t n, int d, const Caps &caps = default_caps());

// ---------------------------------------------------------------------------
// SO ∩ AD upper bound
// ---------------------------------------------------------------------------

/// σ = (d^n − 1)^{-1} Σ_K |K| |s_K⟩⟨s_K|. Throws InvalidInput unless each
/// s_K is supported exactly on its part.
CycMatrix so_ad_sigma(const AffinePartition &partition, const std::vector<StabState> &states);

/// The state supported on K with all amplitudes equal.
StabState flat_state(const AffineSubspace &k);

struct SoAdBoundReport {
    size_t n = 0;
    int d = 2;
    size_t partitions = 0;
    AffinePartition best_partition;
    uint64_t best_sum_sq = 0;       // Σ_K |K|²
    Rational bound_value;           // Σ_K |K|² / (d^n (d^n − 1))
    Rational strict_target;         // 1/d = L(λ)
    Rational margin;                // 1/d − bound
    uint64_t protocol_sum_sq = 0;   // Σ_{k<n} (d−1) d^{2k}, the sequential-measurement value
    Rational protocol_value;        // (d^n + 1) / ((d + 1) d^n), its closed form
    CycMatrix best_sigma;           // so_ad_sigma of the best partition with flat states
};

/// Searches every affine partition of F_d^n ∖ {0}.
SoAdBoundReport so_ad_upper_bound(size_t n, int d, const Caps &caps = default_caps());

// ---------------------------------------------------------------------------
// Structural identities
// ---------------------------------------------------------------------------

/// Exponent c with p q = ω^c q p.
int commutation_exponent(const PauliOp &p, const PauliOp &q);

/// Dense unitary of a gate list, exact including the global phase.
ScaledMatrix circuit_unitary(size_t n, int d, const std::vector<Gate> &gates, const Caps &caps = default_caps());

struct NonCommutingCodes {
    CliffordOp v;
    bool verified = false;  // P1 P2 == d^{-1/2} V P2, densely
};
/// For rank-1 codes with non-commuting generators. NotApplicable otherwise.
NonCommutingCodes verify_non_commuting_codes(const StabCode &p1, const StabCode &p2,
                                             const Caps &caps = default_caps());

struct MeasurementReplacement {
    std::vector<CliffordOp> u;  // one per outcome ω^x, x = 0..d−1
    CliffordOp t;               // frame change: w(a)⊗w(b) ↦ Z_0 X_n, |s⟩ ↦ |0…0⟩ (up to phase)
    bool verified = false;      // P_x(|e_i⟩⊗|s⟩) == d^{-1/2} U_x(|e_i⟩⊗|s⟩) for every basis input
};
/// Measuring w(a) ⊗ w(b) on |ψ⟩ ⊗ |s⟩ when |s⟩ is not an eigenstate of w(b).
/// a has 2n entries, b has 2k. NotApplicable if |s⟩ is an eigenstate of w(b).
MeasurementReplacement verify_measurement_replacement(const FVec &a, const FVec &b, const StabState &s,
                                                      const Caps &caps = default_caps());

/// One term λ · (d^n / rank P) · U P ρ P U†.
struct PolarTerm {
    Rational lambda;
    std::vector<Gate> u;
    StabCode p;
};
struct PolarDecomposition {
    size_t n = 0;
    int d = 2;
    std::vector<PolarTerm> terms;
};
Channel polar_channel(const PolarDecomposition &dec);

struct DoubleProjectorSplit {
    size_t k = 0, l = 0;
    Rational ck, cl;
    PolarDecomposition ek, el;
    bool tp = false;        // both parts trace preserving
    bool distinct = false;  // E_k ≠ E_l
    bool convex = false;    // E == (c_k E_k + c_l E_l) / (c_k + c_l)
};
/// Finds the first k < l with P_k = P_l and distinct terms and splits E.
/// NotApplicable when no such pair exists.
DoubleProjectorSplit verify_double_projector_reduction(const PolarDecomposition &dec);

struct PinchingDecomposition {
    std::vector<CycMatrix> c;  // C_i = diag(√d s_i)
    bool cliffords = false;    // every C_i is a diagonal Clifford unitary
    bool equal = false;        // pinching channel == (1/d) Σ_i (P̃⊗C_i)·(P̃⊗C_i)†
};
/// Pinching of the last qudit under the code projector P̃ on the first
/// n − 1 qudits, rewritten through the eigenbasis of the single-qudit Pauli
/// w(basis). NotApplicable when that eigenbasis is the computational one.
PinchingDecomposition verify_pinching_decomposition(const StabCode &ptilde, const FVec &basis,
                                                    const Caps &caps = default_caps());

// ---------------------------------------------------------------------------
// Single-qudit probe
// ---------------------------------------------------------------------------

struct Csp1Report {
    int d = 2;
    size_t constructed = 0;       // measure-and-prepare / conjugation channels built
    size_t constructed_csp = 0;   // of which certified CSP
    size_t objectives = 0;
    size_t probe_matches = 0;
    size_t degenerate = 0;        // objectives whose optimum was not unique
    std::vector<std::string> mismatches;
};

/// (a) channels Σ_i U_i P_i·P_i U_i† over every single-qudit Pauli eigenbasis
/// are CSP; (b) random linear objectives over SP_2 ∩ TP are optimised at
/// Choi matrices of that form or of Clifford conjugations.
Csp1Report csp1_equals_so1(int d, size_t objectives, uint64_t seed);

/// Whether a 1 → 1 qudit channel is a Clifford conjugation or measures a
/// Pauli eigenbasis and prepares stabiliser states.
bool is_single_qudit_stabiliser_operation(const Channel &ch);

}  // namespace stabsep

#endif
