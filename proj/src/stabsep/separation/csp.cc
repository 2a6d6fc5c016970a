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

#include <random>

#include "stabsep/separation/separation.h"
#include "stabsep/util/errors.h"
#include "stabsep/util/parallel.h"

namespace stabsep {

namespace {

std::vector<SparseVec> state_columns(const PauliCoordinates &pc, const std::vector<StabState> &states) {
    std::vector<SparseVec> cols(states.size());
    parallel_for(states.size(), [&](size_t j) { cols[j] = pc.of_state(states[j]); });
    return cols;
}

VPolytopeLP pinned_lp(const PauliCoordinates &pc, std::vector<SparseVec> cols, const std::vector<Rational> &target) {
    VPolytopeLP lp;
    lp.dim = pc.rows();
    lp.generators = std::move(cols);
    for (size_t r = 0; r < pc.rows(); r++) {
        lp.eq_rows.push_back(SparseVec{{{(uint32_t)r, Rational(1)}}});
        lp.eq_rhs.push_back(target[r]);
    }
    return lp;
}

// Pauli vector of 1_out ⊗ w(c) on a 1 → 1 qudit Choi register (output first).
FVec input_only(const FVec &c) {
    int d = c.d;
    FVec a(4, d);
    a.e[1] = c[0];
    a.e[3] = c[1];
    return a;
}

std::vector<StabBasis> single_qudit_bases(int d) {
    std::vector<StabBasis> out;
    out.emplace_back(StabGroup(1, d, {PauliOp::z(1, d, 0)}));
    for (int t = 0; t < d; t++) {
        out.emplace_back(StabGroup(1, d, {PauliOp(0, FVec({t, 1}, d))}));
    }
    return out;
}

std::vector<Gate> random_gates(std::mt19937_64 &rng, size_t len) {
    std::vector<Gate> g;
    for (size_t i = 0; i < len; i++) {
        g.push_back(rng() % 2 ? Gate::h(0) : Gate::s(0));
    }
    return g;
}

ScaledMatrix ket_bra(const StabState &s) {
    ScaledMatrix v = s.amplitudes();
    return v * v.adjoint();
}

}  // namespace

bool verify_csp_weights(const Channel &ch, const std::vector<StabState> &states, const std::vector<Rational> &weights,
                        const Caps &caps) {
    if (states.size() != weights.size()) {
        throw DimensionMismatch("one weight per state");
    }
    CycMatrix j = choi(ch, caps);
    CycMatrix acc(j.rows(), j.cols(), j.order());
    Rational total(0);
    for (size_t i = 0; i < states.size(); i++) {
        if (sgn(weights[i]) < 0) {
            return false;
        }
        total += weights[i];
        acc += states[i].density(caps) * weights[i];
    }
    return total == 1 && acc == j;
}

CspCertificate certify_csp(const Channel &ch, const CspOptions &opts) {
    CspCertificate cert;
    cert.d = ch.d();
    cert.n_in = ch.n_in();
    cert.n_out = ch.n_out();
    cert.tp = is_tp(ch);
    size_t total = ch.n_in() + ch.n_out();
    CycMatrix j = choi(ch, opts.caps);

    std::vector<StabState> states;
    if (opts.candidates) {
        cert.candidate_mode = true;
        states = *opts.candidates;
        for (const auto &s : states) {
            if (s.n() != total || s.d() != ch.d()) {
                throw DimensionMismatch("candidate state does not live on the Choi register");
            }
        }
    } else {
        try {
            states = enumerate_stab_states(total, ch.d(), opts.caps);
        } catch (const CapExceeded &e) {
            throw CapExceeded(std::string(e.what()) + "; supply candidate states instead");
        }
    }
    PauliCoordinates pc(total, ch.d());
    VPolytopeLP lp = pinned_lp(pc, state_columns(pc, states), pc.of_matrix(j));
    cert.generators = states.size();
    cert.rows = lp.eq_rows.size() + 1;

    SolveOptions so;
    so.presolve = opts.presolve;
    LPResult r = solve(lp, so);
    cert.iterations = r.iterations;
    if (r.status == LPStatus::feasible) {
        cert.feasible = true;
        for (size_t i = 0; i < states.size(); i++) {
            if (sgn(r.weights[i]) != 0) {
                cert.states.push_back(states[i]);
                cert.weights.push_back(r.weights[i]);
            }
        }
        cert.verified = verify_csp_weights(ch, cert.states, cert.weights, opts.caps);
    } else {
        cert.functional = r.dual_certificate;
        for (size_t row = 0; row <= pc.rows(); row++) {
            cert.functional_labels.push_back(pc.label(row));
        }
        cert.verified = verify_result(lp, r);
    }
    if (!cert.verified) {
        throw VerificationFailure("CSP certificate failed its exact re-check");
    }
    return cert;
}

WeightedStates lambda_choi_decomposition(size_t n, int d) {
    check_prime(d);
    WeightedStates out;
    Rational w(1);
    w /= (long)checked_pow(d, n);
    // |+…+⟩ on the output, |0…0⟩ on the input.
    std::vector<FVec> basis;
    for (size_t i = 0; i < n; i++) {
        FVec e(2 * n, d);
        e.e[i] = 1;
        basis.push_back(e);
    }
    out.states.push_back(flat_state(AffineSubspace(basis, FVec(2 * n, d))));
    out.weights.push_back(w);
    for (const auto &h : proper_affine_hyperplanes(n, d)) {
        std::vector<FVec> diag;
        for (const auto &v : h.basis()) {
            diag.push_back(v.concat(v));
        }
        out.states.push_back(flat_state(AffineSubspace(diag, h.offset().concat(h.offset()))));
        out.weights.push_back(w);
    }
    return out;
}

bool is_single_qudit_stabiliser_operation(const Channel &ch) {
    if (ch.n_in() != 1 || ch.n_out() != 1) {
        throw DimensionMismatch("single-qudit channels only");
    }
    if (!is_tp(ch)) {
        return false;
    }
    int d = ch.d();
    CycMatrix j = choi(ch);
    if (j * j == j) {
        // Pure Choi of a TP map: unitary conjugation; Clifford iff Paulis go to Paulis.
        return clifford_dilation_obstruction(ch).pauli_to_pauli;
    }
    std::vector<CycMatrix> stab_rhos;
    for (const auto &s : enumerate_stab_states(1, d)) {
        stab_rhos.push_back(s.density());
    }
    auto is_stab = [&](const CycMatrix &rho) {
        for (const auto &s : stab_rhos) {
            if (s == rho) {
                return true;
            }
        }
        return false;
    };
    for (const auto &basis : single_qudit_bases(d)) {
        std::vector<CycMatrix> b, out;
        bool ok = true;
        for (const auto &s : basis.states()) {
            b.push_back(s.density());
            out.push_back(ch.apply(b.back()));
            if (!is_stab(out.back())) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        // Measure-and-prepare: E(|x⟩⟨y|) = Σ_i ⟨b_i|x⟩⟨y|b_i⟩ ρ_i.
        for (uint64_t x = 0; x < (uint64_t)d && ok; x++) {
            for (uint64_t y = 0; y < (uint64_t)d && ok; y++) {
                CycMatrix e(d, d, tau_order(d));
                for (size_t i = 0; i < b.size(); i++) {
                    if (!b[i](y, x).is_zero()) {
                        e += out[i] * b[i](y, x);
                    }
                }
                ok = e == ch.unit_image(x, y);
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

Csp1Report csp1_equals_so1(int d, size_t objectives, uint64_t seed) {
    check_prime(d);
    Csp1Report rep;
    rep.d = d;
    std::mt19937_64 rng(seed);
    int order = tau_order(d);

    // (a) constructed channels are CSP.
    std::vector<Channel> built;
    for (const auto &basis : single_qudit_bases(d)) {
        for (int trial = 0; trial < 3; trial++) {
            std::vector<KrausOp> ops;
            for (const auto &s : basis.states()) {
                ScaledMatrix u = circuit_unitary(1, d, random_gates(rng, 1 + rng() % 6));
                ops.push_back({u * ket_bra(s), 1});
            }
            built.push_back(Channel::from_kraus(d, 1, 1, std::move(ops)));
        }
    }
    for (int trial = 0; trial < 3; trial++) {
        ScaledMatrix u = circuit_unitary(1, d, random_gates(rng, 1 + rng() % 6));
        built.push_back(Channel::from_kraus(d, 1, 1, {{u, 1}}));
    }
    for (const auto &ch : built) {
        rep.constructed++;
        if (certify_csp(ch).feasible && is_single_qudit_stabiliser_operation(ch)) {
            rep.constructed_csp++;
        } else {
            rep.mismatches.push_back("constructed channel " + std::to_string(rep.constructed - 1) + " not certified");
        }
    }

    // (b) LP optima over SP_2 ∩ TP.
    std::vector<StabState> states = enumerate_stab_states(2, d);
    PauliCoordinates pc(2, d);
    std::vector<SparseVec> cols = state_columns(pc, states);
    VPolytopeLP base;
    base.dim = pc.rows();
    base.generators = cols;
    for (const auto &c : all_pauli_vectors(1, d)) {
        if (c.is_zero()) {
            continue;
        }
        auto row = pc.first_row(input_only(c).index());
        if (!row) {
            continue;
        }
        size_t w = d == 2 ? 1 : (size_t)(d - 1);
        for (size_t s = 0; s < w; s++) {
            base.eq_rows.push_back(SparseVec{{{(uint32_t)(*row + s), Rational(1)}}});
            base.eq_rhs.push_back(0);
        }
    }
    std::vector<std::vector<Rational>> objs(objectives);
    for (auto &o : objs) {
        o.resize(pc.rows());
        for (auto &x : o) {
            x = (long)(rng() % 2001) - 1000;
        }
    }
    std::vector<std::string> verdict(objectives);
    std::vector<char> matched(objectives, 0);
    parallel_for(objectives, [&](size_t k) {
        VPolytopeLP lp = base;
        lp.set_objective(objs[k]);
        LPResult r = solve(lp);
        if (r.status != LPStatus::optimal) {
            verdict[k] = "objective " + std::to_string(k) + ": LP status " + status_str(r.status);
            return;
        }
        CycMatrix j(d * d, d * d, order);
        for (size_t i = 0; i < states.size(); i++) {
            if (sgn(r.weights[i]) != 0) {
                j += states[i].density() * r.weights[i];
            }
        }
        Channel ch = Channel::from_choi(d, 1, 1, j);
        if (is_single_qudit_stabiliser_operation(ch)) {
            matched[k] = 1;
            return;
        }
        // A tie in the objective can leave a non-vertex optimum; only a unique
        // optimum that is not a stabiliser operation is a counterexample.
        std::vector<SparseVec> id;
        for (size_t row = 0; row < pc.rows(); row++) {
            id.push_back(SparseVec{{{(uint32_t)row, Rational(1)}}});
        }
        if (!certify_unique_optimum(lp, id).unique) {
            matched[k] = 2;
            return;
        }
        verdict[k] = "objective " + std::to_string(k) + ": optimum is not a stabiliser operation";
    });
    for (size_t k = 0; k < objectives; k++) {
        rep.objectives++;
        if (matched[k] == 1) {
            rep.probe_matches++;
        } else if (matched[k] == 2) {
            rep.degenerate++;
        } else {
            rep.mismatches.push_back(verdict[k]);
        }
    }
    return rep;
}

}  // namespace stabsep
