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

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracle.h"

#include "stabsep/separation/separation.h"
#include "stabsep/util/errors.h"

using namespace stabsep;

namespace {

// y · (coordinates, 1), coordinates taken from the dense matrix.
Rational pair_functional(const std::vector<Rational> &y, const std::vector<Rational> &coords) {
    Rational acc = y.back();
    for (size_t r = 0; r < coords.size(); r++) {
        acc += y[r] * coords[r];
    }
    return acc;
}

// Brute-force affine test: S − s0 closed under + and scalar multiples.
bool is_affine(const std::vector<std::vector<int>> &pts, int d) {
    std::set<std::vector<int>> v;
    for (const auto &p : pts) {
        std::vector<int> q(p.size());
        for (size_t i = 0; i < p.size(); i++) {
            q[i] = ((p[i] - pts[0][i]) % d + d) % d;
        }
        v.insert(q);
    }
    for (const auto &a : v) {
        for (const auto &b : v) {
            for (int c = 0; c < d; c++) {
                std::vector<int> s(a.size());
                for (size_t i = 0; i < a.size(); i++) {
                    s[i] = (a[i] + c * b[i]) % d;
                }
                if (!v.count(s)) {
                    return false;
                }
            }
        }
    }
    return true;
}

// max Σ|K|² over all set partitions of F_d^n ∖ {0} into affine blocks.
uint64_t brute_best_sum_sq(size_t n, int d) {
    uint64_t dim = oracle::ipow(d, n);
    std::vector<std::vector<int>> pts;
    for (uint64_t x = 1; x < dim; x++) {
        pts.push_back(oracle::digits(x, n, d));
    }
    std::vector<std::vector<size_t>> blocks;
    uint64_t best = 0;
    std::function<void(size_t)> go = [&](size_t i) {
        if (i == pts.size()) {
            uint64_t s = 0;
            for (const auto &b : blocks) {
                std::vector<std::vector<int>> bp;
                for (size_t k : b) {
                    bp.push_back(pts[k]);
                }
                if (!is_affine(bp, d)) {
                    return;
                }
                s += b.size() * b.size();
            }
            best = std::max(best, s);
            return;
        }
        for (size_t b = 0; b < blocks.size(); b++) {
            blocks[b].push_back(i);
            go(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({i});
        go(i + 1);
        blocks.pop_back();
    };
    go(0);
    return best;
}

StabCode code_of(size_t n, int d, std::vector<PauliOp> gens) {
    return StabCode{StabGroup(n, d, gens)};
}

}  // namespace

TEST(csp, lambda_two_qubits_is_feasible_with_verified_weights) {
    CspCertificate c = certify_csp(lambda_channel(2, 2));
    EXPECT_TRUE(c.feasible);
    EXPECT_TRUE(c.verified);
    EXPECT_TRUE(c.tp);
    EXPECT_EQ(c.generators, stab_state_count(4, 2));
    EXPECT_EQ(c.rows, 257u);
    Rational total(0);
    for (const auto &w : c.weights) {
        EXPECT_GT(sgn(w), 0);
        total += w;
    }
    EXPECT_EQ(total, 1);
}

TEST(csp, lambda_decomposition_is_exact) {
    for (auto [n, d] : {std::pair<size_t, int>{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}}) {
        WeightedStates ws = lambda_choi_decomposition(n, d);
        uint64_t dim = oracle::ipow(d, n);
        // |+…+⟩|0…0⟩ plus one state per affine hyperplane missing 0: d^n states in all.
        EXPECT_EQ(ws.states.size(), dim) << n << " " << d;
        EXPECT_TRUE(verify_csp_weights(lambda_channel(n, d), ws.states, ws.weights)) << n << " " << d;
    }
}

TEST(csp, candidate_mode_on_qutrits) {
    WeightedStates ws = lambda_choi_decomposition(2, 3);
    CspOptions o;
    o.candidates = ws.states;
    CspCertificate c = certify_csp(lambda_channel(2, 3), o);
    EXPECT_TRUE(c.candidate_mode);
    EXPECT_TRUE(c.feasible);
    EXPECT_TRUE(c.verified);
    // A wrong candidate set is refuted by an exact functional.
    o.candidates = std::vector<StabState>(ws.states.begin(), ws.states.end() - 1);
    CspCertificate bad = certify_csp(lambda_channel(2, 3), o);
    EXPECT_FALSE(bad.feasible);
    EXPECT_TRUE(bad.verified);
}

TEST(csp, single_qudit_channels) {
    for (int d : {2, 3}) {
        for (const char *name : {"identity", "reset-plus", "dephase-z", "measure00-hadamard", "lambda"}) {
            // On a qutrit the "else" branch keeps |1⟩,|2⟩ coherent: a rank-2
            // projector, which no stabiliser code has.
            bool expect = !(d == 3 && std::string(name) == "measure00-hadamard");
            CspCertificate c = certify_csp(builtin_channel(name, 1, d));
            EXPECT_EQ(c.feasible, expect) << name << " d=" << d;
            EXPECT_TRUE(c.verified) << name;
            EXPECT_EQ(is_single_qudit_stabiliser_operation(builtin_channel(name, 1, d)), expect) << name;
        }
    }
}

TEST(csp, measure00_hadamard_is_separated) {
    Channel ch = builtin_channel("measure00-hadamard", 2, 2);
    CspCertificate c = certify_csp(ch);
    ASSERT_FALSE(c.feasible);
    EXPECT_TRUE(c.verified);
    PauliCoordinates pc(4, 2);
    ASSERT_EQ(c.functional.size(), pc.rows() + 1);
    ASSERT_EQ(c.functional_labels.back(), "convexity");
    // Oracle: coordinates of dense densities rather than the state formula.
    EXPECT_LT(sgn(pair_functional(c.functional, pc.of_matrix(choi(ch)))), 0);
    std::vector<StabState> all = enumerate_stab_states(4, 2);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; t++) {
        const StabState &s = all[rng() % all.size()];
        EXPECT_GE(sgn(pair_functional(c.functional, pc.of_matrix(s.density()))), 0);
    }
}

TEST(csp, coordinates_agree_with_dense_densities) {
    for (int d : {2, 3}) {
        PauliCoordinates pc(2, d);
        for (const auto &s : enumerate_stab_states(2, d)) {
            std::vector<Rational> dense = pc.of_matrix(s.density());
            std::vector<Rational> sparse(pc.rows());
            for (const auto &[r, v] : pc.of_state(s).entries) {
                sparse[r] = v;
            }
            ASSERT_EQ(dense, sparse);
        }
    }
}

TEST(pn, maximum_of_L) {
    struct Case {
        size_t n;
        int d;
    };
    for (Case c : {Case{1, 2}, Case{2, 2}, Case{3, 2}, Case{1, 3}, Case{2, 3}}) {
        PnReport r = pn_polytope_lp(c.n, c.d);
        EXPECT_EQ(r.optimum, rat(1, c.d)) << c.n << " " << c.d;
        EXPECT_TRUE(r.unique) << c.n << " " << c.d;
        EXPECT_TRUE(r.equals_lambda) << c.n << " " << c.d;
        EXPECT_EQ(functional_L(lambda_sigma(c.n, c.d)), rat(1, c.d));
    }
}

TEST(pn, membership) {
    EXPECT_EQ(pn_membership(lambda_sigma(2, 2), 2, 2).status, LPStatus::feasible);
    SoAdBoundReport b = so_ad_upper_bound(2, 2);
    EXPECT_EQ(pn_membership(b.best_sigma, 2, 2).status, LPStatus::feasible);
    // Nonzero weight on |0⟩ is outside P_n.
    CycMatrix bad = lambda_sigma(2, 2);
    bad(0, 0) = CycRat(bad.order(), rat(1, 3));
    bad(1, 1) = CycRat(bad.order(), 0);
    EXPECT_EQ(pn_membership(bad, 2, 2).status, LPStatus::infeasible);
}

TEST(so_ad, bound_matches_brute_force_partitions) {
    struct Case {
        size_t n;
        int d;
    };
    for (Case c : {Case{1, 2}, Case{2, 2}, Case{3, 2}, Case{1, 3}, Case{2, 3}}) {
        SoAdBoundReport r = so_ad_upper_bound(c.n, c.d);
        uint64_t dim = oracle::ipow(c.d, c.n);
        EXPECT_EQ(r.best_sum_sq, brute_best_sum_sq(c.n, c.d)) << c.n << " " << c.d;
        EXPECT_EQ(r.bound_value, Rational((long)r.best_sum_sq) / Rational((long)(dim * (dim - 1))));
        EXPECT_EQ(r.best_sum_sq, r.protocol_sum_sq);
        EXPECT_EQ(r.bound_value, r.protocol_value);
        EXPECT_EQ(functional_L(r.best_sigma), r.bound_value);
        if (c.n >= 2) {
            EXPECT_GT(sgn(r.margin), 0);
        } else {
            EXPECT_EQ(sgn(r.margin), 0);
        }
    }
    EXPECT_EQ(so_ad_upper_bound(2, 2).bound_value, rat(5, 12));
}

TEST(so_ad, sigma_rejects_bad_input) {
    SoAdBoundReport r = so_ad_upper_bound(2, 2);
    std::vector<StabState> flats;
    for (const auto &k : r.best_partition.parts) {
        flats.push_back(flat_state(k));
    }
    EXPECT_EQ(so_ad_sigma(r.best_partition, flats), r.best_sigma);
    std::reverse(flats.begin(), flats.end());
    EXPECT_THROW(so_ad_sigma(r.best_partition, flats), InvalidInput);
    flats.pop_back();
    EXPECT_THROW(so_ad_sigma(r.best_partition, flats), InvalidInput);
}

TEST(identities, non_commuting_codes) {
    for (int d : {2, 3}) {
        NonCommutingCodes r = verify_non_commuting_codes(code_of(1, d, {PauliOp::x(1, d, 0)}),
                                                         code_of(1, d, {PauliOp::z(1, d, 0)}));
        EXPECT_TRUE(r.verified) << d;
        PauliOp zx = pauli_mul(PauliOp::z(2, d, 0), PauliOp::x(2, d, 1));
        r = verify_non_commuting_codes(code_of(2, d, {zx}), code_of(2, d, {PauliOp::z(2, d, 1)}));
        EXPECT_TRUE(r.verified) << d;
        EXPECT_THROW(verify_non_commuting_codes(code_of(2, d, {PauliOp::z(2, d, 0)}),
                                                code_of(2, d, {PauliOp::z(2, d, 1)})),
                     NotApplicable);
    }
}

TEST(identities, measurement_replacement) {
    for (int d : {2, 3}) {
        std::vector<StabState> singles = enumerate_stab_states(1, d);
        for (const auto &a : all_pauli_vectors(1, d)) {
            for (const auto &b : all_pauli_vectors(1, d)) {
                for (const auto &s : singles) {
                    bool eigen = b.is_zero() || s.stabiliser_group().element_with(b).has_value();
                    if (eigen) {
                        EXPECT_THROW(verify_measurement_replacement(a, b, s), NotApplicable);
                    } else {
                        MeasurementReplacement r = verify_measurement_replacement(a, b, s);
                        EXPECT_TRUE(r.verified);
                        EXPECT_EQ(r.u.size(), (size_t)d);
                    }
                }
            }
        }
    }
    // Larger registers, sampled.
    std::mt19937_64 rng(11);
    for (auto [n, k] : {std::pair<size_t, size_t>{2, 1}, {1, 2}, {2, 2}}) {
        std::vector<StabState> states = enumerate_stab_states(k, 2);
        for (int t = 0; t < 12; t++) {
            FVec a = FVec::from_index(rng() % oracle::ipow(4, n), 2 * n, 2);
            FVec b = FVec::from_index(1 + rng() % (oracle::ipow(4, k) - 1), 2 * k, 2);
            const StabState &s = states[rng() % states.size()];
            if (s.stabiliser_group().element_with(b)) {
                continue;
            }
            EXPECT_TRUE(verify_measurement_replacement(a, b, s).verified) << n << " " << k;
        }
    }
}

TEST(identities, double_projector_reduction) {
    int d = 2;
    StabCode p0 = code_of(1, d, {PauliOp::z(1, d, 0)});
    StabCode p1 = code_of(1, d, {PauliOp(2, PauliOp::z(1, d, 0).a)});
    PolarDecomposition dec{1, d, {{rat(1, 4), {}, p0}, {rat(1, 4), {Gate::x(0)}, p0}, {rat(1, 2), {}, p1}}};
    ASSERT_TRUE(is_tp(polar_channel(dec)));
    DoubleProjectorSplit r = verify_double_projector_reduction(dec);
    EXPECT_EQ(r.k, 0u);
    EXPECT_EQ(r.l, 1u);
    EXPECT_TRUE(r.tp);
    EXPECT_TRUE(r.distinct);
    EXPECT_TRUE(r.convex);
    // Terms that merge are not a reducible pair.
    PolarDecomposition same{1, d, {{rat(1, 4), {}, p0}, {rat(1, 4), {}, p0}, {rat(1, 2), {}, p1}}};
    EXPECT_THROW(verify_double_projector_reduction(same), NotApplicable);

    // Qutrit: three projectors of Z, one pair sharing.
    int q = 3;
    std::vector<StabCode> zs;
    for (int k = 0; k < 3; k++) {
        zs.push_back(code_of(1, q, {PauliOp(2 * k, PauliOp::z(1, q, 0).a)}));
    }
    PolarDecomposition tri{1, q, {{rat(1, 6), {}, zs[0]}, {rat(1, 6), {Gate::h(0)}, zs[0]}, {rat(1, 3), {}, zs[1]},
                                  {rat(1, 3), {}, zs[2]}}};
    ASSERT_TRUE(is_tp(polar_channel(tri)));
    DoubleProjectorSplit t = verify_double_projector_reduction(tri);
    EXPECT_TRUE(t.tp && t.distinct && t.convex);
}

TEST(identities, pinching_decomposition) {
    std::mt19937_64 rng(5);
    for (int d : {2, 3}) {
        for (size_t m : {1u, 2u}) {
            for (int t = 0; t < 3; t++) {
                // Random rank-1 code on m qudits from a random stabiliser state's group.
                std::vector<StabState> states = enumerate_stab_states(m, d);
                const StabState &s = states[rng() % states.size()];
                StabCode code = code_of(m, d, {s.stabiliser_group().generators()[0]});
                for (int zpart = 0; zpart < d; zpart++) {
                    PinchingDecomposition r = verify_pinching_decomposition(code, FVec({zpart, 1}, d));
                    EXPECT_TRUE(r.cliffords);
                    EXPECT_TRUE(r.equal);
                    EXPECT_EQ(r.c.size(), (size_t)d);
                }
                EXPECT_THROW(verify_pinching_decomposition(code, FVec({1, 0}, d)), NotApplicable);
            }
        }
    }
}

TEST(csp1, probe_finds_only_stabiliser_operations) {
    for (int d : {2, 3}) {
        Csp1Report r = csp1_equals_so1(d, 24, 1234);
        EXPECT_EQ(r.constructed, r.constructed_csp) << d;
        EXPECT_EQ(r.objectives, 24u);
        EXPECT_TRUE(r.mismatches.empty()) << (r.mismatches.empty() ? "" : r.mismatches[0]);
        EXPECT_EQ(r.probe_matches + r.degenerate, r.objectives);
    }
}
