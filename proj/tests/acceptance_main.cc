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

// Acceptance suite: one PASS/FAIL line per criterion, with wall time against budget.
// Expected values come from literals or from brute-force oracles in this file
// and tests/oracle.h, never from the code under test.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracle.h"
#include "stabsep/separation/separation.h"
#include "stabsep/util/errors.h"

using namespace stabsep;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream note;

    void expect(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
            note << "[failed: " << what << "] ";
        }
    }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs one criterion; over-budget counts as a failure.
bool criterion(int id, const std::string &title, double budget_s, const std::function<void(Check &)> &body) {
    Check c;
    auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception &e) {
        c.ok = false;
        c.note << "[exception: " << e.what() << "] ";
    }
    double secs = since(t0);
    if (secs > budget_s) {
        c.ok = false;
        c.note << "[over budget] ";
    }
    std::cout << "criterion " << std::setw(2) << id << ": " << (c.ok ? "PASS" : "FAIL") << "  " << title << "  ("
              << std::fixed << std::setprecision(2) << secs << " s / " << budget_s << " s)  " << c.note.str()
              << std::endl;
    return c.ok;
}

CycMatrix column(const std::vector<long> &amps, int d) {
    int order = tau_order(d);
    CycMatrix v(amps.size(), 1, order);
    for (size_t i = 0; i < amps.size(); i++) {
        v(i, 0) = CycRat(order, amps[i]);
    }
    return v;
}

// Column vector with τ-power amplitudes (−1 marks a zero).
CycMatrix phased_column(const std::vector<int> &exps, int d) {
    int order = tau_order(d);
    CycMatrix v(exps.size(), 1, order);
    for (size_t i = 0; i < exps.size(); i++) {
        if (exps[i] >= 0) {
            v(i, 0) = CycRat::root(order, exps[i]);
        }
    }
    return v;
}

StabState state_of(const CycMatrix &v, size_t n, int d) {
    auto s = state_from_amplitudes(ScaledMatrix(v, 0, d), n, d);
    if (!s) {
        throw VerificationFailure("oracle vector is not a stabiliser state");
    }
    return s->state;
}

Rational lambda_entry(uint64_t x, uint64_t y, size_t n, int d) {
    uint64_t dim = oracle::ipow(d, n);
    if (x == 0 || y == 0) {
        return 0;
    }
    if (x == y) {
        return rat(1, (long)dim - 1);
    }
    auto vx = oracle::digits(x, n, d), vy = oracle::digits(y, n, d);
    for (int t = 0; t < d; t++) {
        std::vector<int> tx(n);
        for (size_t i = 0; i < n; i++) {
            tx[i] = (t * vx[i]) % d;
        }
        if (tx == vy) {
            return 0;
        }
    }
    return rat(1, d * ((long)dim - 1));
}

CycMatrix lambda_oracle(size_t n, int d) {
    uint64_t dim = oracle::ipow(d, n);
    CycMatrix m(dim, dim, tau_order(d));
    for (uint64_t x = 0; x < dim; x++) {
        for (uint64_t y = 0; y < dim; y++) {
            m(x, y) = CycRat(tau_order(d), lambda_entry(x, y, n, d));
        }
    }
    return m;
}

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
            for (int c = 1; c < d; c++) {
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

// max Σ|K|² over set partitions of F_d^n ∖ {0} into affine blocks, plus the count of such partitions.
std::pair<uint64_t, uint64_t> partition_oracle(size_t n, int d) {
    uint64_t dim = oracle::ipow(d, n);
    std::vector<std::vector<int>> pts;
    for (uint64_t x = 1; x < dim; x++) {
        pts.push_back(oracle::digits(x, n, d));
    }
    std::vector<std::vector<size_t>> blocks;
    uint64_t best = 0, count = 0;
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
            count++;
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
    return {best, count};
}

StabCode code_of(size_t n, int d, std::vector<PauliOp> gens) {
    return StabCode{StabGroup(n, d, gens)};
}

Rational functional_at(const std::vector<Rational> &y, const std::vector<Rational> &coords) {
    Rational acc = y.back();
    for (size_t r = 0; r < coords.size(); r++) {
        acc += y[r] * coords[r];
    }
    return acc;
}

}  // namespace

int main() {
    bool all = true;
    std::mt19937_64 rng(20261018);

    all &= criterion(1, "stabiliser state counts", 60, [](Check &c) {
        struct Case {
            size_t n;
            int d;
            uint64_t expect;
        };
        for (Case k : {Case{1, 2, 6}, Case{1, 3, 12}, Case{2, 2, 60}, Case{3, 2, 1080}, Case{4, 2, 36720}}) {
            auto states = enumerate_stab_states(k.n, k.d);
            std::set<StabState> distinct(states.begin(), states.end());
            std::string tag = "n=" + std::to_string(k.n) + " d=" + std::to_string(k.d);
            c.expect(states.size() == k.expect, tag + " count");
            c.expect(distinct.size() == states.size(), tag + " duplicates");
            // d^n Π (d^k + 1).
            uint64_t formula = oracle::ipow(k.d, k.n);
            for (size_t j = 1; j <= k.n; j++) {
                formula *= oracle::ipow(k.d, j) + 1;
            }
            c.expect(formula == k.expect, tag + " product formula");
            if (k.n <= 2) {
                auto rays = oracle::stabiliser_rays(k.n, k.d);
                std::set<std::vector<CycRat>, oracle::RayLess> got;
                for (const auto &s : states) {
                    got.insert(oracle::ray(s.amplitudes().m));
                }
                c.expect(got.size() == rays.size() && std::equal(got.begin(), got.end(), rays.begin()),
                         tag + " brute-force orbit");
            }
        }
        c.note << "6, 12, 60, 1080, 36720 ";
    });

    all &= criterion(2, "15 two-qubit states orthogonal to |00>", 1, [](Check &c) {
        // Basis states 01, 10, 11 and (|u> + i^k |v>) for each pair u < v.
        std::set<std::vector<CycRat>, oracle::RayLess> expected;
        for (int x = 1; x < 4; x++) {
            std::vector<int> e(4, -1);
            e[x] = 0;
            expected.insert(oracle::ray(phased_column(e, 2)));
        }
        for (int u = 1; u < 4; u++) {
            for (int v = u + 1; v < 4; v++) {
                for (int k = 0; k < 4; k++) {
                    std::vector<int> e(4, -1);
                    e[u] = 0;
                    e[v] = k;
                    expected.insert(oracle::ray(phased_column(e, 2)));
                }
            }
        }
        auto states = states_orthogonal_to_zero(2, 2);
        std::set<std::vector<CycRat>, oracle::RayLess> got;
        for (const auto &s : states) {
            got.insert(oracle::ray(s.amplitudes().m));
        }
        c.expect(states.size() == 15, "count");
        c.expect(expected.size() == 15 && got.size() == 15 && std::equal(got.begin(), got.end(), expected.begin()),
                 "explicit list");
    });

    all &= criterion(3, "P_n maximiser of L is lambda (2,2) and (2,3)", 20, [](Check &c) {
        PnReport q = pn_polytope_lp(2, 2);
        CycMatrix lam(4, 4, tau_order(2));
        const long num[4][4] = {{0, 0, 0, 0}, {0, 2, 1, 1}, {0, 1, 2, 1}, {0, 1, 1, 2}};
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                lam(i, j) = CycRat(tau_order(2), rat(num[i][j], 6));
            }
        }
        c.expect(q.optimum == rat(1, 2), "(2,2) optimum 1/2");
        c.expect(q.unique, "(2,2) unique");
        c.expect(q.sigma == lam, "(2,2) sigma");
        PnReport t = pn_polytope_lp(2, 3);
        c.expect(t.optimum == rat(1, 3), "(2,3) optimum 1/3");
        c.expect(t.unique, "(2,3) unique");
        c.expect(t.sigma == lambda_oracle(2, 3), "(2,3) sigma");
        c.note << "L_max 1/2 and 1/3, unique ";
    });

    all &= criterion(4, "Lambda(2,2) is CSP; explicit weights verify", 1800, [](Check &c) {
        Channel lam = lambda_channel(2, 2);
        // Choi register: output qubits then input qubits, index out·4 + in.
        std::vector<StabState> states;
        std::vector<long> pp(16, 0);
        for (int o = 0; o < 4; o++) {
            pp[o * 4] = 1;
        }
        states.push_back(state_of(column(pp, 2), 4, 2));
        for (int z = 1; z < 4; z++) {
            std::vector<long> v(16, 0);
            for (int x = 0; x < 4; x++) {
                if (__builtin_popcount(z & x) % 2 == 1) {
                    v[x * 4 + x] = 1;
                }
            }
            states.push_back(state_of(column(v, 2), 4, 2));
        }
        std::vector<Rational> w(4, rat(1, 4));
        c.expect(verify_csp_weights(lam, states, w), "explicit weights");

        auto t0 = Clock::now();
        CspOptions o;
        o.candidates = states;
        CspCertificate cand = certify_csp(lam, o);
        double cand_s = since(t0);
        c.expect(cand.feasible && cand.verified, "candidate mode");
        c.expect(cand_s < 1.0, "candidate mode under 1 s");

        t0 = Clock::now();
        CspCertificate full = certify_csp(lam);
        c.expect(full.feasible && full.verified, "full LP");
        c.expect(full.generators == 36720, "full LP generator count");
        c.note << "candidate " << std::setprecision(2) << cand_s << " s, full LP " << since(t0) << " s over "
               << full.generators << " states ";
    });

    all &= criterion(5, "negative control has an exact separating functional", 1800, [&](Check &c) {
        Channel ch = builtin_channel("measure00-hadamard", 2, 2);
        CspCertificate cert = certify_csp(ch);
        c.expect(!cert.feasible, "infeasible");
        c.expect(cert.verified, "library re-check");
        PauliCoordinates pc(4, 2);
        c.expect(sgn(functional_at(cert.functional, pc.of_matrix(choi(ch)))) < 0, "negative on J");
        auto all_states = enumerate_stab_states(4, 2);
        bool sparse_ok = true;
        for (const auto &s : all_states) {
            std::vector<Rational> coords(pc.rows());
            for (const auto &[r, v] : pc.of_state(s).entries) {
                coords[r] = v;
            }
            sparse_ok = sparse_ok && sgn(functional_at(cert.functional, coords)) >= 0;
        }
        c.expect(sparse_ok, "nonnegative on every stabiliser state");
        // Dense trace path on a sample, independent of the state formula.
        bool dense_ok = true;
        for (int t = 0; t < 400; t++) {
            const StabState &s = all_states[rng() % all_states.size()];
            dense_ok = dense_ok && sgn(functional_at(cert.functional, pc.of_matrix(s.density()))) >= 0;
        }
        c.expect(dense_ok, "dense sample");
        c.note << "functional on " << pc.rows() + 1 << " rows ";
    });

    all &= criterion(6, "SO∩AD bound below 1/d", 900, [](Check &c) {
        SoAdBoundReport r22 = so_ad_upper_bound(2, 2);
        c.expect(r22.bound_value == rat(5, 12), "(2,2) bound 5/12");
        c.expect(r22.margin == rat(1, 12), "(2,2) margin 1/12");
        c.expect(r22.partitions == 4, "(2,2) four partitions");
        for (auto [n, d] : {std::pair<size_t, int>{2, 2}, {3, 2}, {2, 3}}) {
            SoAdBoundReport r = so_ad_upper_bound(n, d);
            auto [best, count] = partition_oracle(n, d);
            uint64_t dim = oracle::ipow(d, n);
            std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
            c.expect(r.partitions == count, tag + " partition count");
            c.expect(r.best_sum_sq == best, tag + " best sum");
            c.expect(r.bound_value == rat((long)best, (long)(dim * (dim - 1))), tag + " bound");
            c.expect(r.bound_value < rat(1, d), tag + " strict");
            c.note << tag << " " << rational_str(r.bound_value) << " ";
        }
    });

    all &= criterion(7, "Lambda invariance facts", 60, [](Check &c) {
        for (auto [n, d] : {std::pair<size_t, int>{2, 2}, {3, 2}, {2, 3}}) {
            Channel lam = lambda_channel(n, d);
            std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
            c.expect(!kernel_pauli_scan(lam).has_value(), tag + " kernel scan");
            c.expect(!clifford_dilation_obstruction(lam).pauli_to_pauli, tag + " dilation");
        }
    });

    all &= criterion(8, "channel identities as exact dense equalities", 300, [&](Check &c) {
        for (int d : {2, 3}) {
            NonCommutingCodes r = verify_non_commuting_codes(code_of(1, d, {PauliOp::x(1, d, 0)}),
                                                             code_of(1, d, {PauliOp::z(1, d, 0)}));
            c.expect(r.verified, "non-commuting n=1");
            for (int t = 0; t < 4; t++) {
                std::vector<Gate> gates;
                for (int g = 0; g < 6; g++) {
                    switch (rng() % 4) {
                        case 0: gates.push_back(Gate::h(rng() % 2)); break;
                        case 1: gates.push_back(Gate::s(rng() % 2)); break;
                        case 2: gates.push_back(Gate::cx(0, 1)); break;
                        default: gates.push_back(Gate::cx(1, 0)); break;
                    }
                }
                CliffordOp u = clifford_from_gates(2, d, gates);
                PauliOp p1 = conjugate(u, PauliOp::x(2, d, 0)), p2 = conjugate(u, PauliOp::z(2, d, 0));
                c.expect(verify_non_commuting_codes(code_of(2, d, {p1}), code_of(2, d, {p2})).verified,
                         "non-commuting n=2 conjugated");
            }
            bool threw = false;
            try {
                verify_non_commuting_codes(code_of(2, d, {PauliOp::z(2, d, 0)}), code_of(2, d, {PauliOp::z(2, d, 1)}));
            } catch (const NotApplicable &) {
                threw = true;
            }
            c.expect(threw, "commuting pair NotApplicable");
        }
        size_t replacements = 0;
        for (int d : {2, 3}) {
            for (auto [n, k] : {std::pair<size_t, size_t>{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}}) {
                if (d == 3 && n + k > 3) {
                    continue;
                }
                auto states = enumerate_stab_states(k, d);
                for (int t = 0; t < 10; t++) {
                    FVec a = FVec::from_index(rng() % oracle::ipow(d, 2 * n), 2 * n, d);
                    FVec b = FVec::from_index(1 + rng() % (oracle::ipow(d, 2 * k) - 1), 2 * k, d);
                    const StabState &s = states[rng() % states.size()];
                    if (s.stabiliser_group().element_with(b)) {
                        continue;
                    }
                    c.expect(verify_measurement_replacement(a, b, s).verified, "measurement replacement");
                    replacements++;
                }
            }
        }
        for (size_t n = 1; n <= 4; n++) {
            c.expect(channels_equal(lambda_channel(n, 2), ad_embed(lambda_oracle(n, 2), n, 2)),
                     "Kraus vs Hadamard product n=" + std::to_string(n));
        }
        for (int d : {2, 3}) {
            for (size_t m : {1u, 2u}) {
                auto states = enumerate_stab_states(m, d);
                const StabState &s = states[rng() % states.size()];
                StabCode code = code_of(m, d, {s.stabiliser_group().generators()[0]});
                for (int zp = 0; zp < d; zp++) {
                    PinchingDecomposition p = verify_pinching_decomposition(code, FVec({zp, 1}, d));
                    c.expect(p.equal && p.cliffords, "pinching");
                }
            }
        }
        c.note << replacements << " measurement replacements ";
    });

    all &= criterion(9, "polar form round trips", 300, [&](Check &c) {
        auto check = [&](const StabState &s) {
            PolarForm f = polar_form(s);
            ScaledMatrix phase(CycMatrix(1, 1, tau_order(s.d())), f.global_phase.half_exp, s.d());
            phase.m(0, 0) = f.global_phase.value;
            return polar_reconstruction(f, s.d()) * phase == s.amplitudes();
        };
        size_t ok = 0;
        for (const auto &s : enumerate_stab_states(2, 2)) {
            ok += check(s);
        }
        c.expect(ok == 60, "all 60 two-qubit states");
        auto four = enumerate_stab_states(4, 2);
        size_t ok4 = 0;
        for (int t = 0; t < 500; t++) {
            ok4 += check(four[rng() % four.size()]);
        }
        c.expect(ok4 == 500, "500 sampled four-qubit states");
        c.note << ok << " + " << ok4 << " ";
    });

    all &= criterion(10, "single-qubit probe CSP_1 = SO_1", 600, [](Check &c) {
        Csp1Report r = csp1_equals_so1(2, 64, 20261018);
        c.expect(r.objectives == 64, "64 objectives");
        c.expect(r.mismatches.empty(), "zero mismatches");
        c.expect(r.constructed == r.constructed_csp, "constructed channels CSP");
        c.note << r.probe_matches << " matched, " << r.degenerate << " degenerate, " << r.mismatches.size()
               << " mismatches ";
    });

    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
    return all ? 0 : 1;
}
