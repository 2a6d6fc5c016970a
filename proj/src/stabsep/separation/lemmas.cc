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

#include "stabsep/separation/separation.h"
#include "stabsep/util/errors.h"

namespace stabsep {

namespace {

ScaledMatrix embed_gate(const Gate &g, size_t n, int d) {
    ScaledMatrix local = gate_matrix(g, d);
    uint64_t dim = checked_pow(d, n);
    CycMatrix full(dim, dim, tau_order(d));
    for (uint64_t col = 0; col < dim; col++) {
        FVec x = FVec::from_index(col, n, d);
        if (g.arity() == 1) {
            for (int j = 0; j < d; j++) {
                const CycRat &v = local.m(j, x[g.q0]);
                if (!v.is_zero()) {
                    FVec y = x;
                    y.e[g.q0] = j;
                    full(y.index(), col) = v;
                }
            }
        } else {
            uint64_t in = (uint64_t)x[g.q0] * d + x[g.q1];
            for (int j = 0; j < d * d; j++) {
                const CycRat &v = local.m(j, in);
                if (!v.is_zero()) {
                    FVec y = x;
                    y.e[g.q0] = j / d;
                    y.e[g.q1] = j % d;
                    full(y.index(), col) = v;
                }
            }
        }
    }
    return ScaledMatrix(full, local.half_exp, d);
}

ScaledMatrix plain(const CycMatrix &m, int d) {
    return ScaledMatrix(m, 0, d);
}

// (1/d) Σ_j ω^{−xj} W^j: the projector onto the ω^x eigenspace of W.
CycMatrix eigenprojector(const CycMatrix &w, int d, int x) {
    int order = tau_order(d);
    CycMatrix acc(w.rows(), w.cols(), order);
    CycMatrix pw = CycMatrix::identity(w.rows(), order);
    for (int j = 0; j < d; j++) {
        acc += pw * CycRat::root(order, -2L * x * j);
        pw = pw * w;
    }
    return acc * Rational(1, d);
}

Channel single_term(const PolarTerm &t, size_t n, int d) {
    ScaledMatrix k = circuit_unitary(n, d, t.u) * plain(projector(t.p), d);
    return Channel::from_kraus(d, n, n, {{k, 1}});
}

}  // namespace

int commutation_exponent(const PauliOp &p, const PauliOp &q) {
    int d = p.d();
    int diff = fmod_pos((long)pauli_mul(p, q).phase - pauli_mul(q, p).phase, tau_order(d));
    // ω = τ², so the phase difference is 2c mod D.
    if (d == 2) {
        return (diff / 2) % 2;
    }
    return fmod_pos((long)diff * finv(2, d), d);
}

ScaledMatrix circuit_unitary(size_t n, int d, const std::vector<Gate> &gates, const Caps &caps) {
    uint64_t dim = checked_pow(d, n);
    if (dim > caps.dense_cap) {
        throw CapExceeded("circuit dimension exceeds dense cap");
    }
    ScaledMatrix u(CycMatrix::identity(dim, tau_order(d)), 0, d);
    for (const auto &g : gates) {
        if (g.q0 >= n || (g.arity() == 2 && g.q1 >= n)) {
            throw DimensionMismatch("gate " + g.str() + " acts outside the register");
        }
        u = u * embed_gate(g, n, d);
    }
    return u;
}

NonCommutingCodes verify_non_commuting_codes(const StabCode &p1, const StabCode &p2, const Caps &caps) {
    if (p1.k() != 1 || p2.k() != 1) {
        throw NotApplicable("both codes must have a single stabiliser generator");
    }
    size_t n = p1.n();
    int d = p1.group.d();
    if (p2.n() != n || p2.group.d() != d) {
        throw DimensionMismatch("codes live on different registers");
    }
    const PauliOp &g1 = p1.group.generators()[0];
    const PauliOp &g2 = p2.group.generators()[0];
    if (commutes(g1, g2)) {
        throw NotApplicable("the code generators commute");
    }
    // W with W Z_0 W† = g2 and W X_0^c W† = g1, where g2 g1 = ω^c g1 g2.
    int c = commutation_exponent(g2, g1);
    CliffordOp w = find_clifford_mapping({{PauliOp::z(n, d, 0), g2}, {PauliOp::x(n, d, 0, c), g1}});
    NonCommutingCodes out;
    out.v = compose(compose(w, gate_tableau(Gate::h(0), n, d)), inverse(w));

    ScaledMatrix wd = clifford_unitary(w, caps);
    ScaledMatrix vd = wd * circuit_unitary(n, d, {Gate::h(0)}, caps) * wd.adjoint();
    ScaledMatrix a = plain(projector(p1, caps), d), b = plain(projector(p2, caps), d);
    ScaledMatrix rhs = vd * b;
    rhs.half_exp -= 1;
    out.verified = a * b == rhs && clifford_from_unitary(vd, n, d) == out.v;
    return out;
}

MeasurementReplacement verify_measurement_replacement(const FVec &a, const FVec &b, const StabState &s,
                                                      const Caps &caps) {
    int d = s.d();
    size_t n = a.size() / 2, k = s.n();
    if (a.size() % 2 || b.size() != 2 * k || a.d != d || b.d != d || n == 0) {
        throw DimensionMismatch("a, b and s do not fit together");
    }
    if (b.is_zero()) {
        throw NotApplicable("b = 0: every state is an eigenstate");
    }
    PauliOp bw = PauliOp::weyl(b);
    std::vector<PauliOp> g = s.stabiliser_group().generators();
    std::vector<int> cs;
    size_t pivot = g.size();
    for (size_t i = 0; i < g.size(); i++) {
        cs.push_back(commutation_exponent(bw, g[i]));
        if (cs.back() != 0 && pivot == g.size()) {
            pivot = i;
        }
    }
    if (pivot == g.size()) {
        throw NotApplicable("s is an eigenstate of w(b)");
    }
    // Ancilla frame: w(b) ↦ X_0, the stabilisers of s ↦ Z's (so |s⟩ ↦ |0…0⟩).
    std::vector<std::pair<PauliOp, PauliOp>> anc{{bw, PauliOp::x(k, d, 0)}};
    int m = 1;
    while (commutation_exponent(PauliOp::x(k, d, 0), PauliOp::z(k, d, 0, m)) != cs[pivot]) {
        m++;
    }
    anc.push_back({g[pivot], PauliOp::z(k, d, 0, m)});
    size_t slot = 1;
    int inv = finv(cs[pivot], d);
    for (size_t i = 0; i < g.size(); i++) {
        if (i == pivot) {
            continue;
        }
        long t = fmod_pos(-(long)cs[i] * inv, d);
        anc.push_back({pauli_mul(g[i], pauli_pow(g[pivot], t)), PauliOp::z(k, d, slot++)});
    }
    CliffordOp c_anc = find_clifford_mapping(anc);
    CliffordOp c_sys = a.is_zero() ? CliffordOp::identity(n, d)
                                   : find_clifford_mapping({{PauliOp::weyl(a), PauliOp::z(n, d, 0)}});

    MeasurementReplacement out;
    out.t = tensor(c_sys, c_anc);
    PauliOp meas = pauli_tensor(PauliOp::weyl(a), bw);
    FVec frame(2 * (n + k), d);
    if (!a.is_zero()) {
        frame.e[0] = 1;
    }
    frame.e[(n + k) + n] = 1;
    bool ok = conjugate(out.t, meas) == PauliOp(0, frame);

    ScaledMatrix td = clifford_unitary(out.t, caps);
    CycMatrix wm = weyl_matrix(meas, caps);
    ScaledMatrix inputs = plain(CycMatrix::identity(checked_pow(d, n), tau_order(d)), d).kron(s.amplitudes(caps));
    for (int x = 0; x < d; x++) {
        // G_x |z⟩|0⟩ = |z⟩ H|z − x⟩: the ω^x branch of |0⟩ in the X eigenbasis.
        std::vector<Gate> gx;
        if (!a.is_zero()) {
            gx.push_back(Gate::cz(0, n));
        }
        gx.push_back(Gate::h(n));
        if (x != 0) {
            gx.push_back(Gate::x(n, d - x));
        }
        out.u.push_back(compose(compose(inverse(out.t), clifford_from_gates(n + k, d, gx)), out.t));
        ScaledMatrix ud = td.adjoint() * circuit_unitary(n + k, d, gx, caps) * td;
        ScaledMatrix lhs = plain(eigenprojector(wm, d, x), d) * inputs;
        ScaledMatrix rhs = ud * inputs;
        rhs.half_exp -= 1;
        ok = ok && lhs == rhs && clifford_from_unitary(ud, n + k, d) == out.u.back();
    }
    out.verified = ok;
    return out;
}

Channel polar_channel(const PolarDecomposition &dec) {
    std::vector<KrausOp> ops;
    for (const auto &t : dec.terms) {
        if (t.p.n() != dec.n || t.p.group.d() != dec.d) {
            throw DimensionMismatch("polar term on the wrong register");
        }
        ScaledMatrix kop = circuit_unitary(dec.n, dec.d, t.u) * plain(projector(t.p), dec.d);
        // d^n / rank P = d^k for a rank-k stabiliser group.
        ops.push_back({kop, t.lambda * Rational((long)checked_pow(dec.d, t.p.k()))});
    }
    return Channel::from_kraus(dec.d, dec.n, dec.n, std::move(ops));
}

DoubleProjectorSplit verify_double_projector_reduction(const PolarDecomposition &dec) {
    size_t m = dec.terms.size();
    std::vector<CycMatrix> proj;
    for (const auto &t : dec.terms) {
        proj.push_back(projector(t.p));
    }
    for (size_t k = 0; k < m; k++) {
        for (size_t l = k + 1; l < m; l++) {
            if (proj[k] != proj[l]) {
                continue;
            }
            if (channels_equal(single_term(dec.terms[k], dec.n, dec.d), single_term(dec.terms[l], dec.n, dec.d))) {
                continue;  // the two terms merge
            }
            DoubleProjectorSplit out;
            out.k = k;
            out.l = l;
            out.ck = dec.terms[k].lambda;
            out.cl = dec.terms[l].lambda;
            out.ek = dec;
            out.el = dec;
            Rational both = out.ck + out.cl;
            out.ek.terms[k].lambda = both;
            out.ek.terms.erase(out.ek.terms.begin() + l);
            out.el.terms[l].lambda = both;
            out.el.terms.erase(out.el.terms.begin() + k);

            Channel e = polar_channel(dec), ek = polar_channel(out.ek), el = polar_channel(out.el);
            out.tp = is_tp(ek) && is_tp(el);
            out.distinct = !channels_equal(ek, el);
            out.convex = true;
            uint64_t dim = e.dim_in();
            for (uint64_t x = 0; x < dim && out.convex; x++) {
                for (uint64_t y = 0; y < dim && out.convex; y++) {
                    CycMatrix mix = (ek.unit_image(x, y) * out.ck + el.unit_image(x, y) * out.cl) * Rational(1 / both);
                    out.convex = mix == e.unit_image(x, y);
                }
            }
            return out;
        }
    }
    throw NotApplicable("no pair of distinct terms shares a projector");
}

PinchingDecomposition verify_pinching_decomposition(const StabCode &ptilde, const FVec &basis, const Caps &caps) {
    int d = ptilde.group.d();
    size_t m = ptilde.n();
    if (basis.size() != 2 || basis.d != d) {
        throw DimensionMismatch("basis must be a single-qudit Pauli vector");
    }
    if (basis[1] == 0) {
        throw NotApplicable("computational eigenbasis: diag(√d s_i) is not unitary");
    }
    int order = tau_order(d);
    CycMatrix pt = projector(ptilde, caps);
    StabBasis sb(StabGroup(1, d, {PauliOp::weyl(basis)}));

    PinchingDecomposition out;
    out.cliffords = true;
    std::vector<KrausOp> lhs, rhs;
    for (int x = 0; x < d; x++) {
        CycMatrix e(d, d, order);
        e(x, x) = CycRat(order, 1);
        lhs.push_back({plain(pt.kron(e), d), 1});
    }
    for (const auto &s : sb.states()) {
        if (s.support().dim() != 1) {
            throw VerificationFailure("eigenstate without full support");
        }
        ScaledMatrix amp = s.amplitudes(caps);
        CycMatrix c(d, d, order);
        // amp = d^{-1/2} v with |v_x| = 1, so C = diag(v).
        for (int x = 0; x < d; x++) {
            c(x, x) = amp.m(x, 0);
            out.cliffords = out.cliffords && c(x, x).root_exponent().has_value();
        }
        if (amp.half_exp != -1) {
            throw VerificationFailure("unexpected amplitude scaling");
        }
        try {
            clifford_from_unitary(plain(c, d), 1, d);
        } catch (const StabsepError &) {
            out.cliffords = false;
        }
        out.c.push_back(c);
        rhs.push_back({plain(pt.kron(c), d), Rational(1, d)});
    }
    Channel left = Channel::from_kraus(d, m + 1, m + 1, lhs);
    Channel right = Channel::from_kraus(d, m + 1, m + 1, rhs);
    out.equal = channels_equal(left, right);
    return out;
}

}  // namespace stabsep
