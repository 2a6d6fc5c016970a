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

#include "stabsep/pauli/clifford.h"

#include <map>
#include <mutex>
#include <regex>
#include <sstream>
#include <tuple>

#include "stabsep/util/errors.h"

namespace stabsep {

// ---------------------------------------------------------------------------
// Gates.

std::string Gate::str() const {
    std::stringstream ss;
    switch (kind) {
        case Kind::H:
            ss << "H(" << q0 << ")";
            break;
        case Kind::S:
            ss << "S(" << q0 << ")";
            break;
        case Kind::CX:
            ss << "CX(" << q0 << "," << q1 << ")";
            break;
        case Kind::CZ:
            ss << "CZ(" << q0 << "," << q1 << ")";
            break;
        case Kind::X:
            ss << "X(" << q0 << ")";
            break;
        case Kind::Z:
            ss << "Z(" << q0 << ")";
            break;
    }
    if ((kind == Kind::X || kind == Kind::Z) && param != 1) {
        ss << "^" << param;
    }
    return ss.str();
}

Gate parse_gate(const std::string &text) {
    static const std::regex re(R"(^\s*(H|S|CX|CZ|X|Z)\((\d+)(?:,(\d+))?\)(?:\^(-?\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) {
        throw InvalidInput("malformed gate: '" + text + "'");
    }
    std::string name = m[1];
    Gate g{Gate::Kind::H, std::stoul(m[2]), 0, 1};
    bool two = name == "CX" || name == "CZ";
    if (two != m[3].matched) {
        throw InvalidInput("wrong number of targets in gate: '" + text + "'");
    }
    if (m[4].matched && name != "X" && name != "Z") {
        throw InvalidInput("only X and Z gates take a power: '" + text + "'");
    }
    if (name == "H") {
        g.kind = Gate::Kind::H;
    } else if (name == "S") {
        g.kind = Gate::Kind::S;
    } else if (name == "CX") {
        g.kind = Gate::Kind::CX;
    } else if (name == "CZ") {
        g.kind = Gate::Kind::CZ;
    } else if (name == "X") {
        g.kind = Gate::Kind::X;
    } else {
        g.kind = Gate::Kind::Z;
    }
    if (two) {
        g.q1 = std::stoul(m[3]);
    }
    if (m[4].matched) {
        g.param = std::stoi(m[4]);
    }
    return g;
}

ScaledMatrix gate_matrix(const Gate &g, int d) {
    check_prime(d);
    int order = tau_order(d);
    int w = omega_exponent(d);
    if (g.arity() == 1) {
        CycMatrix m(d, d, order);
        int half_exp = 0;
        for (long x = 0; x < d; x++) {
            switch (g.kind) {
                case Gate::Kind::H:
                    for (long y = 0; y < d; y++) {
                        m(y, x) = CycRat::root(order, w * x * y);
                    }
                    half_exp = -1;
                    break;
                case Gate::Kind::S:
                    m(x, x) = CycRat::root(order, x * x);
                    break;
                case Gate::Kind::X:
                    m(fmod_pos(x + g.param, d), x) = CycRat(order, 1);
                    break;
                case Gate::Kind::Z:
                    m(x, x) = CycRat::root(order, (long)w * g.param * x);
                    break;
                default:
                    break;
            }
        }
        return ScaledMatrix(m, half_exp, d);
    }
    CycMatrix m(d * d, d * d, order);
    for (long a = 0; a < d; a++) {
        for (long b = 0; b < d; b++) {
            long in = a * d + b;
            if (g.kind == Gate::Kind::CX) {
                m(a * d + (a + b) % d, in) = CycRat(order, 1);
            } else {
                m(in, in) = CycRat::root(order, (long)w * a * b);
            }
        }
    }
    return ScaledMatrix(m, 0, d);
}

// ---------------------------------------------------------------------------
// Tableau basics.

CliffordOp::CliffordOp(size_t n, int d, std::vector<PauliOp> images) : n_(n), d_(d), images_(std::move(images)) {
    check_prime(d);
    if (images_.size() != 2 * n) {
        throw InvalidInput("Clifford tableau needs 2n images");
    }
    for (const auto &p : images_) {
        if (p.n() != n || p.d() != d) {
            throw DimensionMismatch("Clifford image has wrong size");
        }
        if (!pauli_pow(p, d).is_identity()) {
            throw InvalidInput("Clifford image " + p.str() + " does not have order d");
        }
    }
    for (size_t i = 0; i < 2 * n; i++) {
        for (size_t j = 0; j < 2 * n; j++) {
            int expect = 0;
            if (i < n && j == i + n) {
                expect = 1;
            } else if (i >= n && j + n == i) {
                expect = d - 1;
            }
            if (symp(images_[i].a, images_[j].a) != expect) {
                throw InvalidInput("Clifford images violate the symplectic relations");
            }
        }
    }
}

CliffordOp CliffordOp::identity(size_t n, int d) {
    std::vector<PauliOp> images;
    for (size_t i = 0; i < n; i++) {
        images.push_back(PauliOp::z(n, d, i));
    }
    for (size_t i = 0; i < n; i++) {
        images.push_back(PauliOp::x(n, d, i));
    }
    return CliffordOp(n, d, images);
}

CliffordOp CliffordOp::from_pauli(const PauliOp &w) {
    CliffordOp id = identity(w.n(), w.d());
    std::vector<PauliOp> images;
    for (const auto &g : id.images()) {
        images.push_back(pauli_rephase(g, 2L * symp(w.a, g.a)));
    }
    return CliffordOp(w.n(), w.d(), images);
}

CliffordOp CliffordOp::from_symplectic(const FMatrix &m, const std::vector<int> &phases) {
    size_t n = m.rows / 2;
    std::vector<PauliOp> images;
    for (size_t j = 0; j < 2 * n; j++) {
        FVec a(2 * n, m.d);
        for (size_t i = 0; i < 2 * n; i++) {
            a.e[i] = m(i, j);
        }
        images.emplace_back(phases.empty() ? 0 : phases[j], a);
    }
    return CliffordOp(n, m.d, images);
}

FMatrix CliffordOp::symplectic() const {
    FMatrix m(2 * n_, 2 * n_, d_);
    for (size_t j = 0; j < 2 * n_; j++) {
        for (size_t i = 0; i < 2 * n_; i++) {
            m(i, j) = images_[j].a[i];
        }
    }
    return m;
}

std::vector<int> CliffordOp::pauli_part() const {
    std::vector<int> out;
    for (const auto &p : images_) {
        out.push_back(p.phase);
    }
    return out;
}

PauliOp conjugate(const CliffordOp &c, const PauliOp &p) {
    size_t n = c.n();
    if (p.n() != n || p.d() != c.d()) {
        throw DimensionMismatch("conjugate: Pauli and Clifford sizes differ");
    }
    // τ^phase w(a) = τ^{phase − γ(a)} Π Z_i^{a_z,i} Π X_i^{a_x,i}.
    PauliOp r = PauliOp::identity(n, c.d());
    for (size_t i = 0; i < 2 * n; i++) {
        if (p.a[i]) {
            r = pauli_mul(r, pauli_pow(c.images()[i], p.a[i]));
        }
    }
    return pauli_rephase(r, (long)p.phase - pauli_gamma(p.a));
}

CliffordOp compose(const CliffordOp &a, const CliffordOp &b) {
    if (a.n() != b.n() || a.d() != b.d()) {
        throw DimensionMismatch("compose: Clifford sizes differ");
    }
    std::vector<PauliOp> images;
    for (const auto &g : b.images()) {
        images.push_back(conjugate(a, g));
    }
    return CliffordOp(a.n(), a.d(), images);
}

CliffordOp inverse(const CliffordOp &c) {
    auto minv = c.symplectic().inverse();
    if (!minv) {
        throw VerificationFailure("Clifford tableau has a singular symplectic part");
    }
    size_t n = c.n();
    std::vector<PauliOp> images;
    for (size_t j = 0; j < 2 * n; j++) {
        FVec a(2 * n, c.d());
        for (size_t i = 0; i < 2 * n; i++) {
            a.e[i] = (*minv)(i, j);
        }
        PauliOp q = conjugate(c, PauliOp(0, a));
        images.emplace_back(-q.phase, a);
    }
    return CliffordOp(n, c.d(), images);
}

namespace {

PauliOp place(const PauliOp &local, const std::vector<size_t> &qudits, size_t n) {
    size_t m = local.n();
    FVec a(2 * n, local.d());
    for (size_t i = 0; i < m; i++) {
        a.e[qudits[i]] = local.a[i];
        a.e[n + qudits[i]] = local.a[m + i];
    }
    return PauliOp(local.phase, a);
}

CliffordOp place(const CliffordOp &local, const std::vector<size_t> &qudits, size_t n) {
    std::vector<PauliOp> images = CliffordOp::identity(n, local.d()).images();
    size_t m = local.n();
    for (size_t i = 0; i < m; i++) {
        images[qudits[i]] = place(local.images()[i], qudits, n);
        images[n + qudits[i]] = place(local.images()[m + i], qudits, n);
    }
    return CliffordOp(n, local.d(), images);
}

}  // namespace

CliffordOp tensor(const CliffordOp &a, const CliffordOp &b) {
    if (a.d() != b.d()) {
        throw DimensionMismatch("tensor: Clifford dimensions differ");
    }
    size_t n = a.n() + b.n();
    std::vector<size_t> qa, qb;
    for (size_t i = 0; i < a.n(); i++) {
        qa.push_back(i);
    }
    for (size_t i = 0; i < b.n(); i++) {
        qb.push_back(a.n() + i);
    }
    return compose(place(a, qa, n), place(b, qb, n));
}

CliffordOp embed(const CliffordOp &c, size_t offset, size_t n) {
    if (offset + c.n() > n) {
        throw DimensionMismatch("embed: out of range");
    }
    std::vector<size_t> q;
    for (size_t i = 0; i < c.n(); i++) {
        q.push_back(offset + i);
    }
    return place(c, q, n);
}

CliffordOp gate_tableau(const Gate &g, size_t n, int d) {
    if (g.q0 >= n || (g.arity() == 2 && (g.q1 >= n || g.q1 == g.q0))) {
        throw InvalidInput("bad qudit index in gate " + g.str());
    }
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, CliffordOp> cache;
    int param = (g.kind == Gate::Kind::X || g.kind == Gate::Kind::Z) ? fmod_pos(g.param, d) : 1;
    auto key = std::make_tuple((int)g.kind, d, param);
    CliffordOp local;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it == cache.end()) {
            Gate lg = g;
            lg.q0 = 0;
            lg.q1 = 1;
            lg.param = param;
            it = cache.emplace(key, clifford_from_unitary(gate_matrix(lg, d), lg.arity(), d)).first;
        }
        local = it->second;
    }
    std::vector<size_t> q{g.q0};
    if (g.arity() == 2) {
        q.push_back(g.q1);
    }
    return place(local, q, n);
}

CliffordOp clifford_from_gates(size_t n, int d, const std::vector<Gate> &gates) {
    CliffordOp c = CliffordOp::identity(n, d);
    for (const auto &g : gates) {
        c = compose(c, gate_tableau(g, n, d));
    }
    return c;
}

// ---------------------------------------------------------------------------
// Dense reconstruction.

namespace {

void accumulate_pauli(const PauliOp &p, CycMatrix &acc) {
    size_t n = p.n();
    int d = p.d();
    uint64_t dim = acc.rows();
    FVec z = p.z_part(), x = p.x_part();
    int base = p.phase - pauli_gamma(p.a);
    for (uint64_t y = 0; y < dim; y++) {
        FVec row = FVec::from_index(y, n, d) + x;
        acc(row.index(), y) += CycRat::root(p.order(), base + 2L * dot(z, row));
    }
}

}  // namespace

ScaledMatrix stabiliser_state_vector(const std::vector<PauliOp> &gens, const Caps &caps) {
    if (gens.empty()) {
        throw InvalidInput("empty generator list");
    }
    size_t n = gens[0].n();
    int d = gens[0].d();
    uint64_t dim = checked_pow(d, n);
    if (dim > caps.dense_cap) {
        throw CapExceeded("dense dimension exceeds cap");
    }
    std::vector<FVec> vs;
    for (const auto &g : gens) {
        vs.push_back(g.a);
    }
    if (gens.size() != n || rank_of(vs, 2 * n, d) != n || !is_isotropic(vs)) {
        throw InvalidInput("generators do not form a maximal isotropic set");
    }
    int order = tau_order(d);
    CycMatrix acc(dim, dim, order);
    std::vector<int> k(n, 0);
    while (true) {
        PauliOp e = PauliOp::identity(n, d);
        for (size_t i = 0; i < n; i++) {
            if (k[i]) {
                e = pauli_mul(e, pauli_pow(gens[i], k[i]));
            }
        }
        if (e.a.is_zero() && e.phase != 0) {
            throw InvalidInput("stabiliser group contains a nontrivial multiple of the identity");
        }
        accumulate_pauli(e, acc);
        size_t i = 0;
        while (i < n && ++k[i] == d) {
            k[i++] = 0;
        }
        if (i == n) {
            break;
        }
    }
    // acc = d^n |ψ⟩⟨ψ|. Column c of the first nonzero diagonal gives ψ·conj(ψ_c).
    uint64_t c = 0;
    while (acc(c, c).is_zero()) {
        c++;
    }
    Rational diag = acc(c, c).rational() / Rational(mpz_class(dim));  // |ψ_c|² = d^{-k}
    int k_exp = 0;
    Rational t = diag;
    while (t < 1) {
        t *= d;
        k_exp++;
    }
    if (t != 1) {
        throw VerificationFailure("stabiliser amplitude is not a power of d^{-1/2}");
    }
    CycMatrix psi(dim, 1, order);
    Rational scale = Rational(1) / Rational(mpz_class(dim));
    for (uint64_t r = 0; r < dim; r++) {
        psi(r, 0) = acc(r, c) * scale;
    }
    // ψ = (column) / ψ_c with ψ_c = d^{-k/2}, i.e. column · d^{k/2}.
    return ScaledMatrix(psi, k_exp, d).normalised();
}

ScaledMatrix clifford_unitary(const CliffordOp &c, const Caps &caps) {
    size_t n = c.n();
    int d = c.d();
    std::vector<PauliOp> zs(c.images().begin(), c.images().begin() + n);
    ScaledMatrix col0 = stabiliser_state_vector(zs, caps);
    uint64_t dim = checked_pow(d, n);
    CycMatrix u(dim, dim, tau_order(d));
    for (uint64_t x = 0; x < dim; x++) {
        FVec xv = FVec::from_index(x, n, d);
        PauliOp img = conjugate(c, PauliOp::from_zx(FVec(n, d), xv));
        CycMatrix col = apply_pauli(img, col0.m);
        for (uint64_t r = 0; r < dim; r++) {
            u(r, x) = col(r, 0);
        }
    }
    return ScaledMatrix(u, col0.half_exp, d);
}

CliffordOp clifford_from_unitary(const ScaledMatrix &u, size_t n, int d) {
    std::vector<PauliOp> images;
    ScaledMatrix ud = u.adjoint();
    CliffordOp id = CliffordOp::identity(n, d);
    for (const auto &g : id.images()) {
        ScaledMatrix conj = (u * ScaledMatrix(weyl_matrix(g, Caps{checked_pow(d, n), 0, 0}), 0, d)) * ud;
        conj = conj.normalised();
        if (conj.half_exp != 0) {
            throw InvalidInput("matrix is not a Clifford unitary");
        }
        auto p = pauli_from_matrix(conj.m, n, d);
        if (!p) {
            throw InvalidInput("matrix is not a Clifford unitary");
        }
        images.push_back(*p);
    }
    return CliffordOp(n, d, images);
}

// ---------------------------------------------------------------------------
// find_clifford_mapping.

namespace {

struct Paired {
    FVec s, t;
};

std::optional<FVec> solve_system(const std::vector<FVec> &rows, const std::vector<int> &rhs, size_t len, int d) {
    std::vector<FVec> aug;
    for (size_t i = 0; i < rows.size(); i++) {
        FVec r = rows[i];
        r.e.push_back(fmod_pos(rhs[i], d));
        aug.push_back(r);
    }
    Echelon ech = row_reduce(aug, len + 1, d);
    FVec x(len, d);
    for (size_t i = 0; i < ech.rows.size(); i++) {
        if (ech.pivots[i] == len) {
            return std::nullopt;
        }
        x.e[ech.pivots[i]] = ech.rows[i][len];
    }
    return x;
}

// A vector f with [w, f] = 0 for all w in ws and [u, f] = 1.
std::optional<FVec> symplectic_partner(const FVec &u, const std::vector<FVec> &ws, size_t n, int d) {
    for (const auto &f : symplectic_complement(ws, n, d)) {
        int s = symp(u, f);
        if (s) {
            return f * finv(s, d);
        }
    }
    return std::nullopt;
}

// Extends a list of hyperbolic pairs to a full symplectic basis by Gram–Schmidt on the complement.
void complete_symplectic_basis(std::vector<FVec> &es, std::vector<FVec> &fs, size_t n, int d) {
    std::vector<FVec> span = es;
    span.insert(span.end(), fs.begin(), fs.end());
    std::vector<FVec> rest = symplectic_complement(span, n, d);
    while (!rest.empty()) {
        FVec e = rest[0];
        size_t j = 1;
        while (j < rest.size() && symp(e, rest[j]) == 0) {
            j++;
        }
        if (j == rest.size()) {
            throw VerificationFailure("symplectic complement is degenerate");
        }
        FVec f = rest[j] * finv(symp(e, rest[j]), d);
        std::vector<FVec> next;
        for (size_t i = 1; i < rest.size(); i++) {
            if (i == j) {
                continue;
            }
            FVec w = rest[i];
            w = w - e * symp(w, f) + f * symp(w, e);
            next.push_back(w);
        }
        es.push_back(e);
        fs.push_back(f);
        rest = row_reduce(next, 2 * n, d).rows;
    }
}

}  // namespace

CliffordOp find_clifford_mapping(const std::vector<std::pair<PauliOp, PauliOp>> &pairs) {
    if (pairs.empty()) {
        throw InvalidInput("find_clifford_mapping needs at least one pair");
    }
    size_t n = pairs[0].first.n();
    int d = pairs[0].first.d();
    for (const auto &[s, t] : pairs) {
        if (s.n() != n || t.n() != n || s.d() != d || t.d() != d) {
            throw DimensionMismatch("find_clifford_mapping: mixed sizes");
        }
    }
    for (size_t i = 0; i < pairs.size(); i++) {
        for (size_t j = i + 1; j < pairs.size(); j++) {
            if (symp(pairs[i].first.a, pairs[j].first.a) != symp(pairs[i].second.a, pairs[j].second.a)) {
                throw NoSuchClifford("source and target commutation patterns differ");
            }
        }
    }
    // Independent subset of sources, in input order.
    std::vector<Paired> work;
    std::vector<size_t> used;
    {
        std::vector<FVec> acc_s, acc_t;
        for (size_t i = 0; i < pairs.size(); i++) {
            auto ns = acc_s;
            ns.push_back(pairs[i].first.a);
            if (rank_of(ns, 2 * n, d) == ns.size()) {
                auto nt = acc_t;
                nt.push_back(pairs[i].second.a);
                if (rank_of(nt, 2 * n, d) != nt.size()) {
                    throw NoSuchClifford("target vectors satisfy a relation the sources do not");
                }
                acc_s = ns;
                acc_t = nt;
                work.push_back({pairs[i].first.a, pairs[i].second.a});
                used.push_back(i);
            }
        }
    }
    // Parallel symplectic Gram–Schmidt.
    std::vector<FVec> es_s, fs_s, es_t, fs_t;
    while (!work.empty()) {
        Paired u = work.front();
        work.erase(work.begin());
        size_t j = 0;
        while (j < work.size() && symp(u.s, work[j].s) == 0) {
            j++;
        }
        Paired f;
        if (j < work.size()) {
            int s = finv(symp(u.s, work[j].s), d);
            f = {work[j].s * s, work[j].t * s};
            work.erase(work.begin() + j);
            for (auto &w : work) {
                int cf = symp(w.s, f.s), ce = symp(w.s, u.s);
                w.s = w.s - u.s * cf + f.s * ce;
                w.t = w.t - u.t * cf + f.t * ce;
            }
        } else {
            std::vector<FVec> ws_s = es_s, ws_t = es_t;
            ws_s.insert(ws_s.end(), fs_s.begin(), fs_s.end());
            ws_t.insert(ws_t.end(), fs_t.begin(), fs_t.end());
            for (const auto &w : work) {
                ws_s.push_back(w.s);
                ws_t.push_back(w.t);
            }
            auto ps = symplectic_partner(u.s, ws_s, n, d);
            auto pt = symplectic_partner(u.t, ws_t, n, d);
            if (!ps || !pt) {
                throw NoSuchClifford("no symplectic partner for isotropic vector");
            }
            f = {*ps, *pt};
        }
        es_s.push_back(u.s);
        es_t.push_back(u.t);
        fs_s.push_back(f.s);
        fs_t.push_back(f.t);
    }
    complete_symplectic_basis(es_s, fs_s, n, d);
    complete_symplectic_basis(es_t, fs_t, n, d);
    auto basis_matrix = [&](const std::vector<FVec> &es, const std::vector<FVec> &fs) {
        FMatrix b(2 * n, 2 * n, d);
        for (size_t j = 0; j < n; j++) {
            for (size_t i = 0; i < 2 * n; i++) {
                b(i, j) = es[j][i];
                b(i, n + j) = fs[j][i];
            }
        }
        return b;
    };
    FMatrix bs = basis_matrix(es_s, fs_s), bt = basis_matrix(es_t, fs_t);
    auto bs_inv = bs.inverse();
    if (!bs_inv) {
        throw VerificationFailure("source symplectic basis is singular");
    }
    FMatrix m = bt * *bs_inv;
    if (!is_symplectic(m)) {
        throw VerificationFailure("constructed map is not symplectic");
    }
    CliffordOp c0 = CliffordOp::from_symplectic(m, {});
    // Pauli correction: w(c) w(t) w(c)† = τ^{2[c,t]} w(t).
    std::vector<FVec> rows;
    std::vector<int> rhs;
    int order = tau_order(d);
    for (size_t i : used) {
        PauliOp got = conjugate(c0, pairs[i].first);
        int delta = fmod_pos(pairs[i].second.phase - got.phase, order);
        const FVec &t = pairs[i].second.a;
        FVec r(2 * n, d);
        for (size_t q = 0; q < n; q++) {
            r.e[q] = t[n + q];
            r.set(n + q, -t[q]);
        }
        rows.push_back(r);
        if (order == 4) {
            if (delta % 2) {
                throw NoSuchClifford("phase of target cannot be reached by a Clifford");
            }
            rhs.push_back(delta / 2);
        } else {
            rhs.push_back((int)((long)delta * finv(2, d) % d));
        }
    }
    auto corr = solve_system(rows, rhs, 2 * n, d);
    if (!corr) {
        throw NoSuchClifford("no Pauli correction matches the target phases");
    }
    CliffordOp c = compose(CliffordOp::from_pauli(PauliOp(0, *corr)), c0);
    for (const auto &[s, t] : pairs) {
        if (conjugate(c, s) != t) {
            throw NoSuchClifford("mapping inconsistent on dependent pairs: " + s.str() + " -> " + t.str());
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Gate synthesis.

namespace {

using Local = std::array<int, 4>;  // 2x2 symplectic matrix, row-major, on (z, x)

struct LocalWords {
    std::map<Local, std::vector<Gate::Kind>> words;  // shortest word (operator product order)
    std::vector<Local> order;                         // BFS discovery order
};

Local local_matrix(const CliffordOp &c) {
    FMatrix m = c.symplectic();
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

const LocalWords &local_words(int d) {
    static std::mutex mu;
    static std::map<int, LocalWords> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) {
        return it->second;
    }
    LocalWords lw;
    Local id = {1, 0, 0, 1};
    lw.words[id] = {};
    lw.order.push_back(id);
    std::map<Local, CliffordOp> ops;
    ops.emplace(id, CliffordOp::identity(1, d));
    for (size_t i = 0; i < lw.order.size(); i++) {
        Local cur = lw.order[i];
        for (auto k : {Gate::Kind::H, Gate::Kind::S}) {
            // Prepend: the new word is g·(current word).
            CliffordOp next = compose(gate_tableau(Gate{k, 0, 0, 1}, 1, d), ops.at(cur));
            Local key = local_matrix(next);
            if (!lw.words.count(key)) {
                auto w = lw.words[cur];
                w.insert(w.begin(), k);
                lw.words[key] = w;
                lw.order.push_back(key);
                ops.emplace(key, next);
            }
        }
    }
    return cache.emplace(d, std::move(lw)).first->second;
}

struct Reducer {
    size_t n;
    int d;
    CliffordOp cur;
    std::vector<Gate> applied;  // A_1, A_2, ... with cur = A_k ⋯ A_1 C

    void apply(const Gate &g) {
        cur = compose(gate_tableau(g, n, d), cur);
        applied.push_back(g);
    }
    const FVec &img(size_t j) const {
        return cur.images()[j].a;
    }
    int zq(size_t j, size_t q) const {
        return img(j)[q];
    }
    int xq(size_t j, size_t q) const {
        return img(j)[n + q];
    }

    // Applies a local 2x2 symplectic word on qudit q.
    void apply_local(const std::vector<Gate::Kind> &word, size_t q) {
        // word is in operator-product order; the last element acts first.
        for (size_t i = word.size(); i-- > 0;) {
            apply(Gate{word[i], q, 0, 1});
        }
    }

    // Maps (z, x) on qudit q so that m·(z,x) satisfies pred.
    template <typename Pred>
    void local_fix(size_t q, Pred pred) {
        const LocalWords &lw = local_words(d);
        for (const auto &key : lw.order) {
            if (pred(key)) {
                apply_local(lw.words.at(key), q);
                return;
            }
        }
        throw VerificationFailure("no local Clifford satisfies the synthesis constraint");
    }

    // Makes image j supported only on qudit p, using gates on qudits >= p.
    void collect(size_t j, size_t p) {
        for (size_t q = p; q < n; q++) {
            if (xq(j, q) == 0 && zq(j, q) != 0) {
                apply(Gate::h(q));
            }
        }
        if (xq(j, p) == 0) {
            for (size_t q = p + 1; q < n; q++) {
                if (xq(j, q) != 0) {
                    apply(Gate::cx(q, p));
                    break;
                }
            }
        }
        if (xq(j, p) == 0) {
            // Only possible if the image is identity on qudits >= p.
            return;
        }
        for (size_t q = p + 1; q < n; q++) {
            for (int guard = 0; xq(j, q) != 0 && guard < d; guard++) {
                apply(Gate::cx(p, q));
            }
        }
        for (size_t q = p + 1; q < n; q++) {
            for (int guard = 0; zq(j, q) != 0 && guard < d; guard++) {
                apply(Gate::cz(p, q));
            }
        }
    }
};

Gate gate_inverse_unit(const Gate &g) {
    Gate r = g;
    if (g.kind == Gate::Kind::X || g.kind == Gate::Kind::Z) {
        r.param = -g.param;
    }
    return r;
}

int gate_inverse_repeats(const Gate &g, int d) {
    switch (g.kind) {
        case Gate::Kind::H:
            return 3;
        case Gate::Kind::S:
            return tau_order(d) - 1;
        case Gate::Kind::CX:
        case Gate::Kind::CZ:
            return d - 1;
        default:
            return 1;
    }
}

}  // namespace

std::vector<Gate> synthesize_gates(const CliffordOp &c) {
    size_t n = c.n();
    int d = c.d();
    Reducer r{n, d, c, {}};
    for (size_t j = 0; j < n; j++) {
        size_t xj = n + j, zj = j;
        r.collect(xj, j);
        int z = r.zq(xj, j), x = r.xq(xj, j);
        r.local_fix(j, [&](const Local &m) {
            return fmod_pos((long)m[0] * z + (long)m[1] * x, d) == 0 && fmod_pos((long)m[2] * z + (long)m[3] * x, d) == 1;
        });
        // Image of Z_j now has z_j = 1; clear its part on qudits > j.
        if (j + 1 < n) {
            bool rest = false;
            for (size_t q = j + 1; q < n; q++) {
                rest = rest || r.zq(zj, q) || r.xq(zj, q);
            }
            if (rest) {
                r.collect(zj, j + 1);
                int z2 = r.zq(zj, j + 1), x2 = r.xq(zj, j + 1);
                r.local_fix(j + 1, [&](const Local &m) {
                    return fmod_pos((long)m[0] * z2 + (long)m[1] * x2, d) == 1 &&
                           fmod_pos((long)m[2] * z2 + (long)m[3] * x2, d) == 0;
                });
                for (int guard = 0; r.zq(zj, j + 1) != 0 && guard < d; guard++) {
                    r.apply(Gate::cx(j + 1, j));
                }
            }
        }
        int x3 = r.xq(zj, j);
        r.local_fix(j, [&](const Local &m) {
            // Fixes (0,1) and sends (1, x3) to (1, 0).
            return m[1] == 0 && m[3] == 1 && fmod_pos(m[0] + (long)m[1] * x3, d) == 1 &&
                   fmod_pos(m[2] + (long)m[3] * x3, d) == 0;
        });
    }
    // Remaining tableau is a Pauli conjugation: solve ω^{[w, g_j]} = τ^{phase_j}.
    std::vector<FVec> rows;
    std::vector<int> rhs;
    for (const auto &img : r.cur.images()) {
        FVec row(2 * n, d);
        for (size_t q = 0; q < n; q++) {
            row.e[q] = img.a[n + q];
            row.set(n + q, -img.a[q]);
        }
        rows.push_back(row);
        rhs.push_back(tau_order(d) == 4 ? img.phase / 2 : (int)((long)img.phase * finv(2, d) % d));
    }
    auto w = solve_system(rows, rhs, 2 * n, d);
    if (!w) {
        throw VerificationFailure("residual tableau is not a Pauli conjugation");
    }
    std::vector<Gate> out;
    for (const auto &g : r.applied) {
        Gate inv = gate_inverse_unit(g);
        for (int k = 0; k < gate_inverse_repeats(g, d); k++) {
            out.push_back(inv);
        }
    }
    for (size_t q = 0; q < n; q++) {
        if ((*w)[q]) {
            out.push_back(Gate::z(q, (*w)[q]));
        }
    }
    for (size_t q = 0; q < n; q++) {
        if ((*w)[n + q]) {
            out.push_back(Gate::x(q, (*w)[n + q]));
        }
    }
    if (clifford_from_gates(n, d, out) != c) {
        throw VerificationFailure("gate synthesis does not reproduce the tableau");
    }
    return out;
}

}  // namespace stabsep
