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

#include "stabsep/stabiliser/state.h"

#include <algorithm>

#include "stabsep/pauli/clifford.h"
#include "stabsep/util/errors.h"

namespace stabsep {

StabState::StabState(AffineSubspace support, std::vector<std::vector<int>> quad, std::vector<int> lin)
    : support_(std::move(support)), quad_(std::move(quad)), lin_(std::move(lin)) {
    size_t k = support_.dim();
    int d = support_.d();
    int order = tau_order(d);
    if (quad_.size() != k || lin_.size() != k) {
        throw InvalidInput("phase polynomial size does not match support dimension");
    }
    for (size_t i = 0; i < k; i++) {
        if (quad_[i].size() != k) {
            throw InvalidInput("quadratic form must be k x k");
        }
        lin_[i] = fmod_pos(lin_[i], order);
        for (size_t j = 0; j < k; j++) {
            int &q = quad_[i][j];
            q = fmod_pos(q, order);
            if (j < i && q != 0) {
                throw InvalidInput("quadratic form must be upper triangular");
            }
            if (order == 4 && j == i && q != 0) {
                throw InvalidInput("qubit phase polynomials carry diagonal terms in the linear part");
            }
            if (order == 4 && j > i && q % 2 != 0) {
                throw InvalidInput("qubit cross terms must be 0 or 2 mod 4");
            }
        }
    }
}

StabState StabState::basis_state(const FVec &x) {
    return StabState(AffineSubspace({}, x), {}, {});
}

int StabState::phase_exponent(const FVec &u) const {
    size_t k = lin_.size();
    long s = 0;
    for (size_t i = 0; i < k; i++) {
        if (!u[i]) {
            continue;
        }
        s += (long)lin_[i] * u[i];
        for (size_t j = i; j < k; j++) {
            s += (long)quad_[i][j] * u[i] * u[j];
        }
    }
    return fmod_pos(s, tau_order(d()));
}

std::optional<int> StabState::amplitude_exponent(const FVec &x) const {
    if (!support_.contains(x)) {
        return std::nullopt;
    }
    return phase_exponent(support_.coords(x));
}

ScaledMatrix StabState::amplitudes(const Caps &caps) const {
    uint64_t dim = checked_pow(d(), n());
    if (dim > caps.dense_cap) {
        throw CapExceeded("dense dimension exceeds cap");
    }
    int order = tau_order(d());
    CycMatrix v(dim, 1, order);
    uint64_t count = support_.cardinality();
    for (uint64_t i = 0; i < count; i++) {
        FVec u = FVec::from_index(i, support_.dim(), d());
        v(support_.point(u).index(), 0) = CycRat::root(order, phase_exponent(u));
    }
    return ScaledMatrix(v, -(int)support_.dim(), d());
}

CycMatrix StabState::density(const Caps &caps) const {
    ScaledMatrix a = amplitudes(caps);
    ScaledMatrix rho = (a * a.adjoint()).normalised();
    if (rho.half_exp != 0) {
        throw VerificationFailure("density matrix scaling is not rational");
    }
    return rho.m;
}

namespace {

// Flat integer view of F_d^n used by the hot loops below.
struct Digits {
    size_t n;
    int d;
    std::vector<uint64_t> pow;  // weight of coordinate i in the index

    Digits(size_t n, int d) : n(n), d(d), pow(n) {
        uint64_t w = 1;
        for (size_t i = n; i-- > 0;) {
            pow[i] = w;
            w *= d;
        }
    }
    int digit(uint64_t idx, size_t i) const {
        return (int)(idx / pow[i] % d);
    }
    uint64_t sub(uint64_t a, const FVec &b) const {
        uint64_t r = 0;
        for (size_t i = 0; i < n; i++) {
            r += (uint64_t)fmod_pos(digit(a, i) - b[i], d) * pow[i];
        }
        return r;
    }
    int dot(uint64_t a, uint64_t c) const {
        long s = 0;
        for (size_t i = 0; i < n; i++) {
            s += (long)digit(a, i) * digit(c, i);
        }
        return (int)(s % d);
    }
};

}  // namespace

StabGroup StabState::stabiliser_group() const {
    size_t nn = n();
    int dd = d();
    int order = tau_order(dd);
    std::vector<PauliOp> gens;
    const FVec &o = support_.offset();
    for (const auto &v : kernel_basis(support_.basis(), nn, dd)) {
        gens.push_back(PauliOp::from_zx(v, FVec(nn, dd), -2 * dot(v, o)));
    }
    Digits dig(nn, dd);
    uint64_t dim = checked_pow(dd, nn);
    std::vector<int> expo(dim, -1);
    std::vector<uint64_t> pts;
    uint64_t count = support_.cardinality();
    for (uint64_t i = 0; i < count; i++) {
        FVec u = FVec::from_index(i, support_.dim(), dd);
        uint64_t x = support_.point(u).index();
        expo[x] = phase_exponent(u);
        pts.push_back(x);
    }
    for (const auto &b : support_.basis()) {
        bool found = false;
        for (uint64_t c = 0; c < dim && !found; c++) {
            // Z(c)X(b)ψ = τ^{const} ψ requires 2c·x + E[x−b] − E[x] ≡ const on K.
            long konst = 0;
            bool ok = true;
            for (size_t t = 0; t < pts.size() && ok; t++) {
                uint64_t x = pts[t];
                long val = fmod_pos(2L * dig.dot(x, c) + expo[dig.sub(x, b)] - expo[x], order);
                if (t == 0) {
                    konst = val;
                } else if (val != konst) {
                    ok = false;
                }
            }
            if (ok) {
                FVec a = FVec::from_index(c, nn, dd).concat(b);
                gens.emplace_back((int)fmod_pos(pauli_gamma(a) - konst, order), a);
                found = true;
            }
        }
        if (!found) {
            throw VerificationFailure("no X-type stabiliser found for support direction");
        }
    }
    return StabGroup(nn, dd, gens);
}

bool StabState::operator<(const StabState &o) const {
    if (!(support_ == o.support_)) {
        return support_ < o.support_;
    }
    if (quad_ != o.quad_) {
        return quad_ < o.quad_;
    }
    return lin_ < o.lin_;
}

std::optional<ScaledState> state_from_amplitudes(const ScaledMatrix &v, size_t n, int d) {
    uint64_t dim = checked_pow(d, n);
    if (v.m.rows() != dim || v.m.cols() != 1) {
        throw DimensionMismatch("amplitude vector has wrong length");
    }
    int order = tau_order(d);
    std::vector<uint64_t> supp;
    for (uint64_t x = 0; x < dim; x++) {
        if (!v.m(x, 0).is_zero()) {
            supp.push_back(x);
        }
    }
    if (supp.empty()) {
        return std::nullopt;
    }
    FVec x0 = FVec::from_index(supp[0], n, d);
    std::vector<FVec> diffs;
    for (uint64_t x : supp) {
        diffs.push_back(FVec::from_index(x, n, d) - x0);
    }
    Echelon ech = row_reduce(diffs, n, d);
    size_t k = ech.rank();
    if (checked_pow(d, k) != supp.size()) {
        return std::nullopt;
    }
    AffineSubspace K(ech.rows, x0);
    const CycRat &a0 = v.m(supp[0], 0);
    auto expo_at = [&](const FVec &u) -> std::optional<int> {
        FVec x = K.point(u);
        return (v.m(x.index(), 0) / a0).root_exponent();
    };
    std::vector<int> single(k);
    std::vector<std::vector<int>> quad(k, std::vector<int>(k, 0));
    std::vector<int> lin(k, 0);
    for (size_t i = 0; i < k; i++) {
        FVec ei(k, d);
        ei.e[i] = 1;
        auto e1 = expo_at(ei);
        if (!e1) {
            return std::nullopt;
        }
        single[i] = *e1;
        if (order == 4) {
            lin[i] = *e1;
        } else {
            auto e2 = expo_at(ei * 2);
            if (!e2) {
                return std::nullopt;
            }
            quad[i][i] = (int)((long)fmod_pos(*e2 - 2L * *e1, d) * finv(2, d) % d);
            lin[i] = fmod_pos(*e1 - quad[i][i], d);
        }
    }
    for (size_t i = 0; i < k; i++) {
        for (size_t j = i + 1; j < k; j++) {
            FVec u(k, d);
            u.e[i] = 1;
            u.e[j] = 1;
            auto e = expo_at(u);
            if (!e) {
                return std::nullopt;
            }
            int q = fmod_pos(*e - single[i] - single[j], order);
            if (order == 4 && q % 2) {
                return std::nullopt;
            }
            quad[i][j] = q;
        }
    }
    StabState s(K, quad, lin);
    uint64_t count = K.cardinality();
    for (uint64_t i = 0; i < count; i++) {
        FVec u = FVec::from_index(i, k, d);
        auto e = expo_at(u);
        if (!e || *e != s.phase_exponent(u)) {
            return std::nullopt;
        }
    }
    ScaledScalar c{a0, v.half_exp + (int)k, d};
    return ScaledState{c.normalised(), s};
}

StabState state_from_group(const StabGroup &g) {
    if (g.rank() != g.n()) {
        throw InvalidInput("state_from_group needs a maximal (rank n) group");
    }
    ScaledMatrix v = stabiliser_state_vector(g.generators(), Caps{checked_pow(g.d(), g.n()), 0, 0});
    auto s = state_from_amplitudes(v, g.n(), g.d());
    if (!s) {
        throw VerificationFailure("stabilised vector is not in canonical stabiliser form");
    }
    return s->state;
}

uint64_t stab_state_count(size_t n, int d) {
    uint64_t c = checked_pow(d, n);
    for (size_t k = 1; k <= n; k++) {
        uint64_t f = checked_pow(d, k) + 1;
        if (c > UINT64_MAX / f) {
            throw CapExceeded("stabiliser state count overflows");
        }
        c *= f;
    }
    return c;
}

std::vector<StabState> enumerate_stab_states(size_t n, int d, const Caps &caps) {
    check_prime(d);
    uint64_t expected = stab_state_count(n, d);
    if (expected > caps.enum_cap) {
        throw CapExceeded("STAB(" + std::to_string(d) + "," + std::to_string(n) + ") has " + std::to_string(expected) +
                          " states, above the enumeration cap " + std::to_string(caps.enum_cap));
    }
    int order = tau_order(d);
    std::vector<StabState> out;
    out.reserve(expected);
    for (const auto &K : enumerate_affine_subspaces(n, d)) {
        size_t k = K.dim();
        // Free parameters: k linear terms, then the allowed quadratic terms.
        std::vector<std::pair<size_t, size_t>> qslots;
        for (size_t i = 0; i < k; i++) {
            for (size_t j = i; j < k; j++) {
                if (order == 4 && i == j) {
                    continue;
                }
                qslots.push_back({i, j});
            }
        }
        int qrange = order == 4 ? 2 : d;
        uint64_t nlin = checked_pow(order, k);
        uint64_t nquad = checked_pow(qrange, qslots.size());
        for (uint64_t qi = 0; qi < nquad; qi++) {
            std::vector<std::vector<int>> quad(k, std::vector<int>(k, 0));
            uint64_t t = qi;
            for (size_t s = qslots.size(); s-- > 0;) {
                int v = (int)(t % qrange);
                t /= qrange;
                quad[qslots[s].first][qslots[s].second] = order == 4 ? 2 * v : v;
            }
            for (uint64_t li = 0; li < nlin; li++) {
                std::vector<int> lin(k);
                uint64_t r = li;
                for (size_t s = k; s-- > 0;) {
                    lin[s] = (int)(r % order);
                    r /= order;
                }
                out.emplace_back(K, quad, lin);
            }
        }
    }
    if (out.size() != expected) {
        throw VerificationFailure("enumeration produced " + std::to_string(out.size()) + " states, expected " +
                                  std::to_string(expected));
    }
    return out;
}

std::vector<StabState> states_orthogonal_to_zero(size_t n, int d, const Caps &caps) {
    std::vector<StabState> out;
    FVec zero(n, d);
    for (auto &s : enumerate_stab_states(n, d, caps)) {
        if (!s.support().contains(zero)) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<std::pair<uint64_t, int>> pauli_coordinates(const StabState &s) {
    std::vector<std::pair<uint64_t, int>> out;
    for (const auto &e : s.stabiliser_group().elements()) {
        out.push_back({e.a.index(), e.phase});
    }
    std::sort(out.begin(), out.end());
    return out;
}

StabState tensor(const StabState &a, const StabState &b) {
    if (a.d() != b.d()) {
        throw DimensionMismatch("tensor of states with different d");
    }
    int d = a.d();
    size_t n1 = a.n(), n2 = b.n(), k1 = a.support().dim(), k2 = b.support().dim();
    std::vector<FVec> basis;
    for (const auto &v : a.support().basis()) {
        basis.push_back(v.concat(FVec(n2, d)));
    }
    for (const auto &v : b.support().basis()) {
        basis.push_back(FVec(n1, d).concat(v));
    }
    AffineSubspace K(basis, a.support().offset().concat(b.support().offset()));
    std::vector<std::vector<int>> quad(k1 + k2, std::vector<int>(k1 + k2, 0));
    std::vector<int> lin;
    for (size_t i = 0; i < k1; i++) {
        for (size_t j = 0; j < k1; j++) {
            quad[i][j] = a.quad()[i][j];
        }
        lin.push_back(a.lin()[i]);
    }
    for (size_t i = 0; i < k2; i++) {
        for (size_t j = 0; j < k2; j++) {
            quad[k1 + i][k1 + j] = b.quad()[i][j];
        }
        lin.push_back(b.lin()[i]);
    }
    return StabState(K, quad, lin);
}

}  // namespace stabsep
