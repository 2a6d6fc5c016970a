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

#include "stabsep/pauli/pauli.h"

#include <sstream>

#include "stabsep/util/errors.h"

namespace stabsep {

namespace {

void check_pair(const PauliOp &p, const PauliOp &q) {
    if (p.a.size() != q.a.size() || p.a.d != q.a.d) {
        throw DimensionMismatch("Pauli operands differ in qudit count or dimension");
    }
}

uint64_t dim_of(size_t n, int d) {
    return checked_pow(d, n);
}

}  // namespace

PauliOp::PauliOp(int phase, FVec a) : phase(fmod_pos(phase, tau_order(a.d))), a(std::move(a)) {
    if (this->a.size() % 2) {
        throw DimensionMismatch("Pauli vector must have even length 2n");
    }
}

PauliOp PauliOp::identity(size_t n, int d) {
    check_prime(d);
    return PauliOp(0, FVec(2 * n, d));
}

PauliOp PauliOp::weyl(const FVec &a) {
    return PauliOp(0, a);
}

PauliOp PauliOp::z(size_t n, int d, size_t q, int power) {
    PauliOp p = identity(n, d);
    p.a.set(q, power);
    return p;
}

PauliOp PauliOp::x(size_t n, int d, size_t q, int power) {
    PauliOp p = identity(n, d);
    p.a.set(n + q, power);
    return p;
}

PauliOp PauliOp::from_zx(const FVec &z, const FVec &x, int phase) {
    if (z.size() != x.size()) {
        throw DimensionMismatch("z and x parts differ in length");
    }
    return PauliOp(phase, z.concat(x));
}

std::string PauliOp::str() const {
    std::stringstream ss;
    if (phase) {
        ss << "t^" << phase << "*";
    }
    size_t nn = n();
    bool any = false;
    for (size_t i = 0; i < nn; i++) {
        int zi = a[i], xi = a[nn + i];
        if (zi) {
            ss << (any ? "." : "") << "Z" << i;
            if (zi != 1) {
                ss << "^" << zi;
            }
            any = true;
        }
        if (xi) {
            ss << (any ? "." : "") << "X" << i;
            if (xi != 1) {
                ss << "^" << xi;
            }
            any = true;
        }
    }
    if (!any) {
        ss << "I";
    }
    return ss.str();
}

int pauli_gamma(const FVec &a) {
    size_t n = a.size() / 2;
    long s = 0;
    for (size_t i = 0; i < n; i++) {
        s += (long)a[i] * a[n + i];
    }
    return fmod_pos(s, tau_order(a.d));
}

PauliOp pauli_mul(const PauliOp &p, const PauliOp &q) {
    check_pair(p, q);
    // Z(az)X(ax)Z(bz)X(bx) = ω^{−bz·ax} Z(az+bz)X(ax+bx), ω = τ².
    size_t n = p.n();
    long bz_ax = 0;
    for (size_t i = 0; i < n; i++) {
        bz_ax += (long)q.a[i] * p.a[n + i];
    }
    FVec c = p.a + q.a;
    long phase = (long)p.phase + q.phase - pauli_gamma(p.a) - pauli_gamma(q.a) + pauli_gamma(c) - 2 * bz_ax;
    return PauliOp((int)fmod_pos(phase, p.order()), c);
}

PauliOp pauli_pow(const PauliOp &p, long k) {
    if (k < 0) {
        return pauli_pow(pauli_inverse(p), -k);
    }
    PauliOp r = PauliOp::identity(p.n(), p.d());
    PauliOp b = p;
    while (k > 0) {
        if (k & 1) {
            r = pauli_mul(r, b);
        }
        b = pauli_mul(b, b);
        k >>= 1;
    }
    return r;
}

PauliOp pauli_inverse(const PauliOp &p) {
    // p^{-1} = c·w(−a); fix c from p·w(−a) = c^{-1}.
    PauliOp t = pauli_mul(p, PauliOp(0, -p.a));
    return PauliOp(-t.phase, -p.a);
}

PauliOp pauli_rephase(const PauliOp &p, long k) {
    return PauliOp((int)fmod_pos(p.phase + k, p.order()), p.a);
}

bool commutes(const PauliOp &p, const PauliOp &q) {
    check_pair(p, q);
    return symp(p.a, q.a) == 0;
}

PauliOp pauli_embed(const PauliOp &p, size_t offset, size_t n) {
    size_t m = p.n();
    if (offset + m > n) {
        throw DimensionMismatch("Pauli embedding out of range");
    }
    FVec a(2 * n, p.d());
    for (size_t i = 0; i < m; i++) {
        a.e[offset + i] = p.a[i];
        a.e[n + offset + i] = p.a[m + i];
    }
    return PauliOp(p.phase, a);
}

PauliOp pauli_tensor(const PauliOp &p, const PauliOp &q) {
    if (p.d() != q.d()) {
        throw DimensionMismatch("tensor of Paulis with different d");
    }
    size_t n = p.n() + q.n();
    PauliOp r = pauli_embed(p, 0, n);
    PauliOp s = pauli_embed(q, p.n(), n);
    return PauliOp(r.phase + s.phase, r.a + s.a);
}

CycMatrix weyl_matrix(const PauliOp &p, const Caps &caps) {
    size_t n = p.n();
    int d = p.d();
    uint64_t dim = dim_of(n, d);
    if (dim > caps.dense_cap) {
        throw CapExceeded("dense dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(caps.dense_cap));
    }
    int order = p.order();
    CycMatrix m(dim, dim, order);
    FVec z = p.z_part(), x = p.x_part();
    int base = p.phase - pauli_gamma(p.a);
    for (uint64_t y = 0; y < dim; y++) {
        FVec yv = FVec::from_index(y, n, d);
        FVec row = yv + x;
        m(row.index(), y) = CycRat::root(order, base + 2L * dot(z, row));
    }
    return m;
}

CycMatrix apply_pauli(const PauliOp &p, const CycMatrix &v) {
    size_t n = p.n();
    int d = p.d();
    uint64_t dim = dim_of(n, d);
    if (v.rows() != dim) {
        throw DimensionMismatch("vector length does not match Pauli");
    }
    int order = p.order();
    CycMatrix out(v.rows(), v.cols(), order);
    FVec z = p.z_part(), x = p.x_part();
    int base = p.phase - pauli_gamma(p.a);
    for (uint64_t y = 0; y < dim; y++) {
        FVec row = FVec::from_index(y, n, d) + x;
        uint64_t r = row.index();
        long k = base + 2L * dot(z, row);
        for (size_t c = 0; c < v.cols(); c++) {
            if (!v(y, c).is_zero()) {
                CycRat t = v(y, c);
                t.mul_root(k);
                out(r, c) = t;
            }
        }
    }
    return out;
}

std::optional<std::pair<CycRat, FVec>> scaled_pauli_from_matrix(const CycMatrix &m, size_t n, int d) {
    uint64_t dim = dim_of(n, d);
    if (m.rows() != dim || m.cols() != dim) {
        return std::nullopt;
    }
    // The x part is read off from where column 0 is supported.
    std::optional<uint64_t> row0;
    for (uint64_t r = 0; r < dim; r++) {
        if (!m(r, 0).is_zero()) {
            if (row0) {
                return std::nullopt;
            }
            row0 = r;
        }
    }
    if (!row0) {
        return std::nullopt;
    }
    FVec x = FVec::from_index(*row0, n, d);
    FVec z(n, d);
    int order = tau_order(d);
    for (size_t j = 0; j < n; j++) {
        FVec ej(n, d);
        ej.e[j] = 1;
        uint64_t r = (ej + x).index();
        const CycRat &v = m(r, ej.index());
        if (v.is_zero()) {
            return std::nullopt;
        }
        // m(e_j + x, e_j) / m(x, 0) = ω^{z_j}.
        auto k = (v / m(*row0, 0)).root_exponent();
        if (!k || (order == 4 && *k % 2 != 0)) {
            return std::nullopt;
        }
        int zj = order == 4 ? *k / 2 : (int)((long)*k * finv(2, d) % d);
        z.e[j] = zj;
    }
    PauliOp w = PauliOp::from_zx(z, x);
    CycMatrix wm = weyl_matrix(w, Caps{dim, 0, 0});
    auto c = m.ratio_to(wm);
    if (!c) {
        return std::nullopt;
    }
    return std::make_pair(*c, w.a);
}

std::optional<PauliOp> pauli_from_matrix(const CycMatrix &m, size_t n, int d) {
    auto sp = scaled_pauli_from_matrix(m, n, d);
    if (!sp) {
        return std::nullopt;
    }
    auto k = sp->first.root_exponent();
    if (!k) {
        return std::nullopt;
    }
    return PauliOp(*k, sp->second);
}

std::vector<FVec> all_pauli_vectors(size_t n, int d) {
    uint64_t count = dim_of(2 * n, d);
    std::vector<FVec> out;
    out.reserve(count);
    for (uint64_t i = 0; i < count; i++) {
        out.push_back(FVec::from_index(i, 2 * n, d));
    }
    return out;
}

}  // namespace stabsep
