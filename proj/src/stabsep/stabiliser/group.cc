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

#include "stabsep/stabiliser/group.h"

#include "stabsep/field/linalg.h"
#include "stabsep/util/errors.h"

namespace stabsep {

StabGroup::StabGroup(size_t n, int d, const std::vector<PauliOp> &generators) : n_(n), d_(d) {
    check_prime(d);
    for (const auto &g : generators) {
        if (g.n() != n || g.d() != d) {
            throw DimensionMismatch("stabiliser generator has wrong size");
        }
    }
    for (size_t i = 0; i < generators.size(); i++) {
        for (size_t j = i + 1; j < generators.size(); j++) {
            if (!commutes(generators[i], generators[j])) {
                throw InvalidInput("stabiliser generators do not commute: " + generators[i].str() + ", " +
                                   generators[j].str());
            }
        }
    }
    for (const auto &g : generators) {
        if (!pauli_pow(g, d).is_identity()) {
            throw InvalidInput("generator " + g.str() + " has a power equal to a nontrivial scalar");
        }
        std::vector<FVec> vs;
        for (const auto &h : gens_) {
            vs.push_back(h.a);
        }
        Echelon ech = row_reduce(vs, 2 * n, d);
        auto c = ech.express(g.a);
        if (!c) {
            gens_.push_back(g);
            continue;
        }
        PauliOp prod = PauliOp::identity(n, d);
        for (size_t i = 0; i < gens_.size(); i++) {
            prod = pauli_mul(prod, pauli_pow(gens_[i], (*c)[i]));
        }
        if (prod != g) {
            throw InvalidInput("stabiliser group contains a nontrivial multiple of the identity");
        }
    }
}

std::vector<PauliOp> StabGroup::elements() const {
    size_t k = gens_.size();
    uint64_t count = checked_pow(d_, k);
    std::vector<PauliOp> out;
    out.reserve(count);
    for (uint64_t i = 0; i < count; i++) {
        FVec e = FVec::from_index(i, k, d_);
        PauliOp p = PauliOp::identity(n_, d_);
        for (size_t j = 0; j < k; j++) {
            if (e[j]) {
                p = pauli_mul(p, pauli_pow(gens_[j], e[j]));
            }
        }
        out.push_back(p);
    }
    return out;
}

std::optional<PauliOp> StabGroup::element_with(const FVec &a) const {
    std::vector<FVec> vs;
    for (const auto &h : gens_) {
        vs.push_back(h.a);
    }
    auto c = row_reduce(vs, 2 * n_, d_).express(a);
    if (!c) {
        return std::nullopt;
    }
    PauliOp p = PauliOp::identity(n_, d_);
    for (size_t j = 0; j < gens_.size(); j++) {
        if ((*c)[j]) {
            p = pauli_mul(p, pauli_pow(gens_[j], (*c)[j]));
        }
    }
    return p;
}

bool StabGroup::contains(const PauliOp &p) const {
    auto e = element_with(p.a);
    return e && *e == p;
}

CycMatrix projector(const StabCode &code, const Caps &caps) {
    size_t n = code.n();
    int d = code.group.d();
    uint64_t dim = checked_pow(d, n);
    if (dim > caps.dense_cap) {
        throw CapExceeded("dense dimension exceeds cap");
    }
    int order = tau_order(d);
    CycMatrix acc(dim, dim, order);
    auto elems = code.group.elements();
    for (const auto &e : elems) {
        FVec z = e.z_part(), x = e.x_part();
        int base = e.phase - pauli_gamma(e.a);
        for (uint64_t y = 0; y < dim; y++) {
            FVec row = FVec::from_index(y, n, d) + x;
            acc(row.index(), y) += CycRat::root(order, base + 2L * dot(z, row));
        }
    }
    return acc * Rational(1, elems.size());
}

std::optional<Collision> diagonal_projector_collision(const StabCode &code, const Caps &caps) {
    bool diagonal = true;
    for (const auto &g : code.group.generators()) {
        diagonal = diagonal && g.x_part().is_zero();
    }
    if (diagonal) {
        return std::nullopt;
    }
    CycMatrix p = projector(code, caps);
    uint64_t dim = p.rows();
    std::optional<Collision> fallback;
    for (uint64_t x = 0; x < dim; x++) {
        CycMatrix cx = p.col(x);
        if (cx.is_zero()) {
            continue;
        }
        for (uint64_t y = x + 1; y < dim; y++) {
            auto c = cx.ratio_to(p.col(y));
            if (!c || c->norm_sq() != CycRat(c->order(), 1)) {
                continue;
            }
            if (*c == CycRat(c->order(), 1)) {
                return Collision{x, y, *c};
            }
            if (!fallback) {
                fallback = Collision{x, y, *c};
            }
        }
    }
    if (!fallback) {
        throw VerificationFailure("non-diagonal stabiliser projector without a collision pair");
    }
    return fallback;
}

StabGroup stabiliser_group_of_projector(const CycMatrix &p, size_t n, int d) {
    std::vector<PauliOp> gens;
    std::vector<FVec> vs;
    Caps caps{checked_pow(d, n), 0, 0};
    for (const auto &a : all_pauli_vectors(n, d)) {
        if (a.is_zero()) {
            continue;
        }
        auto trial = vs;
        trial.push_back(a);
        if (rank_of(trial, 2 * n, d) != trial.size()) {
            continue;
        }
        CycMatrix wp = weyl_matrix(PauliOp(0, a), caps) * p;
        auto c = p.ratio_to(wp);  // p = c · w(a) p  =>  (c w(a)) p = p
        if (!c) {
            continue;
        }
        auto k = c->root_exponent();
        if (!k) {
            continue;
        }
        gens.emplace_back(*k, a);
        vs.push_back(a);
    }
    return StabGroup(n, d, gens);
}

}  // namespace stabsep
