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

#include "stabsep/stabiliser/basis.h"

#include "stabsep/field/linalg.h"
#include "stabsep/util/errors.h"

namespace stabsep {

StabBasis::StabBasis(StabGroup group) : group_(std::move(group)) {
    size_t n = group_.n();
    int d = group_.d();
    if (group_.rank() != n) {
        throw InvalidInput("a stabiliser basis needs a rank-n group");
    }
    uint64_t count = checked_pow(d, n);
    for (uint64_t j = 0; j < count; j++) {
        FVec chi = FVec::from_index(j, n, d);
        std::vector<PauliOp> gens;
        for (size_t l = 0; l < n; l++) {
            gens.push_back(pauli_rephase(group_.generators()[l], 2L * chi[l]));
        }
        states_.push_back(state_from_group(StabGroup(n, d, gens)));
    }
}

StabBasis StabBasis::computational(size_t n, int d) {
    std::vector<PauliOp> gens;
    for (size_t i = 0; i < n; i++) {
        gens.push_back(PauliOp::z(n, d, i));
    }
    return StabBasis(StabGroup(n, d, gens));
}

namespace {

// M[x][y] = ψ(x, y) for a split of the register after the first n1 qudits.
ScaledMatrix reshape(const ScaledMatrix &v, uint64_t rows, uint64_t cols) {
    CycMatrix m(rows, cols, v.m.order());
    for (uint64_t x = 0; x < rows; x++) {
        for (uint64_t y = 0; y < cols; y++) {
            m(x, y) = v.m(x * cols + y, 0);
        }
    }
    return ScaledMatrix(m, v.half_exp, v.d);
}

ScaledMatrix flatten(const ScaledMatrix &m) {
    CycMatrix v(m.m.rows() * m.m.cols(), 1, m.m.order());
    for (uint64_t x = 0; x < m.m.rows(); x++) {
        for (uint64_t y = 0; y < m.m.cols(); y++) {
            v(x * m.m.cols() + y, 0) = m.m(x, y);
        }
    }
    return ScaledMatrix(v, m.half_exp, m.d);
}

CycMatrix rational_part(const ScaledMatrix &m) {
    ScaledMatrix r = m.normalised();
    if (r.half_exp != 0 && !r.m.is_zero()) {
        throw VerificationFailure("expected a matrix over Q(tau) without sqrt(d) factor");
    }
    return r.m;
}

}  // namespace

Contraction contract(const StabState &psi, const StabBasis &basis, size_t index) {
    size_t n1 = basis.group().n();
    int d = psi.d();
    if (basis.group().d() != d || n1 >= psi.n()) {
        throw DimensionMismatch("contract: basis does not fit the first factor");
    }
    size_t n2 = psi.n() - n1;
    uint64_t r1 = checked_pow(d, n1), r2 = checked_pow(d, n2);
    ScaledMatrix m = reshape(psi.amplitudes(), r1, r2);
    ScaledMatrix alpha = basis.state(index).amplitudes();
    ScaledMatrix row = alpha.adjoint() * m;  // 1 × r2
    ScaledMatrix col(row.m.transpose(), row.half_exp, d);
    if (col.m.is_zero()) {
        return Contraction{ScaledScalar{CycRat(tau_order(d)), 0, d}, std::nullopt};
    }
    auto s = state_from_amplitudes(col, n2, d);
    if (!s) {
        throw VerificationFailure("contraction of a stabiliser state is not a stabiliser state");
    }
    return Contraction{s->scalar, s->state};
}

ScaledMatrix polar_reconstruction(const PolarForm &f, int d, const Caps &caps) {
    size_t n = f.u.n();
    ScaledMatrix u = clifford_unitary(f.u, caps);
    ScaledMatrix up = u * ScaledMatrix(projector(f.p, caps), 0, d);
    ScaledMatrix out = flatten(up);
    out.half_exp += (int)f.k - (int)n;
    return out.normalised();
}

PolarForm polar_form(const StabState &s, bool synthesize) {
    if (s.n() % 2) {
        throw InvalidInput("polar form needs an even number of qudits");
    }
    size_t n = s.n() / 2;
    int d = s.d();
    uint64_t dim = checked_pow(d, n);
    Caps caps{dim * dim, 0, 0};
    ScaledMatrix v = s.amplitudes(caps);
    ScaledMatrix m = reshape(v, dim, dim);
    CycMatrix g = rational_part(m.adjoint() * m);  // P / r
    CycMatrix h = rational_part(m * m.adjoint());  // Q / r
    Rational tr2 = (g * g).trace().rational();
    Rational r = 1 / tr2;  // Schmidt rank d^{n−k}
    size_t k = n;
    for (Rational t = r; t > 1; t /= d) {
        k--;
    }
    if (checked_pow(d, n - k) != r) {
        throw VerificationFailure("Schmidt rank is not a power of d");
    }
    CycMatrix p = g * r, q = h * r;
    StabGroup sp = stabiliser_group_of_projector(p, n, d);
    StabGroup sq = stabiliser_group_of_projector(q, n, d);
    if (sp.rank() != k || sq.rank() != k) {
        throw VerificationFailure("reduced projectors have unexpected stabiliser rank");
    }
    std::vector<std::pair<PauliOp, PauliOp>> pairs;
    for (size_t i = 0; i < k; i++) {
        pairs.push_back({sp.generators()[i], sq.generators()[i]});
    }
    // Logical completion W of S_P inside its centraliser; images fixed by A = r M L M† = L'Q.
    std::vector<FVec> span;
    for (const auto &gsp : sp.generators()) {
        span.push_back(gsp.a);
    }
    Caps wcaps{dim, 0, 0};
    for (const auto &c : symplectic_complement(span, n, d)) {
        auto trial = span;
        trial.push_back(c);
        if (rank_of(trial, 2 * n, d) != trial.size()) {
            continue;
        }
        span = trial;
        PauliOp l(0, c);
        ScaledMatrix a = m * ScaledMatrix(weyl_matrix(l, wcaps), 0, d) * m.adjoint();
        CycMatrix amat = rational_part(a) * r;
        std::optional<PauliOp> image;
        for (const auto &b : all_pauli_vectors(n, d)) {
            auto ratio = amat.ratio_to(weyl_matrix(PauliOp(0, b), wcaps) * q);
            if (ratio) {
                if (auto e = ratio->root_exponent()) {
                    image = PauliOp(*e, b);
                    break;
                }
            }
        }
        if (!image) {
            throw VerificationFailure("logical operator has no Pauli image");
        }
        pairs.push_back({l, *image});
    }
    PolarForm f;
    f.u = pairs.empty() ? CliffordOp::identity(n, d) : find_clifford_mapping(pairs);
    f.p = StabCode{sp};
    f.k = k;
    auto phase = equal_up_to_phase(v, polar_reconstruction(f, d, caps));
    if (!phase) {
        throw VerificationFailure("polar form reconstruction does not match the input state");
    }
    f.global_phase = *phase;
    if (synthesize) {
        f.gates = synthesize_gates(f.u);
    }
    return f;
}

}  // namespace stabsep
