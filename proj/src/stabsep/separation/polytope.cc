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
#include "stabsep/util/parallel.h"

namespace stabsep {

namespace {

struct PnProblem {
    SigmaCoordinates sc;
    VPolytopeLP lp;
    size_t generators = 0;
};

// Generators of P_n with the diagonal pinned; no objective yet.
PnProblem pn_problem(size_t n, int d, const Caps &caps) {
    PnProblem p{SigmaCoordinates(n, d), {}, 0};
    std::vector<StabState> states = states_orthogonal_to_zero(n, d, caps);
    p.generators = states.size();
    p.lp.dim = p.sc.rows();
    p.lp.generators.resize(states.size());
    parallel_for(states.size(), [&](size_t j) { p.lp.generators[j] = p.sc.of_state(states[j]); });
    return p;
}

}  // namespace

PnReport pn_polytope_lp(size_t n, int d, const SolveOptions &opts, const Caps &caps) {
    if (n == 0) {
        throw InvalidInput("P_n needs n >= 1");
    }
    PnProblem p = pn_problem(n, d, caps);
    uint64_t dim = checked_pow(d, n);
    Rational pin(1);
    pin /= (long)(dim - 1);
    for (uint64_t x = 1; x < dim; x++) {
        p.lp.eq_rows.push_back(SparseVec{{{(uint32_t)p.sc.diag_row(x), Rational(1)}}});
        p.lp.eq_rhs.push_back(pin);
    }
    p.lp.set_objective(p.sc.objective_L());

    std::vector<SparseVec> image;
    for (size_t r = dim; r < p.sc.rows(); r++) {
        image.push_back(SparseVec{{{(uint32_t)r, Rational(1)}}});
    }
    UniquenessReport u = certify_unique_optimum(p.lp, image, opts);

    PnReport rep;
    rep.n = n;
    rep.d = d;
    rep.generators = p.generators;
    rep.optimum = u.optimum;
    rep.unique = u.unique;
    rep.lp = u.optimal;
    std::vector<Rational> coords(p.sc.rows());
    for (uint64_t x = 1; x < dim; x++) {
        coords[x] = pin;
    }
    for (size_t i = 0; i < image.size(); i++) {
        coords[dim + i] = u.image[i];
    }
    rep.sigma = p.sc.to_matrix(coords);
    if (rep.unique && functional_L(rep.sigma) != rep.optimum) {
        throw VerificationFailure("maximiser does not attain the reported optimum");
    }
    rep.equals_lambda = rep.unique && rep.sigma == lambda_sigma(n, d);
    return rep;
}

LPResult pn_membership(const CycMatrix &sigma, size_t n, int d, const Caps &caps) {
    PnProblem p = pn_problem(n, d, caps);
    std::vector<Rational> target = p.sc.of_matrix(sigma);
    for (size_t r = 0; r < p.sc.rows(); r++) {
        p.lp.eq_rows.push_back(SparseVec{{{(uint32_t)r, Rational(1)}}});
        p.lp.eq_rhs.push_back(target[r]);
    }
    return solve(p.lp);
}

StabState flat_state(const AffineSubspace &k) {
    size_t dim = k.dim();
    return StabState(k, std::vector<std::vector<int>>(dim, std::vector<int>(dim, 0)), std::vector<int>(dim, 0));
}

CycMatrix so_ad_sigma(const AffinePartition &partition, const std::vector<StabState> &states) {
    if (partition.parts.empty() || partition.parts.size() != states.size()) {
        throw InvalidInput("one state per part is required");
    }
    size_t n = partition.parts[0].ambient_dim();
    int d = partition.parts[0].d();
    uint64_t dim = checked_pow(d, n);
    uint64_t covered = 0;
    FVec zero(n, d);
    CycMatrix sigma(dim, dim, tau_order(d));
    for (size_t i = 0; i < states.size(); i++) {
        const AffineSubspace &k = partition.parts[i];
        if (k.ambient_dim() != n || k.d() != d || k.contains(zero)) {
            throw InvalidInput("parts must be affine subspaces of F_d^n avoiding 0");
        }
        if (!(states[i].support() == k)) {
            throw InvalidInput("state " + std::to_string(i) + " is not supported exactly on its part");
        }
        covered += k.cardinality();
        sigma += states[i].density() * Rational((long)k.cardinality());
    }
    if (covered != dim - 1) {
        throw InvalidInput("parts do not partition F_d^n minus the origin");
    }
    Rational inv(1);
    inv /= (long)(dim - 1);
    return sigma * inv;
}

SoAdBoundReport so_ad_upper_bound(size_t n, int d, const Caps &caps) {
    check_prime(d);
    if (n == 0) {
        throw InvalidInput("n >= 1 required");
    }
    uint64_t dim = checked_pow(d, n);
    if (dim > caps.partition_cap) {
        throw CapExceeded("partition search over " + std::to_string(dim) + " points exceeds cap " +
                          std::to_string(caps.partition_cap));
    }
    SoAdBoundReport rep;
    rep.n = n;
    rep.d = d;
    // With flat states, L(σ) = Σ_K |K|² / (d^n (d^n − 1)): maximise Σ_K |K|².
    for_each_affine_partition(
        n, d,
        [&](const AffinePartition &p) {
            rep.partitions++;
            uint64_t s = 0;
            for (const auto &k : p.parts) {
                s += k.cardinality() * k.cardinality();
            }
            if (s > rep.best_sum_sq) {
                rep.best_sum_sq = s;
                rep.best_partition = p;
            }
        },
        caps.partition_cap);

    Rational denom((long)(dim * (dim - 1)));
    rep.bound_value = Rational((long)rep.best_sum_sq) / denom;
    rep.strict_target = Rational(1, d);
    rep.margin = rep.strict_target - rep.bound_value;
    uint64_t pk = 1;
    for (size_t k = 0; k < n; k++) {
        rep.protocol_sum_sq += (d - 1) * pk;
        pk *= (uint64_t)d * d;
    }
    rep.protocol_value = Rational((long)(dim + 1)) / Rational((long)((d + 1) * dim));

    std::vector<StabState> flats;
    for (const auto &k : rep.best_partition.parts) {
        flats.push_back(flat_state(k));
    }
    rep.best_sigma = so_ad_sigma(rep.best_partition, flats);
    if (functional_L(rep.best_sigma) != rep.bound_value) {
        throw VerificationFailure("flat-state sigma does not attain the partition bound");
    }
    return rep;
}

}  // namespace stabsep
