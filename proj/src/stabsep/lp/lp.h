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

#ifndef STABSEP_LP_LP_H
#define STABSEP_LP_LP_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabsep/scalar/rational.h"

namespace stabsep {

/// Sparse rational vector, entries sorted by index, no explicit zeros.
struct SparseVec {
    std::vector<std::pair<uint32_t, Rational>> entries;

    static SparseVec from_dense(const std::vector<Rational> &v);
    std::vector<Rational> to_dense(size_t dim) const;
    Rational dot(const SparseVec &o) const;
    Rational dot(const std::vector<Rational> &dense) const;
    bool operator==(const SparseVec &o) const {
        return entries == o.entries;
    }
};

/// Convex hull of generators in Q^dim, intersected with {p : C p = rhs}.
/// The LP variables are the convex weights of the generators.
struct VPolytopeLP {
    size_t dim = 0;
    std::vector<SparseVec> generators;
    std::vector<SparseVec> eq_rows;
    std::vector<Rational> eq_rhs;
    std::optional<SparseVec> objective;  // maximised; none = pure feasibility

    void add_generator(const std::vector<Rational> &g);
    void add_equality(const std::vector<Rational> &row, const Rational &rhs);
    void set_objective(const std::vector<Rational> &o);
    /// Throws DimensionMismatch or InvalidInput on malformed data.
    void validate() const;
};

enum class LPStatus { feasible, infeasible, optimal, unbounded };
std::string status_str(LPStatus s);
LPStatus parse_status(const std::string &s);

/// dual_certificate has one entry per equality row followed by one for the
/// convexity row Σw = 1.
///   infeasible: y with y·(C g, 1) ≥ 0 for every generator g and y·(rhs, 1) < 0.
///   optimal:    y with o·g ≤ y·(C g, 1) for every g and y·(rhs, 1) = objective_value.
struct LPResult {
    LPStatus status = LPStatus::infeasible;
    std::vector<Rational> weights;
    Rational objective_value;
    std::vector<Rational> dual_certificate;
    /// Final basis; index ≥ generators.size() denotes the artificial of row (index − N).
    std::vector<size_t> basis;
    size_t iterations = 0;
    bool warm_started = false;
};

struct SolveOptions {
    bool presolve = true;
    std::optional<std::vector<size_t>> warm_basis;
    size_t max_iterations = 1000000;
};

/// Exact two-phase revised simplex with Bland's rule. A floating-point
/// revised simplex may choose the starting basis; everything returned is
/// re-verified in exact arithmetic (VerificationFailure otherwise).
LPResult solve(const VPolytopeLP &lp, const SolveOptions &opts = {});

/// Exact re-substitution of a result against the problem data.
bool verify_result(const VPolytopeLP &lp, const LPResult &r);

/// Σ_j w_j g_j.
std::vector<Rational> lp_point(const VPolytopeLP &lp, const std::vector<Rational> &weights);

struct UniquenessReport {
    bool unique = false;
    Rational optimum;
    /// Image coordinates of the optimum when unique; otherwise the per-coordinate maxima.
    std::vector<Rational> image;
    std::vector<Rational> image_min;
    LPResult optimal;
};

/// Solves lp to optimality, then for each row of image_map maximises and
/// minimises it over the optimal face. Unique iff every pair coincides.
UniquenessReport certify_unique_optimum(const VPolytopeLP &lp, const std::vector<SparseVec> &image_map,
                                        const SolveOptions &opts = {});

}  // namespace stabsep

#endif
