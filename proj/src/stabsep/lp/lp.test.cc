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

#include <random>

#include "gtest/gtest.h"

#include "stabsep/lp/lp.h"
#include "stabsep/util/errors.h"

using namespace stabsep;

namespace {

VPolytopeLP make(size_t dim, const std::vector<std::vector<long>> &gens) {
    VPolytopeLP lp;
    lp.dim = dim;
    for (const auto &g : gens) {
        std::vector<Rational> v;
        for (long x : g) {
            v.emplace_back(x);
        }
        lp.add_generator(v);
    }
    return lp;
}

std::vector<Rational> rv(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) {
        v.emplace_back(x);
    }
    return v;
}

}  // namespace

TEST(lp, segment_midpoint) {
    VPolytopeLP lp = make(1, {{0}, {1}});
    lp.add_equality(rv({1}), rat(1, 2));
    LPResult r = solve(lp);
    ASSERT_EQ(r.status, LPStatus::feasible);
    EXPECT_EQ(r.weights, (std::vector<Rational>{rat(1, 2), rat(1, 2)}));
    EXPECT_TRUE(verify_result(lp, r));
}

TEST(lp, outside_segment_has_separating_functional) {
    for (bool presolve : {true, false}) {
        VPolytopeLP lp = make(1, {{0}, {1}});
        lp.add_equality(rv({1}), rat(2));
        SolveOptions o;
        o.presolve = presolve;
        LPResult r = solve(lp, o);
        ASSERT_EQ(r.status, LPStatus::infeasible);
        EXPECT_TRUE(verify_result(lp, r));
        // Tampering with the certificate must break it.
        LPResult bad = r;
        bad.dual_certificate[1] += 100;
        EXPECT_FALSE(verify_result(lp, bad));
    }
    VPolytopeLP neg = make(1, {{0}, {1}});
    neg.add_equality(rv({1}), rat(-1));
    EXPECT_EQ(solve(neg).status, LPStatus::infeasible);
}

TEST(lp, maximise_over_simplex) {
    VPolytopeLP lp = make(2, {{0, 0}, {1, 0}, {0, 1}});
    lp.set_objective(rv({1, 0}));
    LPResult r = solve(lp);
    ASSERT_EQ(r.status, LPStatus::optimal);
    EXPECT_EQ(r.objective_value, 1);
    EXPECT_EQ(lp_point(lp, r.weights), rv({1, 0}));
    EXPECT_TRUE(verify_result(lp, r));
    LPResult tampered = r;
    tampered.objective_value = rat(1, 2);
    EXPECT_FALSE(verify_result(lp, tampered));
}

TEST(lp, validation) {
    VPolytopeLP lp;
    lp.dim = 2;
    EXPECT_THROW(solve(lp), InvalidInput);
    EXPECT_THROW(lp.add_generator(rv({1})), DimensionMismatch);
    lp.add_generator(rv({1, 0}));
    EXPECT_THROW(lp.add_equality(rv({1, 2, 3}), 0), DimensionMismatch);
    lp.eq_rows.push_back(SparseVec{{{5, Rational(1)}}});
    lp.eq_rhs.push_back(0);
    EXPECT_THROW(solve(lp), DimensionMismatch);
}

TEST(lp, uniqueness_probe) {
    VPolytopeLP seg = make(2, {{0, 0}, {1, 1}});
    seg.set_objective(rv({1, 0}));
    std::vector<SparseVec> id{SparseVec::from_dense(rv({1, 0})), SparseVec::from_dense(rv({0, 1}))};
    auto u = certify_unique_optimum(seg, id);
    EXPECT_TRUE(u.unique);
    EXPECT_EQ(u.image, rv({1, 1}));

    VPolytopeLP sq = make(2, {{1, 0}, {1, 1}, {0, 0}, {0, 1}});
    sq.set_objective(rv({1, 0}));
    auto v = certify_unique_optimum(sq, id);
    EXPECT_FALSE(v.unique);
    EXPECT_EQ(v.image[1], 1);
    EXPECT_EQ(v.image_min[1], 0);
}

TEST(lp, degenerate_and_redundant_rows) {
    // Duplicate constraints and a row implied by convexity.
    VPolytopeLP lp = make(2, {{0, 1}, {1, 1}, {2, 1}, {1, 1}});
    lp.add_equality(rv({1, 0}), 1);
    lp.add_equality(rv({2, 0}), 2);
    lp.add_equality(rv({0, 1}), 1);
    lp.set_objective(rv({0, 1}));
    for (bool presolve : {true, false}) {
        SolveOptions o;
        o.presolve = presolve;
        LPResult r = solve(lp, o);
        ASSERT_EQ(r.status, LPStatus::optimal);
        EXPECT_EQ(r.objective_value, 1);
        EXPECT_TRUE(verify_result(lp, r));
    }
}

TEST(lp, random_instances_match_edge_oracle) {
    // Oracle: vertices of conv(G) ∩ {h·p = t} lie on segments [g_i, g_j], so the
    // optimum is the best such intersection point.
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 40; trial++) {
        size_t dim = 3, count = 4 + rng() % 8;
        std::vector<std::vector<long>> gens(count, std::vector<long>(dim));
        for (auto &g : gens) {
            for (auto &x : g) {
                x = (long)(rng() % 11) - 5;
            }
        }
        std::vector<long> h(dim), o(dim);
        for (auto &x : h) {
            x = (long)(rng() % 5) - 2;
        }
        for (auto &x : o) {
            x = (long)(rng() % 7) - 3;
        }
        Rational t = rat((long)(rng() % 7) - 3, 1 + rng() % 3);
        VPolytopeLP lp = make(dim, gens);
        std::vector<Rational> hr(h.begin(), h.end()), orow(o.begin(), o.end());
        for (size_t i = 0; i < dim; i++) {
            hr[i] = Rational(h[i]);
            orow[i] = Rational(o[i]);
        }
        lp.add_equality(hr, t);
        lp.set_objective(orow);

        std::optional<Rational> best;
        auto dot = [&](const std::vector<long> &a, const std::vector<long> &b) {
            long s = 0;
            for (size_t i = 0; i < dim; i++) {
                s += a[i] * b[i];
            }
            return Rational(s);
        };
        for (size_t i = 0; i < count; i++) {
            for (size_t j = i; j < count; j++) {
                Rational hi = dot(h, gens[i]), hj = dot(h, gens[j]);
                Rational oi = dot(o, gens[i]), oj = dot(o, gens[j]);
                std::optional<Rational> val;
                if (hi == hj) {
                    if (hi == t) {
                        val = oi > oj ? oi : oj;
                    }
                } else {
                    Rational s = (t - hj) / (hi - hj);  // s g_i + (1−s) g_j
                    if (s >= 0 && s <= 1) {
                        val = s * oi + (1 - s) * oj;
                    }
                }
                if (val && (!best || *val > *best)) {
                    best = val;
                }
            }
        }
        for (bool presolve : {true, false}) {
            SolveOptions opts;
            opts.presolve = presolve;
            LPResult r = solve(lp, opts);
            EXPECT_TRUE(verify_result(lp, r));
            if (best) {
                ASSERT_EQ(r.status, LPStatus::optimal) << trial;
                EXPECT_EQ(r.objective_value, *best) << trial;
            } else {
                EXPECT_EQ(r.status, LPStatus::infeasible) << trial;
            }
        }
    }
}
