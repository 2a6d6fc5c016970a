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

#include "stabsep/io/json.h"
#include "stabsep/util/errors.h"

using namespace stabsep;
using io::Json;

TEST(json, scalars_roundtrip) {
    EXPECT_EQ(io::to_json(rat(-3, 6)), "-1/2");
    EXPECT_EQ(io::rational_from(Json("7")), 7);
    EXPECT_EQ(io::rational_from(Json(4)), 4);
    EXPECT_THROW(io::rational_from(Json("1/0")), InvalidInput);
    EXPECT_THROW(io::rational_from(Json(0.5)), InvalidInput);
    std::mt19937_64 rng(3);
    for (int d : {2, 3, 5}) {
        int order = tau_order(d);
        for (int t = 0; t < 20; t++) {
            std::vector<Rational> p;
            for (int i = 0; i < order; i++) {
                p.push_back(rat((long)(rng() % 11) - 5, 1 + (long)(rng() % 4)));
            }
            CycRat z = CycRat::from_powers(order, p);
            Json j = io::to_json(z, d);
            EXPECT_EQ(j.size(), (size_t)cyclotomic_degree(order));
            EXPECT_EQ(io::cyc_from(j, d), z);
            // Unreduced input of length D is accepted.
            Json full = Json::array();
            for (const auto &x : p) {
                full.push_back(io::to_json(x));
            }
            EXPECT_EQ(io::cyc_from(full, d), z);
        }
    }
    // τ² = −1 for qubits, so [0, 0, 1] is −1.
    EXPECT_EQ(io::cyc_from(Json::parse(R"(["0","0","1"])"), 2), CycRat(4, -1));
    EXPECT_THROW(io::cyc_from(Json::parse(R"(["0","0","0","0","1"])"), 2), InvalidInput);
}

TEST(json, states_and_groups_roundtrip) {
    for (int d : {2, 3}) {
        for (const auto &s : enumerate_stab_states(2, d)) {
            Json j = io::to_json(s);
            EXPECT_EQ(io::state_from(io::parse_text(j.dump())), s);
            StabGroup g = s.stabiliser_group();
            EXPECT_EQ(io::group_from(io::to_json(g)).generators(), g.generators());
        }
    }
    Json bad = io::to_json(enumerate_stab_states(1, 2)[1]);
    bad["phase_poly"]["lin"] = {3};
    EXPECT_THROW(io::state_from(bad), InvalidInput);
    bad.erase("support_offset");
    EXPECT_THROW(io::state_from(bad), InvalidInput);
}

TEST(json, channels_roundtrip) {
    for (auto [n, d] : {std::pair<size_t, int>{2, 2}, {1, 3}}) {
        Channel k = lambda_channel(n, d);
        Channel back = io::channel_from(io::parse_text(io::dump(io::to_json(k))));
        EXPECT_TRUE(channels_equal(k, back));
        Channel sup = k.to_superop();
        EXPECT_TRUE(channels_equal(io::channel_from(io::to_json(sup)), k));
        Json cj = {{"d", d}, {"n_in", n}, {"n_out", n}, {"form", "choi"}, {"data", io::to_json(choi(k), d)}};
        EXPECT_TRUE(channels_equal(io::channel_from(cj), k));
    }
    Json bad = io::to_json(builtin_channel("identity", 1, 2));
    bad["form"] = "stinespring";
    EXPECT_THROW(io::channel_from(bad), InvalidInput);
    bad["form"] = "kraus";
    bad["data"][0]["matrix"][1] = Json::array();
    EXPECT_THROW(io::channel_from(bad), InvalidInput);
    bad["d"] = 4;
    EXPECT_THROW(io::channel_from(bad), InvalidInput);
}

TEST(json, lp_roundtrip) {
    VPolytopeLP lp;
    lp.dim = 2;
    lp.add_generator({rat(0), rat(0)});
    lp.add_generator({rat(1), rat(0)});
    lp.add_generator({rat(0), rat(1)});
    lp.add_equality({rat(1), rat(1)}, rat(1, 2));
    lp.set_objective({rat(1), rat(-1)});
    VPolytopeLP back = io::lp_from(io::to_json(lp));
    LPResult a = solve(lp), b = solve(back);
    EXPECT_EQ(a.objective_value, b.objective_value);
    LPResult c = io::lp_result_from(io::to_json(a));
    EXPECT_EQ(c.weights, a.weights);
    EXPECT_EQ(c.dual_certificate, a.dual_certificate);
    EXPECT_TRUE(verify_result(lp, c));
}

TEST(json, artifacts) {
    Json a = io::artifact("thing", {{"x", 1}});
    EXPECT_EQ(a.begin().key(), "schema");
    EXPECT_NO_THROW(io::check_artifact(a, "thing"));
    EXPECT_THROW(io::check_artifact(a, "other"), InvalidInput);
    a["schema"] = "v0";
    EXPECT_THROW(io::check_artifact(a), InvalidInput);
    EXPECT_THROW(io::parse_text("{"), InvalidInput);
    // Byte-stable output.
    SoAdBoundReport r = so_ad_upper_bound(2, 2);
    EXPECT_EQ(io::dump(io::to_json(r)), io::dump(io::to_json(so_ad_upper_bound(2, 2))));
}
