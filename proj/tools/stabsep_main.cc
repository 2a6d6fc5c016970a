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

// stabsep: certificate-emitting front end.
//
// Exit codes: 0 success / feasible, 2 usage, cap or malformed input,
// 3 certified negative verdict, 4 internal verification failure.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "stabsep/io/json.h"
#include "stabsep/util/errors.h"

using namespace stabsep;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kNegative = 3;
constexpr int kInternal = 4;

struct Common {
    int d = 2;
    size_t n = 1;
    std::string out;
    uint64_t dense_cap = 0, enum_cap = 0, partition_cap = 0;
};

void add_common(CLI::App *cmd, Common &c, bool needs_n = true) {
    cmd->add_option("-d", c.d, "prime qudit dimension")->capture_default_str();
    if (needs_n) {
        cmd->add_option("-n", c.n, "number of qudits")->capture_default_str();
    }
    cmd->add_option("-o,--output", c.out, "write the JSON artifact here instead of stdout");
    cmd->add_option("--dense-cap", c.dense_cap, "max dense matrix dimension");
    cmd->add_option("--enum-cap", c.enum_cap, "max enumerated stabiliser states");
    cmd->add_option("--partition-cap", c.partition_cap, "max points in partition search");
}

void apply_caps(const Common &c) {
    check_prime(c.d);
    Caps &caps = default_caps();
    if (c.dense_cap) {
        caps.dense_cap = c.dense_cap;
    }
    if (c.enum_cap) {
        caps.enum_cap = c.enum_cap;
    }
    if (c.partition_cap) {
        caps.partition_cap = c.partition_cap;
    }
}

void emit(const Common &c, const Json &j) {
    if (c.out.empty()) {
        std::cout << io::dump(j);
        return;
    }
    std::ofstream f(c.out);
    if (!f) {
        throw InvalidInput("cannot write '" + c.out + "'");
    }
    f << io::dump(j);
}

int cmd_enumerate(const Common &c, bool orth, bool list) {
    std::vector<StabState> states =
        orth ? states_orthogonal_to_zero(c.n, c.d) : enumerate_stab_states(c.n, c.d);
    Json body{{"n", c.n}, {"d", c.d}, {"orthogonal_to_zero", orth}, {"count", states.size()}};
    if (!orth) {
        body["count_formula"] = stab_state_count(c.n, c.d);
    }
    if (list || !c.out.empty()) {
        Json arr = Json::array();
        for (const auto &s : states) {
            arr.push_back(io::to_json(s));
        }
        body["states"] = arr;
    }
    emit(c, io::artifact("enumeration", body));
    return kOk;
}

// A state file holds one state, a state artifact, or an enumeration (pick with index).
StabState load_state(const std::string &path, long index) {
    Json j = io::read_file(path);
    if (j.contains("states")) {
        io::check_artifact(j, "enumeration");
        const Json &arr = j.at("states");
        if (index < 0 || (size_t)index >= arr.size()) {
            throw InvalidInput("--index out of range for " + std::to_string(arr.size()) + " states");
        }
        return io::state_from(arr[(size_t)index]);
    }
    if (j.contains("schema")) {
        io::check_artifact(j, "state");
    }
    return io::state_from(j);
}

int cmd_certify(const Common &c, const std::string &builtin, const std::string &file, const std::string &cands,
                bool no_presolve) {
    Channel ch;
    if (!builtin.empty()) {
        ch = builtin_channel(builtin, c.n, c.d);
    } else {
        Json j = io::read_file(file);
        if (j.contains("schema")) {
            io::check_artifact(j, "channel");
        }
        ch = io::channel_from(j);
    }
    CspOptions opts;
    opts.presolve = !no_presolve;
    opts.caps = default_caps();
    if (!cands.empty()) {
        Json j = io::read_file(cands);
        const Json &arr = j.contains("states") ? j.at("states") : j;
        if (!arr.is_array()) {
            throw InvalidInput("candidate file must list states");
        }
        std::vector<StabState> states;
        for (const auto &s : arr) {
            states.push_back(io::state_from(s));
        }
        opts.candidates = std::move(states);
    }
    CspCertificate cert = certify_csp(ch, opts);
    Json body = io::to_json(cert);
    body["channel"] = builtin.empty() ? Json(file) : Json(builtin);
    emit(c, io::artifact("csp_certificate", body));
    return cert.feasible ? kOk : kNegative;
}

int cmd_separation(const Common &c) {
    PnReport pn = pn_polytope_lp(c.n, c.d);
    SoAdBoundReport so = so_ad_upper_bound(c.n, c.d);
    Rational margin = pn.optimum - so.bound_value;
    Json body;
    body["n"] = c.n;
    body["d"] = c.d;
    body["L_max_Pn"] = io::to_json(pn.optimum);
    body["unique"] = pn.unique;
    body["equals_lambda"] = pn.equals_lambda;
    body["lambda_matrix"] = io::to_json(pn.sigma, c.d);
    body["so_ad_bound"] = io::to_json(so.bound_value);
    body["margin"] = io::to_json(margin);
    body["protocol_value"] = io::to_json(so.protocol_value);
    body["partitions_searched"] = so.partitions;
    body["best_partition"] = io::to_json(so.best_partition);
    emit(c, io::artifact("separation_report", body));
    // n ≥ 2 must separate; n = 1 must not.
    bool expected = c.n >= 2 ? sgn(margin) > 0 && pn.unique : sgn(margin) == 0;
    return expected ? kOk : kNegative;
}

int cmd_polar(const Common &c, const std::string &file, long index) {
    StabState s = load_state(file, index);
    if (s.n() % 2 != 0) {
        throw InvalidInput("polar form needs a state on 2n qudits");
    }
    PolarForm f = polar_form(s);
    // polar_form verifies internally; repeat the check on the emitted data.
    ScaledMatrix rec = polar_reconstruction(f, s.d());
    ScaledMatrix phase(CycMatrix(1, 1, tau_order(s.d())), f.global_phase.half_exp, s.d());
    phase.m(0, 0) = f.global_phase.value;
    if (!(rec * phase == s.amplitudes())) {
        throw VerificationFailure("polar reconstruction differs from the state");
    }
    Json body = io::to_json(f, s.d());
    body["n"] = s.n() / 2;
    body["d"] = s.d();
    body["state"] = io::to_json(s);
    body["verified"] = true;
    emit(c, io::artifact("polar_form", body));
    return kOk;
}

int cmd_csp1(const Common &c, size_t objectives, uint64_t seed) {
    Csp1Report r = csp1_equals_so1(c.d, objectives, seed);
    Json body{{"d", r.d},
              {"seed", seed},
              {"constructed", r.constructed},
              {"constructed_csp", r.constructed_csp},
              {"objectives", r.objectives},
              {"probe_matches", r.probe_matches},
              {"degenerate", r.degenerate},
              {"mismatches", r.mismatches}};
    emit(c, io::artifact("csp1_probe", body));
    return r.mismatches.empty() && r.constructed == r.constructed_csp ? kOk : kNegative;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact stabiliser-channel separation toolkit"};
    app.require_subcommand(1);

    Common c;
    bool orth = false, list = false, no_presolve = false;
    std::string builtin, file, cands;
    long index = 0;
    size_t objectives = 64;
    uint64_t seed = 1;

    auto *en = app.add_subcommand("enumerate", "count (and list) stabiliser states");
    add_common(en, c);
    en->add_flag("--orthogonal-to-zero", orth, "only states with <0|s> = 0");
    en->add_flag("--list", list, "include the canonical state list");

    auto *cc = app.add_subcommand("certify-csp", "decide whether a channel is completely stabiliser-preserving");
    add_common(cc, c);
    auto *b = cc->add_option("--builtin", builtin, "builtin channel name");
    auto *fopt = cc->add_option("--file", file, "channel JSON file");
    b->excludes(fopt);
    cc->add_option("--candidates", cands, "restrict generators to the states in this file");
    cc->add_flag("--no-presolve", no_presolve, "skip the floating-point starting basis");

    auto *sep = app.add_subcommand("separation", "L over P_n against the SO∩AD partition bound");
    add_common(sep, c);

    auto *po = app.add_subcommand("polar", "polar form of a 2n-qudit stabiliser state");
    add_common(po, c, false);
    po->add_option("--file", file, "state JSON (or enumeration artifact)")->required();
    po->add_option("--index", index, "state index within an enumeration artifact");

    auto *c1 = app.add_subcommand("csp1", "single-qudit CSP = SO probe");
    add_common(c1, c, false);
    c1->add_option("--objectives", objectives, "random objectives")->capture_default_str();
    c1->add_option("--seed", seed, "probe seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        apply_caps(c);
        if (*en) {
            return cmd_enumerate(c, orth, list);
        }
        if (*cc) {
            if (builtin.empty() && file.empty()) {
                throw InvalidInput("certify-csp needs --builtin or --file");
            }
            return cmd_certify(c, builtin, file, cands, no_presolve);
        }
        if (*sep) {
            return cmd_separation(c);
        }
        if (*po) {
            return cmd_polar(c, file, index);
        }
        if (*c1) {
            return cmd_csp1(c, objectives, seed);
        }
    } catch (const VerificationFailure &e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kInternal;
    } catch (const StabsepError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
