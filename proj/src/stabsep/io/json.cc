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

#include "stabsep/io/json.h"

#include <fstream>
#include <sstream>

#include "stabsep/util/errors.h"

namespace stabsep::io {

namespace {

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

template <class T>
T get(const Json &j, const char *key) {
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput(std::string("field '") + key + "': " + e.what());
    }
}

const Json &array(const Json &j, const char *what) {
    if (!j.is_array()) {
        throw InvalidInput(std::string(what) + " must be an array");
    }
    return j;
}

int prime_field(const Json &j) {
    int d = get<int>(j, "d");
    check_prime(d);
    return d;
}

std::string form_str(Channel::Form f) {
    return f == Channel::Form::kraus ? "kraus" : "superop";
}

}  // namespace

Json artifact(const std::string &kind, Json body) {
    Json out;
    out["schema"] = kSchema;
    out["kind"] = kind;
    for (auto it = body.begin(); it != body.end(); ++it) {
        out[it.key()] = it.value();
    }
    return out;
}

void check_artifact(const Json &j, const std::string &kind) {
    if (!j.is_object()) {
        throw InvalidInput("artifact must be a JSON object");
    }
    if (get<std::string>(j, "schema") != kSchema) {
        throw InvalidInput("unsupported schema version");
    }
    if (!kind.empty() && j.contains("kind") && get<std::string>(j, "kind") != kind) {
        throw InvalidInput("expected a '" + kind + "' artifact");
    }
}

Json parse_text(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

Json to_json(const Rational &q) {
    return rational_str(q);
}

Rational rational_from(const Json &j) {
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (!j.is_string()) {
        throw InvalidInput("rational must be a \"p/q\" string");
    }
    return parse_rational(j.get<std::string>());
}

Json to_json(const CycRat &z, int d) {
    size_t phi = (size_t)cyclotomic_degree(tau_order(d));
    std::vector<Rational> c = z.coeffs();
    c.resize(phi);
    Json out = Json::array();
    for (const auto &x : c) {
        out.push_back(to_json(x));
    }
    return out;
}

CycRat cyc_from(const Json &j, int d) {
    int order = tau_order(d);
    array(j, "CycRat");
    if (j.size() > (size_t)order) {
        throw InvalidInput("CycRat has more than D coefficients");
    }
    std::vector<Rational> p;
    for (const auto &x : j) {
        p.push_back(rational_from(x));
    }
    return CycRat::from_powers(order, p);
}

Json to_json(const CycMatrix &m, int d) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); c++) {
            row.push_back(to_json(m(r, c), d));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CycMatrix matrix_from(const Json &j, int d) {
    array(j, "matrix");
    size_t rows = j.size();
    size_t cols = rows ? array(j[0], "matrix row").size() : 0;
    CycMatrix m(rows, cols, tau_order(d));
    for (size_t r = 0; r < rows; r++) {
        if (array(j[r], "matrix row").size() != cols) {
            throw InvalidInput("ragged matrix");
        }
        for (size_t c = 0; c < cols; c++) {
            m(r, c) = cyc_from(j[r][c], d);
        }
    }
    return m;
}

Json to_json(const FVec &v) {
    return v.e;
}

FVec fvec_from(const Json &j, int d) {
    array(j, "vector");
    std::vector<int> e;
    for (const auto &x : j) {
        if (!x.is_number_integer()) {
            throw InvalidInput("vector entries must be integers");
        }
        e.push_back(fmod_pos(x.get<long>(), d));
    }
    return FVec(e, d);
}

Json to_json(const PauliOp &p) {
    Json out;
    out["phase"] = p.phase;
    out["a"] = to_json(p.a);
    return out;
}

PauliOp pauli_from(const Json &j, int d) {
    return PauliOp(get<int>(j, "phase"), fvec_from(field(j, "a"), d));
}

Json to_json(const std::vector<Gate> &gates) {
    Json out = Json::array();
    for (const auto &g : gates) {
        out.push_back(g.str());
    }
    return out;
}

std::vector<Gate> gates_from(const Json &j) {
    array(j, "gate list");
    std::vector<Gate> out;
    for (const auto &g : j) {
        if (!g.is_string()) {
            throw InvalidInput("gates must be strings");
        }
        out.push_back(parse_gate(g.get<std::string>()));
    }
    return out;
}

Json to_json(const CliffordOp &c) {
    Json out = Json::array();
    for (const auto &p : c.images()) {
        out.push_back(to_json(p));
    }
    return out;
}

Json to_json(const AffineSubspace &k) {
    Json out;
    Json basis = Json::array();
    for (const auto &b : k.basis()) {
        basis.push_back(to_json(b));
    }
    out["basis"] = basis;
    out["offset"] = to_json(k.offset());
    return out;
}

AffineSubspace affine_from(const Json &j, int d) {
    std::vector<FVec> basis;
    for (const auto &b : array(field(j, "basis"), "basis")) {
        basis.push_back(fvec_from(b, d));
    }
    FVec off = fvec_from(field(j, "offset"), d);
    for (const auto &b : basis) {
        if (b.size() != off.size()) {
            throw InvalidInput("basis and offset lengths differ");
        }
    }
    return AffineSubspace(basis, off);
}

Json to_json(const AffinePartition &p) {
    Json out = Json::array();
    for (const auto &k : p.parts) {
        Json part = to_json(k);
        part["size"] = k.cardinality();
        out.push_back(std::move(part));
    }
    return out;
}

Json to_json(const StabState &s) {
    Json out;
    out["d"] = s.d();
    out["n"] = s.n();
    Json basis = Json::array();
    for (const auto &b : s.support().basis()) {
        basis.push_back(to_json(b));
    }
    out["support_basis"] = basis;
    out["support_offset"] = to_json(s.support().offset());
    out["phase_poly"] = {{"quad", s.quad()}, {"lin", s.lin()}};
    return out;
}

StabState state_from(const Json &j) {
    int d = prime_field(j);
    size_t n = get<size_t>(j, "n");
    std::vector<FVec> basis;
    for (const auto &b : array(field(j, "support_basis"), "support_basis")) {
        basis.push_back(fvec_from(b, d));
    }
    FVec off = fvec_from(field(j, "support_offset"), d);
    if (off.size() != n) {
        throw InvalidInput("support_offset length differs from n");
    }
    for (const auto &b : basis) {
        if (b.size() != n) {
            throw InvalidInput("support basis vector length differs from n");
        }
    }
    const Json &poly = field(j, "phase_poly");
    auto quad = get<std::vector<std::vector<int>>>(poly, "quad");
    auto lin = get<std::vector<int>>(poly, "lin");
    return StabState(AffineSubspace(basis, off), quad, lin);
}

Json to_json(const StabGroup &g) {
    Json out;
    out["d"] = g.d();
    out["n"] = g.n();
    Json gens = Json::array();
    for (const auto &p : g.generators()) {
        gens.push_back(to_json(p));
    }
    out["generators"] = gens;
    return out;
}

StabGroup group_from(const Json &j) {
    int d = prime_field(j);
    size_t n = get<size_t>(j, "n");
    std::vector<PauliOp> gens;
    for (const auto &g : array(field(j, "generators"), "generators")) {
        PauliOp p = pauli_from(g, d);
        if (p.a.size() != 2 * n) {
            throw InvalidInput("generator length differs from 2n");
        }
        gens.push_back(p);
    }
    return StabGroup(n, d, gens);
}

Json to_json(const Channel &ch) {
    int d = ch.d();
    Json out;
    out["d"] = d;
    out["n_in"] = ch.n_in();
    out["n_out"] = ch.n_out();
    out["form"] = form_str(ch.form());
    Json data = Json::array();
    if (ch.form() == Channel::Form::kraus) {
        for (const auto &k : ch.kraus()) {
            data.push_back({{"weight", to_json(k.weight)}, {"half_exp", k.k.half_exp}, {"matrix", to_json(k.k.m, d)}});
        }
    } else {
        for (const auto &m : ch.unit_images()) {
            data.push_back(to_json(m, d));
        }
    }
    out["data"] = data;
    return out;
}

Channel channel_from(const Json &j) {
    int d = prime_field(j);
    size_t n_in = get<size_t>(j, "n_in"), n_out = get<size_t>(j, "n_out");
    std::string form = get<std::string>(j, "form");
    const Json &data = field(j, "data");
    if (form == "kraus") {
        std::vector<KrausOp> ops;
        for (const auto &k : array(data, "kraus data")) {
            Rational w = k.contains("weight") ? rational_from(k.at("weight")) : Rational(1);
            int h = k.contains("half_exp") ? get<int>(k, "half_exp") : 0;
            ops.push_back({ScaledMatrix(matrix_from(field(k, "matrix"), d), h, d), w});
        }
        return Channel::from_kraus(d, n_in, n_out, std::move(ops));
    }
    if (form == "superop") {
        std::vector<CycMatrix> units;
        for (const auto &m : array(data, "superop data")) {
            units.push_back(matrix_from(m, d));
        }
        return Channel::from_superop(d, n_in, n_out, std::move(units));
    }
    if (form == "choi") {
        return Channel::from_choi(d, n_in, n_out, matrix_from(data, d));
    }
    throw InvalidInput("unknown channel form '" + form + "'");
}

namespace {

Json sparse_json(const SparseVec &v) {
    Json out = Json::array();
    for (const auto &[i, x] : v.entries) {
        out.push_back({i, to_json(x)});
    }
    return out;
}

SparseVec sparse_from(const Json &j) {
    SparseVec v;
    for (const auto &e : array(j, "sparse vector")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned()) {
            throw InvalidInput("sparse entries are [index, \"p/q\"] pairs");
        }
        v.entries.push_back({e[0].get<uint32_t>(), rational_from(e[1])});
    }
    return v;
}

Json rationals_json(const std::vector<Rational> &v) {
    Json out = Json::array();
    for (const auto &x : v) {
        out.push_back(to_json(x));
    }
    return out;
}

std::vector<Rational> rationals_from(const Json &j) {
    std::vector<Rational> out;
    for (const auto &x : array(j, "rational list")) {
        out.push_back(rational_from(x));
    }
    return out;
}

}  // namespace

Json to_json(const VPolytopeLP &lp) {
    Json out;
    out["dim"] = lp.dim;
    Json gens = Json::array(), rows = Json::array();
    for (const auto &g : lp.generators) {
        gens.push_back(sparse_json(g));
    }
    for (const auto &r : lp.eq_rows) {
        rows.push_back(sparse_json(r));
    }
    out["generators"] = gens;
    out["eq_rows"] = rows;
    out["eq_rhs"] = rationals_json(lp.eq_rhs);
    out["objective"] = lp.objective ? sparse_json(*lp.objective) : Json(nullptr);
    return out;
}

VPolytopeLP lp_from(const Json &j) {
    VPolytopeLP lp;
    lp.dim = get<size_t>(j, "dim");
    for (const auto &g : array(field(j, "generators"), "generators")) {
        lp.generators.push_back(sparse_from(g));
    }
    for (const auto &r : array(field(j, "eq_rows"), "eq_rows")) {
        lp.eq_rows.push_back(sparse_from(r));
    }
    lp.eq_rhs = rationals_from(field(j, "eq_rhs"));
    if (j.contains("objective") && !j.at("objective").is_null()) {
        lp.objective = sparse_from(j.at("objective"));
    }
    lp.validate();
    return lp;
}

Json to_json(const LPResult &r) {
    Json out;
    out["status"] = status_str(r.status);
    out["weights"] = rationals_json(r.weights);
    out["objective_value"] = to_json(r.objective_value);
    out["dual_certificate"] = rationals_json(r.dual_certificate);
    out["basis"] = r.basis;
    out["iterations"] = r.iterations;
    return out;
}

LPResult lp_result_from(const Json &j) {
    LPResult r;
    r.status = parse_status(get<std::string>(j, "status"));
    r.weights = rationals_from(field(j, "weights"));
    r.objective_value = rational_from(field(j, "objective_value"));
    r.dual_certificate = rationals_from(field(j, "dual_certificate"));
    r.basis = get<std::vector<size_t>>(j, "basis");
    r.iterations = get<size_t>(j, "iterations");
    return r;
}

Json to_json(const CspCertificate &c) {
    Json out;
    out["d"] = c.d;
    out["n_in"] = c.n_in;
    out["n_out"] = c.n_out;
    out["verdict"] = c.feasible ? "feasible" : "infeasible";
    out["tp"] = c.tp;
    out["candidate_mode"] = c.candidate_mode;
    out["generators"] = c.generators;
    out["rows"] = c.rows;
    out["iterations"] = c.iterations;
    if (c.feasible) {
        Json dec = Json::array();
        for (size_t i = 0; i < c.states.size(); i++) {
            dec.push_back({{"weight", to_json(c.weights[i])}, {"state", to_json(c.states[i])}});
        }
        out["decomposition"] = dec;
    } else {
        // Zero entries are omitted; absent labels carry coefficient 0.
        Json fn = Json::array();
        for (size_t i = 0; i < c.functional.size(); i++) {
            if (sgn(c.functional[i]) != 0) {
                fn.push_back({{"row", c.functional_labels[i]}, {"value", to_json(c.functional[i])}});
            }
        }
        out["separating_functional"] = fn;
    }
    out["verified"] = c.verified;
    return out;
}

Json to_json(const PnReport &r) {
    Json out;
    out["n"] = r.n;
    out["d"] = r.d;
    out["generators"] = r.generators;
    out["optimum"] = to_json(r.optimum);
    out["unique"] = r.unique;
    out["equals_lambda"] = r.equals_lambda;
    out["sigma"] = to_json(r.sigma, r.d);
    return out;
}

Json to_json(const SoAdBoundReport &r) {
    Json out;
    out["n"] = r.n;
    out["d"] = r.d;
    out["partitions"] = r.partitions;
    out["best_partition"] = to_json(r.best_partition);
    out["best_sum_sq"] = r.best_sum_sq;
    out["bound_value"] = to_json(r.bound_value);
    out["strict_target"] = to_json(r.strict_target);
    out["margin"] = to_json(r.margin);
    out["protocol_sum_sq"] = r.protocol_sum_sq;
    out["protocol_value"] = to_json(r.protocol_value);
    return out;
}

Json to_json(const PolarForm &f, int d) {
    Json out;
    out["k"] = f.k;
    out["u_gates"] = to_json(f.gates);
    out["u_tableau"] = to_json(f.u);
    out["p"] = to_json(f.p.group);
    out["global_phase"] = {{"value", to_json(f.global_phase.value, d)}, {"half_exp", f.global_phase.half_exp}};
    return out;
}

}  // namespace stabsep::io
