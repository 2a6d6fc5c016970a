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

#include "stabsep/lp/lp.h"

#include <algorithm>
#include <map>
#include <optional>

#include "stabsep/lp/standard_form.h"
#include "stabsep/util/errors.h"
#include "stabsep/util/parallel.h"

namespace stabsep {

SparseVec SparseVec::from_dense(const std::vector<Rational> &v) {
    SparseVec s;
    for (size_t i = 0; i < v.size(); i++) {
        if (sgn(v[i]) != 0) {
            s.entries.emplace_back((uint32_t)i, v[i]);
            s.entries.back().second.canonicalize();
        }
    }
    return s;
}

std::vector<Rational> SparseVec::to_dense(size_t dim) const {
    std::vector<Rational> v(dim);
    for (const auto &[i, x] : entries) {
        v.at(i) = x;
    }
    return v;
}

Rational SparseVec::dot(const SparseVec &o) const {
    Rational r;
    size_t i = 0, j = 0;
    while (i < entries.size() && j < o.entries.size()) {
        if (entries[i].first < o.entries[j].first) {
            i++;
        } else if (entries[i].first > o.entries[j].first) {
            j++;
        } else {
            r += entries[i].second * o.entries[j].second;
            i++;
            j++;
        }
    }
    return r;
}

Rational SparseVec::dot(const std::vector<Rational> &dense) const {
    Rational r;
    for (const auto &[i, x] : entries) {
        r += x * dense.at(i);
    }
    return r;
}

void VPolytopeLP::add_generator(const std::vector<Rational> &g) {
    if (g.size() != dim) {
        throw DimensionMismatch("generator has dimension " + std::to_string(g.size()) + ", expected " +
                                std::to_string(dim));
    }
    generators.push_back(SparseVec::from_dense(g));
}

void VPolytopeLP::add_equality(const std::vector<Rational> &row, const Rational &rhs) {
    if (row.size() != dim) {
        throw DimensionMismatch("constraint row has the wrong dimension");
    }
    eq_rows.push_back(SparseVec::from_dense(row));
    eq_rhs.push_back(rhs);
    eq_rhs.back().canonicalize();
}

void VPolytopeLP::set_objective(const std::vector<Rational> &o) {
    if (o.size() != dim) {
        throw DimensionMismatch("objective has the wrong dimension");
    }
    objective = SparseVec::from_dense(o);
}

namespace {

void check_sparse(const SparseVec &v, size_t dim, const char *what) {
    for (size_t k = 0; k < v.entries.size(); k++) {
        if (v.entries[k].first >= dim) {
            throw DimensionMismatch(std::string(what) + " has an index outside the ambient dimension");
        }
        if (k && v.entries[k - 1].first >= v.entries[k].first) {
            throw InvalidInput(std::string(what) + " entries must be strictly increasing");
        }
    }
}

}  // namespace

void VPolytopeLP::validate() const {
    if (generators.empty()) {
        throw InvalidInput("LP has no generators");
    }
    if (eq_rows.size() != eq_rhs.size()) {
        throw DimensionMismatch("constraint rows and right-hand sides differ in number");
    }
    for (const auto &g : generators) {
        check_sparse(g, dim, "generator");
    }
    for (const auto &r : eq_rows) {
        check_sparse(r, dim, "constraint row");
    }
    if (objective) {
        check_sparse(*objective, dim, "objective");
    }
}

std::string status_str(LPStatus s) {
    switch (s) {
        case LPStatus::feasible:
            return "feasible";
        case LPStatus::infeasible:
            return "infeasible";
        case LPStatus::optimal:
            return "optimal";
        case LPStatus::unbounded:
            return "unbounded";
    }
    return "?";
}

LPStatus parse_status(const std::string &s) {
    for (auto st : {LPStatus::feasible, LPStatus::infeasible, LPStatus::optimal, LPStatus::unbounded}) {
        if (status_str(st) == s) {
            return st;
        }
    }
    throw InvalidInput("unknown LP status '" + s + "'");
}

namespace lp_internal {

StandardForm standard_form(const VPolytopeLP &lp) {
    lp.validate();
    StandardForm sf;
    size_t k = lp.eq_rows.size();
    sf.m = k + 1;
    sf.n = lp.generators.size();
    // Column view of the constraint matrix: coordinate → (row, value).
    std::vector<std::vector<std::pair<uint32_t, Rational>>> by_coord(lp.dim);
    for (size_t r = 0; r < k; r++) {
        for (const auto &[i, x] : lp.eq_rows[r].entries) {
            by_coord[i].emplace_back((uint32_t)r, x);
        }
    }
    sf.b = lp.eq_rhs;
    sf.b.push_back(Rational(1));
    sf.sign.assign(sf.m, 1);
    for (size_t r = 0; r < sf.m; r++) {
        if (sgn(sf.b[r]) < 0) {
            sf.sign[r] = -1;
            sf.b[r] = -sf.b[r];
        }
    }
    sf.cols.resize(sf.n);
    sf.c.assign(sf.n, Rational(0));
    sf.has_objective = lp.objective.has_value();
    std::map<uint32_t, Rational> acc;
    for (size_t j = 0; j < sf.n; j++) {
        acc.clear();
        for (const auto &[i, x] : lp.generators[j].entries) {
            for (const auto &[r, a] : by_coord[i]) {
                acc[r] += a * x;
            }
        }
        auto &col = sf.cols[j];
        for (auto &[r, v] : acc) {
            if (sgn(v) != 0) {
                col.emplace_back(r, sf.sign[r] < 0 ? Rational(-v) : v);
            }
        }
        col.emplace_back((uint32_t)k, Rational(sf.sign[k]));
        if (lp.objective) {
            sf.c[j] = lp.objective->dot(lp.generators[j]);
        }
    }
    return sf;
}

}  // namespace lp_internal

namespace {

using lp_internal::StandardForm;

enum class Phase { one, two };

// Exact revised simplex on a StandardForm with a dense rational basis inverse.
class ExactSimplex {
   public:
    explicit ExactSimplex(const StandardForm &sf) : sf_(sf), m_(sf.m), n_(sf.n) {
        dcols_.resize(n_);
        cd_.resize(n_);
        for (size_t j = 0; j < n_; j++) {
            for (const auto &[r, a] : sf_.cols[j]) {
                dcols_[j].emplace_back(r, a.get_d());
            }
            cd_[j] = sf_.c[j].get_d();
        }
    }

    bool is_artificial(size_t v) const {
        return v >= n_;
    }

    // Column of variable v as (row, value) pairs.
    std::vector<std::pair<uint32_t, Rational>> column(size_t v) const {
        if (is_artificial(v)) {
            return {{(uint32_t)(v - n_), Rational(1)}};
        }
        return sf_.cols[v];
    }

    // Installs a basis; false if singular or primal infeasible.
    bool install(const std::vector<size_t> &basis) {
        if (basis.size() != m_) {
            return false;
        }
        std::vector<bool> seen(n_ + m_, false);
        for (size_t v : basis) {
            if (v >= n_ + m_ || seen[v]) {
                return false;
            }
            seen[v] = true;
        }
        // Gauss–Jordan on [B | I].
        std::vector<std::vector<Rational>> a(m_, std::vector<Rational>(2 * m_));
        for (size_t c = 0; c < m_; c++) {
            for (const auto &[r, x] : column(basis[c])) {
                a[r][c] = x;
            }
        }
        for (size_t r = 0; r < m_; r++) {
            a[r][m_ + r] = 1;
        }
        std::vector<size_t> row_of_col(m_);
        std::vector<bool> used(m_, false);
        for (size_t c = 0; c < m_; c++) {
            // Prefer unit pivots to keep entries small.
            size_t piv = m_;
            for (size_t r = 0; r < m_; r++) {
                if (used[r] || sgn(a[r][c]) == 0) {
                    continue;
                }
                if (piv == m_ || abs(a[r][c]) == 1) {
                    piv = r;
                    if (abs(a[r][c]) == 1) {
                        break;
                    }
                }
            }
            if (piv == m_) {
                return false;
            }
            used[piv] = true;
            row_of_col[c] = piv;
            Rational inv = 1 / a[piv][c];
            for (auto &x : a[piv]) {
                if (sgn(x) != 0) {
                    x *= inv;
                }
            }
            for (size_t r = 0; r < m_; r++) {
                if (r == piv || sgn(a[r][c]) == 0) {
                    continue;
                }
                Rational f = a[r][c];
                for (size_t k = 0; k < 2 * m_; k++) {
                    if (sgn(a[piv][k]) != 0) {
                        a[r][k] -= f * a[piv][k];
                    }
                }
            }
        }
        binv_.assign(m_, std::vector<Rational>(m_));
        for (size_t c = 0; c < m_; c++) {
            for (size_t k = 0; k < m_; k++) {
                binv_[c][k] = a[row_of_col[c]][m_ + k];
            }
        }
        basis_ = basis;
        xb_.assign(m_, Rational(0));
        for (size_t i = 0; i < m_; i++) {
            for (size_t k = 0; k < m_; k++) {
                if (sgn(binv_[i][k]) != 0) {
                    xb_[i] += binv_[i][k] * sf_.b[k];
                }
            }
            if (sgn(xb_[i]) < 0) {
                return false;
            }
        }
        return true;
    }

    void install_cold() {
        basis_.resize(m_);
        binv_.assign(m_, std::vector<Rational>(m_));
        for (size_t i = 0; i < m_; i++) {
            basis_[i] = n_ + i;
            binv_[i][i] = 1;
        }
        xb_ = sf_.b;
    }

    Rational cost(size_t v, Phase ph) const {
        if (ph == Phase::one) {
            return is_artificial(v) ? Rational(-1) : Rational(0);
        }
        return is_artificial(v) ? Rational(0) : sf_.c[v];
    }

    std::vector<Rational> duals(Phase ph) const {
        std::vector<Rational> y(m_);
        for (size_t i = 0; i < m_; i++) {
            Rational cb = cost(basis_[i], ph);
            if (sgn(cb) == 0) {
                continue;
            }
            for (size_t k = 0; k < m_; k++) {
                if (sgn(binv_[i][k]) != 0) {
                    y[k] += cb * binv_[i][k];
                }
            }
        }
        return y;
    }

    Rational value(Phase ph) const {
        Rational v;
        for (size_t i = 0; i < m_; i++) {
            v += cost(basis_[i], ph) * xb_[i];
        }
        return v;
    }

    // Exact reduced cost of structural column j.
    Rational reduced_cost(size_t j, Phase ph, const std::vector<Rational> &y) const {
        Rational d = cost(j, ph);
        for (const auto &[r, a] : sf_.cols[j]) {
            if (sgn(y[r]) != 0) {
                d -= y[r] * a;
            }
        }
        return d;
    }

    // Lowest-index structural column with positive exact reduced cost, or n.
    size_t bland_entering(Phase ph, const std::vector<Rational> &y, const std::vector<bool> &in_basis) const {
        for (size_t j = 0; j < n_; j++) {
            if (!in_basis[j] && sgn(reduced_cost(j, ph, y)) > 0) {
                return j;
            }
        }
        return n_;
    }

    // Dantzig pricing in floating point; the chosen column is confirmed exactly.
    size_t guided_entering(Phase ph, const std::vector<Rational> &y, const std::vector<bool> &in_basis) const {
        std::vector<double> yd(m_);
        for (size_t i = 0; i < m_; i++) {
            yd[i] = y[i].get_d();
        }
        std::vector<std::pair<double, size_t>> cand;
        for (size_t j = 0; j < n_; j++) {
            if (in_basis[j]) {
                continue;
            }
            double d = ph == Phase::one ? 0.0 : cd_[j];
            for (const auto &[r, a] : dcols_[j]) {
                d -= yd[r] * a;
            }
            if (d > kGuideTol) {
                cand.emplace_back(-d, j);
            }
        }
        size_t keep = std::min<size_t>(cand.size(), kGuideTries);
        std::partial_sort(cand.begin(), cand.begin() + keep, cand.end());
        for (size_t t = 0; t < keep; t++) {
            if (sgn(reduced_cost(cand[t].second, ph, y)) > 0) {
                return cand[t].second;
            }
        }
        // Floating point found nothing usable: decide exactly.
        return bland_entering(ph, y, in_basis);
    }

    // Runs to optimality. Returns false if unbounded.
    //
    // Pricing is Dantzig's rule guided by floating point. After kBlandAfter
    // consecutive degenerate pivots it switches to Bland's rule until the
    // objective strictly improves, so no basis repeats and the run terminates.
    bool run(Phase ph, size_t &iterations, size_t max_iterations) {
        std::vector<bool> in_basis(n_ + m_, false);
        for (size_t v : basis_) {
            in_basis[v] = true;
        }
        size_t degenerate = 0;
        while (true) {
            if (iterations++ >= max_iterations) {
                throw CapExceeded("simplex iteration limit reached");
            }
            std::vector<Rational> y = duals(ph);
            // Artificials never re-enter.
            size_t enter = degenerate >= kBlandAfter ? bland_entering(ph, y, in_basis)
                                                     : guided_entering(ph, y, in_basis);
            if (enter == n_) {
                return true;
            }
            std::vector<Rational> u(m_);
            for (const auto &[r, a] : sf_.cols[enter]) {
                for (size_t i = 0; i < m_; i++) {
                    if (sgn(binv_[i][r]) != 0) {
                        u[i] += binv_[i][r] * a;
                    }
                }
            }
            // Ratio test, ties to the lowest variable index (artificials first).
            size_t leave = m_;
            Rational best;
            auto key = [&](size_t i) { return is_artificial(basis_[i]) ? basis_[i] - n_ : basis_[i] + m_; };
            for (size_t i = 0; i < m_; i++) {
                Rational ratio;
                if (ph == Phase::two && is_artificial(basis_[i]) && sgn(u[i]) != 0) {
                    ratio = 0;  // a basic artificial sits at 0 and must stay there
                } else if (sgn(u[i]) > 0) {
                    ratio = xb_[i] / u[i];
                } else {
                    continue;
                }
                if (leave == m_ || ratio < best || (ratio == best && key(i) < key(leave))) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) {
                return false;
            }
            degenerate = sgn(best) == 0 ? degenerate + 1 : 0;
            pivot(enter, leave, u, best);
            in_basis[basis_[leave]] = false;
            in_basis[enter] = true;
            basis_[leave] = enter;
        }
    }

    const std::vector<size_t> &basis() const {
        return basis_;
    }
    const std::vector<Rational> &xb() const {
        return xb_;
    }

   private:
    void pivot(size_t enter, size_t leave, const std::vector<Rational> &u, const Rational &theta) {
        (void)enter;
        for (size_t i = 0; i < m_; i++) {
            if (i != leave && sgn(u[i]) != 0) {
                xb_[i] -= theta * u[i];
            }
        }
        xb_[leave] = theta;
        Rational inv = 1 / u[leave];
        auto &lr = binv_[leave];
        for (auto &x : lr) {
            if (sgn(x) != 0) {
                x *= inv;
            }
        }
        for (size_t i = 0; i < m_; i++) {
            if (i == leave || sgn(u[i]) == 0) {
                continue;
            }
            for (size_t k = 0; k < m_; k++) {
                if (sgn(lr[k]) != 0) {
                    binv_[i][k] -= u[i] * lr[k];
                }
            }
        }
    }

    static constexpr double kGuideTol = 1e-9;
    static constexpr size_t kGuideTries = 8;
    static constexpr size_t kBlandAfter = 50;

    const StandardForm &sf_;
    size_t m_, n_;
    std::vector<std::vector<std::pair<uint32_t, double>>> dcols_;
    std::vector<double> cd_;
    std::vector<size_t> basis_;
    std::vector<std::vector<Rational>> binv_;
    std::vector<Rational> xb_;
};

std::vector<Rational> to_original_rows(const StandardForm &sf, const std::vector<Rational> &y) {
    std::vector<Rational> out(y.size());
    for (size_t i = 0; i < y.size(); i++) {
        out[i] = sf.sign[i] < 0 ? Rational(-y[i]) : y[i];
    }
    return out;
}

// With more rows than generators most equality rows are redundant. Keeps an
// independent subset (convexity row first). A dependent row with the wrong
// right-hand side is itself a Farkas certificate: y·(Cg, 1) = 0 for every g.
struct RowReduction {
    std::vector<size_t> kept;       // eq rows kept, increasing
    std::optional<std::vector<Rational>> farkas;
};

RowReduction reduce_rows(const VPolytopeLP &lp) {
    size_t n = lp.generators.size(), k = lp.eq_rows.size();
    std::vector<std::vector<Rational>> dense(n);
    for (size_t j = 0; j < n; j++) {
        dense[j] = lp.generators[j].to_dense(lp.dim);
    }
    struct Pivot {
        size_t col;
        std::vector<Rational> v, comb;  // comb over rows 0..k (k = convexity)
        Rational rhs;
    };
    std::vector<Pivot> echelon;
    RowReduction out;
    auto take = [&](size_t row) -> bool {
        Pivot p;
        p.v.resize(n);
        p.comb.assign(k + 1, Rational(0));
        p.comb[row] = 1;
        for (size_t j = 0; j < n; j++) {
            p.v[j] = row == k ? Rational(1) : lp.eq_rows[row].dot(dense[j]);
        }
        p.rhs = row == k ? Rational(1) : lp.eq_rhs[row];
        for (const auto &e : echelon) {
            if (sgn(p.v[e.col]) == 0) {
                continue;
            }
            Rational f = p.v[e.col] / e.v[e.col];
            for (size_t j = 0; j < n; j++) {
                p.v[j] -= f * e.v[j];
            }
            for (size_t i = 0; i <= k; i++) {
                if (sgn(e.comb[i]) != 0) {
                    p.comb[i] -= f * e.comb[i];
                }
            }
            p.rhs -= f * e.rhs;
        }
        auto nz = std::find_if(p.v.begin(), p.v.end(), [](const Rational &x) { return sgn(x) != 0; });
        if (nz == p.v.end()) {
            if (sgn(p.rhs) != 0) {
                if (sgn(p.rhs) > 0) {
                    for (auto &c : p.comb) {
                        c = -c;
                    }
                }
                out.farkas = std::move(p.comb);
            }
            return false;
        }
        p.col = (size_t)(nz - p.v.begin());
        echelon.push_back(std::move(p));
        return true;
    };
    take(k);
    for (size_t r = 0; r < k && !out.farkas; r++) {
        if (take(r)) {
            out.kept.push_back(r);
        }
    }
    return out;
}

LPResult solve_row_reduced(const VPolytopeLP &lp, const SolveOptions &opts) {
    lp.validate();
    RowReduction red = reduce_rows(lp);
    size_t n = lp.generators.size(), k = lp.eq_rows.size();
    LPResult res;
    if (red.farkas) {
        res.status = LPStatus::infeasible;
        res.dual_certificate = std::move(*red.farkas);
    } else {
        VPolytopeLP sub;
        sub.dim = lp.dim;
        sub.generators = lp.generators;
        sub.objective = lp.objective;
        for (size_t r : red.kept) {
            sub.eq_rows.push_back(lp.eq_rows[r]);
            sub.eq_rhs.push_back(lp.eq_rhs[r]);
        }
        SolveOptions o = opts;
        o.warm_basis.reset();
        res = solve(sub, o);
        if (!res.dual_certificate.empty()) {
            std::vector<Rational> y(k + 1);
            for (size_t i = 0; i < red.kept.size(); i++) {
                y[red.kept[i]] = res.dual_certificate[i];
            }
            y[k] = res.dual_certificate.back();
            res.dual_certificate = std::move(y);
        }
        for (auto &v : res.basis) {
            if (v >= n) {
                size_t r = v - n;
                v = n + (r < red.kept.size() ? red.kept[r] : k);
            }
        }
    }
    if (res.status != LPStatus::unbounded && !verify_result(lp, res)) {
        throw VerificationFailure("row-reduced LP result failed exact re-substitution");
    }
    return res;
}

}  // namespace

LPResult solve(const VPolytopeLP &lp, const SolveOptions &opts) {
    if (lp.eq_rows.size() + 1 > lp.generators.size() && !lp.generators.empty()) {
        return solve_row_reduced(lp, opts);
    }
    StandardForm sf = lp_internal::standard_form(lp);
    ExactSimplex sx(sf);
    LPResult res;
    bool installed = false;
    if (opts.warm_basis) {
        installed = sx.install(*opts.warm_basis);
    }
    if (!installed && opts.presolve) {
        auto basis = lp_internal::float_presolve(sf, std::max<size_t>(20000, 20 * sf.m));
        installed = !basis.empty() && sx.install(basis);
    }
    res.warm_started = installed;
    if (!installed) {
        sx.install_cold();
    }
    size_t it = 0;
    sx.run(Phase::one, it, opts.max_iterations);
    if (sgn(sx.value(Phase::one)) < 0) {
        // Farkas: phase-1 duals y satisfy y·A_j ≥ 0 for all j and y·b = −Σa < 0.
        res.status = LPStatus::infeasible;
        res.dual_certificate = to_original_rows(sf, sx.duals(Phase::one));
        res.basis = sx.basis();
        res.iterations = it;
        if (!verify_result(lp, res)) {
            throw VerificationFailure("infeasibility certificate failed exact re-substitution");
        }
        return res;
    }
    if (sf.has_objective && !sx.run(Phase::two, it, opts.max_iterations)) {
        res.status = LPStatus::unbounded;
        res.basis = sx.basis();
        res.iterations = it;
        return res;
    }
    res.status = sf.has_objective ? LPStatus::optimal : LPStatus::feasible;
    res.weights.assign(sf.n, Rational(0));
    for (size_t i = 0; i < sf.m; i++) {
        size_t v = sx.basis()[i];
        if (v < sf.n) {
            res.weights[v] = sx.xb()[i];
        } else if (sgn(sx.xb()[i]) != 0) {
            throw VerificationFailure("artificial variable left nonzero after phase 1");
        }
    }
    res.objective_value = sf.has_objective ? sx.value(Phase::two) : Rational(0);
    if (sf.has_objective) {
        res.dual_certificate = to_original_rows(sf, sx.duals(Phase::two));
    }
    res.basis = sx.basis();
    res.iterations = it;
    if (!verify_result(lp, res)) {
        throw VerificationFailure("LP solution failed exact re-substitution");
    }
    return res;
}

std::vector<Rational> lp_point(const VPolytopeLP &lp, const std::vector<Rational> &weights) {
    if (weights.size() != lp.generators.size()) {
        throw DimensionMismatch("weight vector length differs from generator count");
    }
    std::vector<Rational> p(lp.dim);
    for (size_t j = 0; j < weights.size(); j++) {
        if (sgn(weights[j]) == 0) {
            continue;
        }
        for (const auto &[i, x] : lp.generators[j].entries) {
            p[i] += weights[j] * x;
        }
    }
    return p;
}

bool verify_result(const VPolytopeLP &lp, const LPResult &r) {
    size_t k = lp.eq_rows.size();
    auto functional = [&](const std::vector<Rational> &y, const SparseVec &g) {
        Rational v = y[k];
        for (size_t i = 0; i < k; i++) {
            if (sgn(y[i]) != 0) {
                v += y[i] * lp.eq_rows[i].dot(g);
            }
        }
        return v;
    };
    if (r.status == LPStatus::infeasible) {
        const auto &y = r.dual_certificate;
        if (y.size() != k + 1) {
            return false;
        }
        for (const auto &g : lp.generators) {
            if (sgn(functional(y, g)) < 0) {
                return false;
            }
        }
        Rational rhs = y[k];
        for (size_t i = 0; i < k; i++) {
            rhs += y[i] * lp.eq_rhs[i];
        }
        return sgn(rhs) < 0;
    }
    if (r.status == LPStatus::unbounded) {
        return false;  // a polytope LP is never unbounded
    }
    if (r.weights.size() != lp.generators.size()) {
        return false;
    }
    Rational total;
    for (const auto &w : r.weights) {
        if (sgn(w) < 0) {
            return false;
        }
        total += w;
    }
    if (total != 1) {
        return false;
    }
    std::vector<Rational> p = lp_point(lp, r.weights);
    for (size_t i = 0; i < k; i++) {
        if (lp.eq_rows[i].dot(p) != lp.eq_rhs[i]) {
            return false;
        }
    }
    if (r.status == LPStatus::feasible) {
        return true;
    }
    if (!lp.objective || lp.objective->dot(p) != r.objective_value) {
        return false;
    }
    const auto &y = r.dual_certificate;
    if (y.size() != k + 1) {
        return false;
    }
    for (const auto &g : lp.generators) {
        if (lp.objective->dot(g) > functional(y, g)) {
            return false;
        }
    }
    Rational dual_value = y[k];
    for (size_t i = 0; i < k; i++) {
        dual_value += y[i] * lp.eq_rhs[i];
    }
    return dual_value == r.objective_value;
}

UniquenessReport certify_unique_optimum(const VPolytopeLP &lp, const std::vector<SparseVec> &image_map,
                                        const SolveOptions &opts) {
    if (!lp.objective) {
        throw InvalidInput("uniqueness certification needs an objective");
    }
    UniquenessReport rep;
    rep.optimal = solve(lp, opts);
    if (rep.optimal.status != LPStatus::optimal) {
        throw NotApplicable("LP has no optimum: " + status_str(rep.optimal.status));
    }
    rep.optimum = rep.optimal.objective_value;
    // Fix the objective as one more equality row; the optimal basis plus the
    // new row's artificial (at level 0) is a feasible warm start.
    VPolytopeLP face = lp;
    face.eq_rows.push_back(*lp.objective);
    face.eq_rhs.push_back(rep.optimum);
    size_t n = lp.generators.size(), k = lp.eq_rows.size();
    std::vector<size_t> warm;
    for (size_t v : rep.optimal.basis) {
        warm.push_back(v < n + k ? v : v + 1);
    }
    warm.push_back(n + k);
    size_t q = image_map.size();
    rep.image.assign(q, Rational(0));
    rep.image_min.assign(q, Rational(0));
    std::vector<int> same(q, 0);
    parallel_for(q, [&](size_t i) {
        VPolytopeLP hi = face;
        hi.objective = image_map[i];
        SolveOptions o = opts;
        o.warm_basis = warm;
        LPResult rmax = solve(hi, o);
        SparseVec neg = image_map[i];
        for (auto &e : neg.entries) {
            e.second = -e.second;
        }
        hi.objective = neg;
        LPResult rmin = solve(hi, o);
        if (rmax.status != LPStatus::optimal || rmin.status != LPStatus::optimal) {
            throw VerificationFailure("optimal face sub-LP did not reach an optimum");
        }
        rep.image[i] = rmax.objective_value;
        rep.image_min[i] = -rmin.objective_value;
        same[i] = rep.image[i] == rep.image_min[i];
    });
    rep.unique = std::all_of(same.begin(), same.end(), [](int s) { return s != 0; });
    return rep;
}

}  // namespace stabsep
