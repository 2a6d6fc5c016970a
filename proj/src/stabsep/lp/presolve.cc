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

// Floating-point revised simplex used only to pick a starting basis for the
// exact solver. Nothing it computes is trusted.
#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "stabsep/lp/standard_form.h"

namespace stabsep::lp_internal {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr size_t kRefactorEvery = 64;
constexpr size_t kDegenerateSwitch = 2000;
constexpr double kPerturb = 1e-7;

struct FloatLP {
    size_t m, n;
    std::vector<std::vector<std::pair<uint32_t, double>>> cols;
    Eigen::VectorXd b;
    std::vector<double> c;
};

class FloatSimplex {
   public:
    explicit FloatSimplex(const FloatLP &lp) : lp_(lp), m_(lp.m), n_(lp.n) {
        basis_.resize(m_);
        in_basis_.assign(n_ + m_, false);
        for (size_t i = 0; i < m_; i++) {
            basis_[i] = n_ + i;
            in_basis_[n_ + i] = true;
        }
        binv_ = Eigen::MatrixXd::Identity(m_, m_);
        xb_ = lp_.b;
    }

    bool artificial(size_t v) const {
        return v >= n_;
    }

    double cost(size_t v, bool phase1) const {
        if (phase1) {
            return artificial(v) ? -1.0 : 0.0;
        }
        return artificial(v) ? 0.0 : lp_.c[v];
    }

    bool refactor() {
        Eigen::MatrixXd bm = Eigen::MatrixXd::Zero(m_, m_);
        for (size_t i = 0; i < m_; i++) {
            size_t v = basis_[i];
            if (artificial(v)) {
                bm(v - n_, i) = 1.0;
            } else {
                for (const auto &[r, a] : lp_.cols[v]) {
                    bm(r, i) = a;
                }
            }
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(bm);
        if (!lu.isInvertible()) {
            return false;
        }
        binv_ = lu.inverse();
        xb_ = binv_ * lp_.b;
        return true;
    }

    // Returns false if numerically stuck.
    bool run(bool phase1, size_t &budget) {
        size_t degenerate = 0;
        size_t since_refactor = 0;
        while (budget-- > 0) {
            if (since_refactor++ >= kRefactorEvery) {
                if (!refactor()) {
                    return false;
                }
                since_refactor = 0;
            }
            Eigen::VectorXd cb(m_);
            for (size_t i = 0; i < m_; i++) {
                cb[i] = cost(basis_[i], phase1);
            }
            Eigen::VectorXd y = binv_.transpose() * cb;
            bool bland = degenerate >= kDegenerateSwitch;
            size_t enter = n_;
            double best = kCostTol;
            for (size_t j = 0; j < n_; j++) {
                if (in_basis_[j]) {
                    continue;
                }
                double d = cost(j, phase1);
                for (const auto &[r, a] : lp_.cols[j]) {
                    d -= y[r] * a;
                }
                if (d > best) {
                    enter = j;
                    best = d;
                    if (bland) {
                        break;
                    }
                }
            }
            if (enter == n_) {
                return true;
            }
            Eigen::VectorXd u = Eigen::VectorXd::Zero(m_);
            for (const auto &[r, a] : lp_.cols[enter]) {
                u += binv_.col(r) * a;
            }
            size_t leave = m_;
            double theta = 0;
            for (size_t i = 0; i < m_; i++) {
                double ratio;
                if (!phase1 && artificial(basis_[i]) && std::abs(u[i]) > kPivotTol) {
                    ratio = 0;
                } else if (u[i] > kPivotTol) {
                    ratio = std::max(xb_[i], 0.0) / u[i];
                } else {
                    continue;
                }
                if (leave == m_ || ratio < theta - 1e-12 ||
                    (ratio <= theta + 1e-12 && std::abs(u[i]) > std::abs(u[leave]))) {
                    leave = i;
                    theta = ratio;
                }
            }
            if (leave == m_) {
                return false;  // unbounded in floating point: give up
            }
            degenerate = theta < 1e-12 ? degenerate + 1 : 0;
            xb_ -= theta * u;
            xb_[leave] = theta;
            Eigen::RowVectorXd lr = binv_.row(leave) / u[leave];
            for (size_t i = 0; i < m_; i++) {
                if (i != leave && u[i] != 0) {
                    binv_.row(i) -= u[i] * lr;
                }
            }
            binv_.row(leave) = lr;
            in_basis_[basis_[leave]] = false;
            in_basis_[enter] = true;
            basis_[leave] = enter;
        }
        return false;
    }

    void set_rhs(const Eigen::VectorXd &b) {
        lp_.b = b;
    }

    double min_xb() const {
        return xb_.size() ? xb_.minCoeff() : 0.0;
    }

    double phase1_value() const {
        double v = 0;
        for (size_t i = 0; i < m_; i++) {
            if (artificial(basis_[i])) {
                v -= xb_[i];
            }
        }
        return v;
    }

    const std::vector<size_t> &basis() const {
        return basis_;
    }

   private:
    FloatLP lp_;
    size_t m_, n_;
    std::vector<size_t> basis_;
    std::vector<bool> in_basis_;
    Eigen::MatrixXd binv_;
    Eigen::VectorXd xb_;
};

}  // namespace

std::vector<size_t> float_presolve(const StandardForm &sf, size_t max_iterations) {
    FloatLP lp;
    lp.m = sf.m;
    lp.n = sf.n;
    lp.cols.resize(sf.n);
    for (size_t j = 0; j < sf.n; j++) {
        for (const auto &[r, a] : sf.cols[j]) {
            lp.cols[j].emplace_back(r, a.get_d());
        }
    }
    lp.b.resize(sf.m);
    for (size_t i = 0; i < sf.m; i++) {
        lp.b[i] = sf.b[i].get_d();
    }
    lp.c.resize(sf.n);
    for (size_t j = 0; j < sf.n; j++) {
        lp.c[j] = sf.c[j].get_d();
    }
    // A generic right-hand side makes every basic solution nondegenerate, so
    // Dantzig pricing cannot stall. The perturbation is removed afterwards.
    Eigen::VectorXd exact_b = lp.b;
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> jitter(1.0, 2.0);
    for (size_t i = 0; i < sf.m; i++) {
        lp.b[i] += kPerturb * (1.0 + std::abs(lp.b[i])) * jitter(rng);
    }
    FloatSimplex sx(lp);
    size_t budget = max_iterations;
    bool ok = sx.run(true, budget);
    sx.set_rhs(exact_b);
    ok = ok && sx.refactor();
    if (ok && sf.has_objective && sx.phase1_value() > -1e-7) {
        sx.run(false, budget);
    }
    // Even a stalled run leaves a useful basis; the exact side re-checks it.
    return sx.basis();
}

}  // namespace stabsep::lp_internal
