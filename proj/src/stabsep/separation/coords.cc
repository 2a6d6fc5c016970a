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

namespace stabsep {

namespace {

size_t phi_of(int d) {
    return d == 2 ? 2 : (size_t)(d - 1);
}

// Power-basis coefficients of z, padded to φ(D) (the agnostic zero has none).
std::vector<Rational> coeffs_of(const CycRat &z, size_t phi) {
    std::vector<Rational> c = z.coeffs();
    c.resize(phi);
    return c;
}

}  // namespace

PauliCoordinates::PauliCoordinates(size_t n, int d) : n_(n), d_(d) {
    check_prime(d);
    uint64_t total = checked_pow(checked_pow(d, n), 2);
    first_.assign(total, -1);
    for (uint64_t a = 0; a < total; a++) {
        FVec v = FVec::from_index(a, 2 * n, d);
        uint64_t neg = (-v).index();
        if (a > neg) {
            continue;
        }
        first_[a] = (int64_t)rows_;
        size_t w = width(a);
        for (size_t s = 0; s < w; s++) {
            row_pauli_.push_back(a);
            row_slot_.push_back((int)s);
        }
        rows_ += w;
    }
}

size_t PauliCoordinates::width(uint64_t a) const {
    // c_a is real when a = −a: for qubits always, for odd d only at a = 0.
    if (d_ == 2 || a == 0) {
        return 1;
    }
    return phi_of(d_);
}

std::optional<size_t> PauliCoordinates::first_row(uint64_t a) const {
    if (a >= first_.size()) {
        throw DimensionMismatch("Pauli index out of range");
    }
    if (first_[a] < 0) {
        return std::nullopt;
    }
    return (size_t)first_[a];
}

std::string PauliCoordinates::label(size_t row) const {
    if (row == rows_) {
        return "convexity";
    }
    PauliOp p(0, FVec::from_index(row_pauli_.at(row), 2 * n_, d_));
    return p.str() + "#" + std::to_string(row_slot_[row]);
}

std::vector<Rational> PauliCoordinates::of_matrix(const CycMatrix &m) const {
    uint64_t dim = checked_pow(d_, n_);
    if (m.rows() != dim || m.cols() != dim) {
        throw DimensionMismatch("operator size does not match the coordinate system");
    }
    if (!m.is_hermitian()) {
        throw InvalidInput("Pauli coordinates are defined for Hermitian operators");
    }
    int order = tau_order(d_);
    std::vector<Rational> out(rows_);
    std::vector<FVec> labels;
    for (uint64_t y = 0; y < dim; y++) {
        labels.push_back(FVec::from_index(y, n_, d_));
    }
    for (uint64_t a = 0; a < first_.size(); a++) {
        if (first_[a] < 0) {
            continue;
        }
        FVec v = FVec::from_index(a, 2 * n_, d_);
        FVec z = v.slice(0, n_), x = v.slice(n_, n_);
        int gamma = pauli_gamma(v);
        // ⟨y+x| w(a) |y⟩ = τ^{−γ} ω^{z·(y+x)}, so tr(w(a)† M) = Σ_y τ^{γ − 2 z·(y+x)} M(y+x, y).
        CycRat t(order);
        for (uint64_t y = 0; y < dim; y++) {
            FVec r = labels[y] + x;
            const CycRat &entry = m(r.index(), y);
            if (entry.is_zero()) {
                continue;
            }
            CycRat term = entry;
            term.mul_root(gamma - 2L * dot(z, r));
            t += term;
        }
        size_t w = width(a);
        std::vector<Rational> c = coeffs_of(t, phi_of(d_));
        for (size_t s = 0; s < w; s++) {
            out[first_[a] + s] = c[s];
        }
    }
    return out;
}

SparseVec PauliCoordinates::of_state(const StabState &s) const {
    if (s.n() != n_ || s.d() != d_) {
        throw DimensionMismatch("state does not match the coordinate system");
    }
    int order = tau_order(d_);
    size_t phi = phi_of(d_);
    SparseVec out;
    for (const auto &[a, e] : pauli_coordinates(s)) {
        if (first_[a] < 0) {
            continue;
        }
        std::vector<Rational> c = coeffs_of(CycRat::root(order, e), phi);
        size_t w = width(a);
        for (size_t slot = 0; slot < w; slot++) {
            if (sgn(c[slot]) != 0) {
                out.entries.push_back({(uint32_t)(first_[a] + slot), c[slot]});
            }
        }
    }
    return out;
}

SigmaCoordinates::SigmaCoordinates(size_t n, int d) : n_(n), d_(d) {
    check_prime(d);
    dim_ = checked_pow(d, n);
    phi_ = phi_of(d);
    rows_ = dim_ + dim_ * (dim_ - 1) / 2 * phi_;
}

size_t SigmaCoordinates::pair_row(uint64_t x, uint64_t y) const {
    if (!(x < y && y < dim_)) {
        throw DimensionMismatch("pair_row needs x < y < d^n");
    }
    uint64_t before = x * (2 * dim_ - x - 1) / 2 + (y - x - 1);
    return dim_ + before * phi_;
}

std::vector<Rational> SigmaCoordinates::of_matrix(const CycMatrix &sigma) const {
    if (sigma.rows() != dim_ || sigma.cols() != dim_) {
        throw DimensionMismatch("sigma has the wrong size");
    }
    if (!sigma.is_hermitian()) {
        throw InvalidInput("sigma must be Hermitian");
    }
    std::vector<Rational> out(rows_);
    for (uint64_t x = 0; x < dim_; x++) {
        out[x] = sigma(x, x).is_zero() ? Rational(0) : sigma(x, x).rational();
        for (uint64_t y = x + 1; y < dim_; y++) {
            std::vector<Rational> c = coeffs_of(sigma(x, y), phi_);
            size_t r = pair_row(x, y);
            for (size_t s = 0; s < phi_; s++) {
                out[r + s] = c[s];
            }
        }
    }
    return out;
}

SparseVec SigmaCoordinates::of_state(const StabState &s) const {
    if (s.n() != n_ || s.d() != d_) {
        throw DimensionMismatch("state does not match sigma coordinates");
    }
    int order = tau_order(d_);
    std::vector<FVec> pts = s.support().elements();
    std::vector<uint64_t> idx;
    std::vector<int> ex;
    for (const auto &p : pts) {
        idx.push_back(p.index());
        ex.push_back(*s.amplitude_exponent(p));
    }
    Rational inv(1);
    inv /= (long)pts.size();
    std::vector<std::pair<uint32_t, Rational>> entries;
    for (size_t i = 0; i < pts.size(); i++) {
        entries.push_back({(uint32_t)idx[i], inv});
        for (size_t j = i + 1; j < pts.size(); j++) {
            // elements() is increasing, so idx[i] < idx[j].
            std::vector<Rational> c = coeffs_of(CycRat::root(order, ex[i] - ex[j]) * inv, phi_);
            size_t r = pair_row(idx[i], idx[j]);
            for (size_t t = 0; t < phi_; t++) {
                if (sgn(c[t]) != 0) {
                    entries.push_back({(uint32_t)(r + t), c[t]});
                }
            }
        }
    }
    std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return SparseVec{std::move(entries)};
}

CycMatrix SigmaCoordinates::to_matrix(const std::vector<Rational> &coords) const {
    if (coords.size() != rows_) {
        throw DimensionMismatch("coordinate vector has the wrong length");
    }
    int order = tau_order(d_);
    CycMatrix m(dim_, dim_, order);
    for (uint64_t x = 0; x < dim_; x++) {
        m(x, x) = CycRat(order, coords[x]);
        for (uint64_t y = x + 1; y < dim_; y++) {
            size_t r = pair_row(x, y);
            std::vector<Rational> c(coords.begin() + r, coords.begin() + r + phi_);
            m(x, y) = CycRat::from_powers(order, c);
            m(y, x) = m(x, y).conj();
        }
    }
    return m;
}

std::vector<Rational> SigmaCoordinates::objective_L() const {
    // L = d^{-n} (Σ σ_xx + 2 Σ_{x<y} T(σ_xy)), T the normalised field trace,
    // which is Q-linear and agrees with Re on every σ whose L is rational.
    std::vector<Rational> o(rows_);
    Rational scale(1);
    scale /= (long)dim_;
    std::vector<Rational> t(phi_);
    t[0] = 1;
    if (d_ != 2) {
        for (size_t s = 1; s < phi_; s++) {
            t[s] = Rational(-1, (long)(d_ - 1));
        }
    }
    for (uint64_t x = 0; x < dim_; x++) {
        o[x] = scale;
        for (uint64_t y = x + 1; y < dim_; y++) {
            size_t r = pair_row(x, y);
            for (size_t s = 0; s < phi_; s++) {
                o[r + s] = 2 * scale * t[s];
                o[r + s].canonicalize();
            }
        }
    }
    return o;
}

Rational functional_L(const CycMatrix &sigma) {
    CycRat s(sigma.order());
    for (size_t x = 0; x < sigma.rows(); x++) {
        for (size_t y = 0; y < sigma.cols(); y++) {
            s += sigma(x, y);
        }
    }
    if (!s.is_zero() && !s.is_rational()) {
        throw InvalidInput("L(sigma) is not rational");
    }
    Rational v = s.is_zero() ? Rational(0) : s.rational();
    return v / (long)sigma.rows();
}

}  // namespace stabsep
