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

#include "stabsep/scalar/matrix.h"

#include "stabsep/util/errors.h"

namespace stabsep {

CycMatrix::CycMatrix(size_t rows, size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), data_(rows * cols, CycRat(order)) {
}

CycMatrix CycMatrix::identity(size_t dim, int order) {
    CycMatrix r(dim, dim, order);
    for (size_t i = 0; i < dim; i++) {
        r(i, i) = CycRat(order, Rational(1));
    }
    return r;
}

CycMatrix CycMatrix::column(const std::vector<CycRat> &entries, int order) {
    CycMatrix r(entries.size(), 1, order);
    for (size_t i = 0; i < entries.size(); i++) {
        r(i, 0) += entries[i];
    }
    return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix &o) const {
    if (cols_ != o.rows_) {
        throw DimensionMismatch("matrix product shape mismatch");
    }
    CycMatrix r(rows_, o.cols_, order_ ? order_ : o.order_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t k = 0; k < cols_; k++) {
            const CycRat &a = (*this)(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (size_t j = 0; j < o.cols_; j++) {
                const CycRat &b = o(k, j);
                if (b.is_zero()) {
                    continue;
                }
                r(i, j) += a * b;
            }
        }
    }
    return r;
}

CycMatrix &CycMatrix::operator+=(const CycMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw DimensionMismatch("matrix sum shape mismatch");
    }
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] += o.data_[i];
    }
    return *this;
}

CycMatrix &CycMatrix::operator-=(const CycMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw DimensionMismatch("matrix difference shape mismatch");
    }
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

CycMatrix CycMatrix::operator+(const CycMatrix &o) const {
    CycMatrix r = *this;
    r += o;
    return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix &o) const {
    CycMatrix r = *this;
    r -= o;
    return r;
}

CycMatrix CycMatrix::operator*(const CycRat &s) const {
    CycMatrix r = *this;
    for (auto &e : r.data_) {
        if (!e.is_zero()) {
            e = e * s;
        }
    }
    return r;
}

CycMatrix CycMatrix::operator*(const Rational &s) const {
    CycMatrix r = *this;
    for (auto &e : r.data_) {
        e *= s;
    }
    return r;
}

bool CycMatrix::operator==(const CycMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

CycMatrix CycMatrix::adjoint() const {
    CycMatrix r(cols_, rows_, order_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            r(j, i) = (*this)(i, j).conj();
        }
    }
    return r;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix r(cols_, rows_, order_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

CycMatrix CycMatrix::conj() const {
    CycMatrix r = *this;
    for (auto &e : r.data_) {
        e = e.conj();
    }
    return r;
}

CycMatrix CycMatrix::kron(const CycMatrix &o) const {
    CycMatrix r(rows_ * o.rows_, cols_ * o.cols_, order_ ? order_ : o.order_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            const CycRat &a = (*this)(i, j);
            if (a.is_zero()) {
                continue;
            }
            for (size_t k = 0; k < o.rows_; k++) {
                for (size_t l = 0; l < o.cols_; l++) {
                    const CycRat &b = o(k, l);
                    if (!b.is_zero()) {
                        r(i * o.rows_ + k, j * o.cols_ + l) = a * b;
                    }
                }
            }
        }
    }
    return r;
}

CycRat CycMatrix::trace() const {
    CycRat t(order_);
    for (size_t i = 0; i < rows_ && i < cols_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

bool CycMatrix::is_zero() const {
    for (const auto &e : data_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

bool CycMatrix::is_hermitian() const {
    if (rows_ != cols_) {
        return false;
    }
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = i; j < cols_; j++) {
            if ((*this)(i, j) != (*this)(j, i).conj()) {
                return false;
            }
        }
    }
    return true;
}

CycMatrix CycMatrix::col(size_t c) const {
    CycMatrix r(rows_, 1, order_);
    for (size_t i = 0; i < rows_; i++) {
        r(i, 0) = (*this)(i, c);
    }
    return r;
}

std::optional<CycRat> CycMatrix::ratio_to(const CycMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        return std::nullopt;
    }
    size_t pivot = data_.size();
    for (size_t i = 0; i < o.data_.size(); i++) {
        if (!o.data_[i].is_zero()) {
            pivot = i;
            break;
        }
    }
    if (pivot == data_.size()) {
        return std::nullopt;
    }
    CycRat c = data_[pivot] / o.data_[pivot];
    for (size_t i = 0; i < data_.size(); i++) {
        if (data_[i] != o.data_[i] * c) {
            return std::nullopt;
        }
    }
    return c;
}

CycMatrix partial_trace(const CycMatrix &m, size_t da, size_t db, bool trace_second) {
    if (m.rows() != da * db || m.cols() != da * db) {
        throw DimensionMismatch("partial trace shape mismatch");
    }
    size_t keep = trace_second ? da : db;
    size_t drop = trace_second ? db : da;
    CycMatrix r(keep, keep, m.order());
    for (size_t i = 0; i < keep; i++) {
        for (size_t j = 0; j < keep; j++) {
            for (size_t k = 0; k < drop; k++) {
                size_t row = trace_second ? i * db + k : k * db + i;
                size_t col = trace_second ? j * db + k : k * db + j;
                r(i, j) += m(row, col);
            }
        }
    }
    return r;
}

std::optional<CycRat> sqrt_d_in_field(int d) {
    if (d % 4 != 1) {
        return std::nullopt;
    }
    int order = tau_order(d);
    CycRat g(order);
    for (long x = 0; x < d; x++) {
        g += CycRat::root(order, 2 * x * x);
    }
    return g;
}

namespace {

// Returns (integer part q, remainder r ∈ {0,1}) with e = 2q + r.
std::pair<int, int> split_half_exp(int e) {
    int r = ((e % 2) + 2) % 2;
    return {(e - r) / 2, r};
}

Rational int_power(int d, int q) {
    Rational r(1);
    for (int i = 0; i < (q < 0 ? -q : q); i++) {
        r *= d;
    }
    return q < 0 ? Rational(1) / r : r;
}

}  // namespace

ScaledMatrix ScaledMatrix::normalised() const {
    auto [q, r] = split_half_exp(half_exp);
    ScaledMatrix out(q == 0 ? m : m * int_power(d, q), r, d);
    if (r == 1) {
        if (auto s = sqrt_d_in_field(d)) {
            out.m = out.m * *s;
            out.half_exp = 0;
        }
    }
    return out;
}

ScaledMatrix ScaledMatrix::operator*(const ScaledMatrix &o) const {
    return ScaledMatrix(m * o.m, half_exp + o.half_exp, d).normalised();
}

ScaledMatrix ScaledMatrix::adjoint() const {
    return ScaledMatrix(m.adjoint(), half_exp, d);
}

ScaledMatrix ScaledMatrix::kron(const ScaledMatrix &o) const {
    return ScaledMatrix(m.kron(o.m), half_exp + o.half_exp, d).normalised();
}

bool ScaledMatrix::operator==(const ScaledMatrix &o) const {
    ScaledMatrix a = normalised(), b = o.normalised();
    if (a.half_exp == b.half_exp) {
        return a.m == b.m;
    }
    return a.m.is_zero() && b.m.is_zero() && a.m.rows() == b.m.rows() && a.m.cols() == b.m.cols();
}

ScaledMatrix ScaledMatrix::operator+(const ScaledMatrix &o) const {
    ScaledMatrix a = normalised(), b = o.normalised();
    if (a.m.is_zero()) {
        return b;
    }
    if (b.m.is_zero()) {
        return a;
    }
    if (a.half_exp != b.half_exp) {
        throw InvalidInput("sum of matrices with incompatible sqrt(d) scalings");
    }
    return ScaledMatrix(a.m + b.m, a.half_exp, d);
}

ScaledScalar ScaledScalar::normalised() const {
    auto [q, r] = split_half_exp(half_exp);
    ScaledScalar out{q == 0 ? value : value * int_power(d, q), r, d};
    if (r == 1) {
        if (auto s = sqrt_d_in_field(d)) {
            out.value = out.value * *s;
            out.half_exp = 0;
        }
    }
    return out;
}

bool ScaledScalar::operator==(const ScaledScalar &o) const {
    ScaledScalar a = normalised(), b = o.normalised();
    if (a.half_exp == b.half_exp) {
        return a.value == b.value;
    }
    return a.value.is_zero() && b.value.is_zero();
}

std::optional<ScaledScalar> equal_up_to_phase(const ScaledMatrix &a, const ScaledMatrix &b) {
    ScaledMatrix na = a.normalised(), nb = b.normalised();
    int order = na.m.order() ? na.m.order() : nb.m.order();
    if (na.m.is_zero() && nb.m.is_zero()) {
        return ScaledScalar{CycRat(order, Rational(1)), 0, a.d};
    }
    auto r = na.m.ratio_to(nb.m);
    if (!r) {
        return std::nullopt;
    }
    ScaledScalar c{*r, na.half_exp - nb.half_exp, a.d};
    // |c|² = r r̄ d^{Δe} must equal 1.
    ScaledScalar mod_sq{r->norm_sq(), 2 * c.half_exp, a.d};
    if (!(mod_sq == ScaledScalar{CycRat(order, Rational(1)), 0, a.d})) {
        return std::nullopt;
    }
    return c.normalised();
}

}  // namespace stabsep
