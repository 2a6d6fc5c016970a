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

#include "stabsep/scalar/cyclotomic.h"

#include <sstream>

#include "stabsep/util/errors.h"

namespace stabsep {

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) {
        return false;
    }
    for (int q = 3; q * q <= p; q += 2) {
        if (p % q == 0) {
            return false;
        }
    }
    return true;
}

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

int tau_order(int d) {
    return d == 2 ? 4 : d;
}

int omega_exponent(int d) {
    // τ = i for d = 2; for odd d, τ = ω^{(d+1)/2}, so ω = τ^2.
    (void)d;
    return 2;
}

int cyclotomic_degree(int order) {
    if (order == 4) {
        return 2;
    }
    if (is_odd_prime(order)) {
        return order - 1;
    }
    throw InvalidInput("unsupported cyclotomic order " + std::to_string(order));
}

CycRat::CycRat(int order) : order_(order), c_(cyclotomic_degree(order)) {
}

CycRat::CycRat(int order, const Rational &q) : CycRat(order) {
    c_[0] = q;
}

CycRat CycRat::root(int order, long k) {
    CycRat r(order, Rational(1));
    r.mul_root(k);
    return r;
}

CycRat CycRat::from_powers(int order, const std::vector<Rational> &powers) {
    CycRat r(order);
    std::vector<Rational> full(order);
    for (size_t j = 0; j < powers.size(); j++) {
        full[j % order] += powers[j];
    }
    r.reduce_from_full(full);
    return r;
}

void CycRat::reduce_from_full(std::vector<Rational> &full) {
    int phi = (int)c_.size();
    if (order_ == 4) {
        c_[0] = full[0] - full[2];
        c_[1] = full[1] - full[3];
    } else {
        const Rational &top = full[order_ - 1];
        for (int j = 0; j < phi; j++) {
            c_[j] = full[j] - top;
        }
    }
}

void CycRat::adopt(int order) {
    if (order_ == order || order == 0) {
        return;
    }
    if (order_ != 0) {
        throw DimensionMismatch("mixing cyclotomic orders " + std::to_string(order_) + " and " +
                                std::to_string(order));
    }
    order_ = order;
    c_.assign(cyclotomic_degree(order), Rational(0));
}

bool CycRat::is_zero() const {
    for (const auto &q : c_) {
        if (sgn(q) != 0) {
            return false;
        }
    }
    return true;
}

bool CycRat::is_rational() const {
    for (size_t j = 1; j < c_.size(); j++) {
        if (sgn(c_[j]) != 0) {
            return false;
        }
    }
    return true;
}

Rational CycRat::rational() const {
    if (!is_rational()) {
        throw InvalidInput("cyclotomic value is not rational: " + str());
    }
    return c_.empty() ? Rational(0) : c_[0];
}

std::optional<int> CycRat::root_exponent() const {
    if (order_ == 0) {
        return std::nullopt;
    }
    int phi = (int)c_.size();
    int nonzero = -1;
    int count = 0;
    for (int j = 0; j < phi; j++) {
        if (sgn(c_[j]) != 0) {
            nonzero = j;
            count++;
        }
    }
    if (order_ == 4) {
        if (count != 1) {
            return std::nullopt;
        }
        if (c_[nonzero] == 1) {
            return nonzero;
        }
        if (c_[nonzero] == -1) {
            return nonzero + 2;
        }
        return std::nullopt;
    }
    if (count == 1 && c_[nonzero] == 1) {
        return nonzero;
    }
    if (count == phi) {
        for (const auto &q : c_) {
            if (q != -1) {
                return std::nullopt;
            }
        }
        return order_ - 1;
    }
    return std::nullopt;
}

void CycRat::mul_root(long k) {
    if (order_ == 0) {
        return;
    }
    long s = mod(k, order_);
    if (s == 0) {
        return;
    }
    std::vector<Rational> full(order_);
    for (size_t j = 0; j < c_.size(); j++) {
        full[(j + s) % order_] = c_[j];
    }
    reduce_from_full(full);
}

CycRat CycRat::conj() const {
    if (order_ == 0) {
        return *this;
    }
    CycRat r(order_);
    std::vector<Rational> full(order_);
    for (size_t j = 0; j < c_.size(); j++) {
        full[(order_ - j) % order_] = c_[j];
    }
    r.reduce_from_full(full);
    return r;
}

CycRat CycRat::norm_sq() const {
    return *this * conj();
}

CycRat CycRat::inverse() const {
    if (is_zero()) {
        throw InvalidInput("division by zero in Q(tau)");
    }
    int phi = (int)c_.size();
    // Solve M v = e_0 where column j of M holds the coefficients of z·τ^j.
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
    CycRat col = *this;
    for (int j = 0; j < phi; j++) {
        for (int i = 0; i < phi; i++) {
            m[i][j] = col.c_[i];
        }
        col.mul_root(1);
    }
    m[0][phi] = 1;
    for (int c = 0; c < phi; c++) {
        int p = c;
        while (sgn(m[p][c]) == 0) {
            p++;
        }
        std::swap(m[p], m[c]);
        Rational inv = 1 / m[c][c];
        for (int j = c; j <= phi; j++) {
            m[c][j] *= inv;
        }
        for (int i = 0; i < phi; i++) {
            if (i != c && sgn(m[i][c]) != 0) {
                Rational f = m[i][c];
                for (int j = c; j <= phi; j++) {
                    m[i][j] -= f * m[c][j];
                }
            }
        }
    }
    CycRat r(order_);
    for (int i = 0; i < phi; i++) {
        r.c_[i] = m[i][phi];
    }
    return r;
}

CycRat CycRat::operator-() const {
    CycRat r = *this;
    for (auto &q : r.c_) {
        q = -q;
    }
    return r;
}

CycRat &CycRat::operator+=(const CycRat &o) {
    adopt(o.order_);
    for (size_t j = 0; j < o.c_.size(); j++) {
        c_[j] += o.c_[j];
    }
    return *this;
}

CycRat &CycRat::operator-=(const CycRat &o) {
    adopt(o.order_);
    for (size_t j = 0; j < o.c_.size(); j++) {
        c_[j] -= o.c_[j];
    }
    return *this;
}

CycRat &CycRat::operator*=(const Rational &q) {
    for (auto &c : c_) {
        c *= q;
    }
    return *this;
}

CycRat &CycRat::operator*=(const CycRat &o) {
    *this = *this * o;
    return *this;
}

CycRat CycRat::operator+(const CycRat &o) const {
    CycRat r = *this;
    r += o;
    return r;
}

CycRat CycRat::operator-(const CycRat &o) const {
    CycRat r = *this;
    r -= o;
    return r;
}

CycRat CycRat::operator*(const Rational &q) const {
    CycRat r = *this;
    r *= q;
    return r;
}

CycRat CycRat::operator*(const CycRat &o) const {
    int order = order_ != 0 ? order_ : o.order_;
    if (order_ != 0 && o.order_ != 0 && order_ != o.order_) {
        throw DimensionMismatch("mixing cyclotomic orders");
    }
    if (order == 0) {
        return CycRat();
    }
    CycRat r(order);
    if (c_.empty() || o.c_.empty()) {
        return r;
    }
    std::vector<Rational> full(order);
    Rational t;
    bool any = false;
    for (size_t i = 0; i < c_.size(); i++) {
        if (sgn(c_[i]) == 0) {
            continue;
        }
        for (size_t j = 0; j < o.c_.size(); j++) {
            if (sgn(o.c_[j]) == 0) {
                continue;
            }
            t = c_[i] * o.c_[j];
            full[(i + j) % order] += t;
            any = true;
        }
    }
    if (any) {
        r.reduce_from_full(full);
    }
    return r;
}

CycRat CycRat::operator/(const CycRat &o) const {
    return *this * o.inverse();
}

bool CycRat::operator==(const CycRat &o) const {
    if (order_ == o.order_) {
        return c_ == o.c_;
    }
    if (order_ == 0) {
        return o.is_zero();
    }
    if (o.order_ == 0) {
        return is_zero();
    }
    return false;
}

std::string CycRat::str() const {
    std::stringstream ss;
    bool first = true;
    for (size_t j = 0; j < c_.size(); j++) {
        if (sgn(c_[j]) == 0) {
            continue;
        }
        if (!first) {
            ss << " + ";
        }
        first = false;
        ss << c_[j].get_str();
        if (j > 0) {
            ss << "*t^" << j;
        }
    }
    if (first) {
        ss << "0";
    }
    return ss.str();
}

std::ostream &operator<<(std::ostream &out, const CycRat &z) {
    return out << z.str();
}

}  // namespace stabsep
