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

#include "stabsep/field/fvec.h"

#include <sstream>

#include "stabsep/util/errors.h"

namespace stabsep {

bool is_prime(int d) {
    if (d < 2) {
        return false;
    }
    for (int q = 2; q * q <= d; q++) {
        if (d % q == 0) {
            return false;
        }
    }
    return true;
}

void check_prime(int d) {
    if (!is_prime(d)) {
        throw InvalidInput("local dimension must be prime, got " + std::to_string(d));
    }
}

int finv(int a, int d) {
    a = fmod_pos(a, d);
    if (a == 0) {
        throw InvalidInput("zero has no inverse in F_" + std::to_string(d));
    }
    // Fermat: a^{d-2}.
    long r = 1, b = a;
    for (int e = d - 2; e > 0; e >>= 1) {
        if (e & 1) {
            r = r * b % d;
        }
        b = b * b % d;
    }
    return (int)r;
}

FElem::FElem(long value, int d) : v_(0), d_(d) {
    check_prime(d);
    v_ = fmod_pos(value, d);
}

FElem FElem::operator+(const FElem &o) const {
    if (d_ != o.d_) {
        throw DimensionMismatch("field modulus mismatch");
    }
    return FElem((v_ + o.v_) % d_, d_, true);
}

FElem FElem::operator-(const FElem &o) const {
    if (d_ != o.d_) {
        throw DimensionMismatch("field modulus mismatch");
    }
    return FElem(fmod_pos(v_ - o.v_, d_), d_, true);
}

FElem FElem::operator*(const FElem &o) const {
    if (d_ != o.d_) {
        throw DimensionMismatch("field modulus mismatch");
    }
    return FElem((int)((long)v_ * o.v_ % d_), d_, true);
}

FElem FElem::operator-() const {
    return FElem(fmod_pos(-v_, d_), d_, true);
}

FElem FElem::inverse() const {
    return FElem(finv(v_, d_), d_, true);
}

FVec::FVec(std::vector<int> entries, int d) : d(d), e(std::move(entries)) {
    for (auto &x : e) {
        x = fmod_pos(x, d);
    }
}

FVec FVec::from_elems(const std::vector<FElem> &elems) {
    if (elems.empty()) {
        throw InvalidInput("cannot infer modulus of an empty vector");
    }
    FVec v(elems.size(), elems[0].modulus());
    for (size_t i = 0; i < elems.size(); i++) {
        if (elems[i].modulus() != v.d) {
            throw DimensionMismatch("mixed moduli in vector");
        }
        v.e[i] = elems[i].value();
    }
    return v;
}

FVec FVec::from_index(uint64_t index, size_t len, int d) {
    FVec v(len, d);
    for (size_t i = len; i-- > 0;) {
        v.e[i] = (int)(index % d);
        index /= d;
    }
    return v;
}

bool FVec::is_zero() const {
    for (int x : e) {
        if (x) {
            return false;
        }
    }
    return true;
}

uint64_t FVec::index() const {
    uint64_t r = 0;
    for (int x : e) {
        r = r * d + x;
    }
    return r;
}

static void check_same(const FVec &a, const FVec &b) {
    if (a.d != b.d || a.e.size() != b.e.size()) {
        throw DimensionMismatch("vector length or modulus mismatch");
    }
}

FVec FVec::operator+(const FVec &o) const {
    FVec r = *this;
    r += o;
    return r;
}

FVec &FVec::operator+=(const FVec &o) {
    check_same(*this, o);
    for (size_t i = 0; i < e.size(); i++) {
        e[i] += o.e[i];
        if (e[i] >= d) {
            e[i] -= d;
        }
    }
    return *this;
}

FVec FVec::operator-(const FVec &o) const {
    check_same(*this, o);
    FVec r = *this;
    for (size_t i = 0; i < e.size(); i++) {
        r.e[i] = fmod_pos(e[i] - o.e[i], d);
    }
    return r;
}

FVec FVec::operator-() const {
    FVec r = *this;
    for (auto &x : r.e) {
        x = fmod_pos(-x, d);
    }
    return r;
}

FVec FVec::operator*(long s) const {
    FVec r = *this;
    int sm = fmod_pos(s, d);
    for (auto &x : r.e) {
        x = (int)((long)x * sm % d);
    }
    return r;
}

FVec FVec::slice(size_t start, size_t len) const {
    FVec r(len, d);
    for (size_t i = 0; i < len; i++) {
        r.e[i] = e.at(start + i);
    }
    return r;
}

FVec FVec::concat(const FVec &o) const {
    if (d != o.d) {
        throw DimensionMismatch("modulus mismatch in concat");
    }
    FVec r = *this;
    r.e.insert(r.e.end(), o.e.begin(), o.e.end());
    return r;
}

std::string FVec::str() const {
    std::stringstream ss;
    ss << "(";
    for (size_t i = 0; i < e.size(); i++) {
        if (i) {
            ss << ",";
        }
        ss << e[i];
    }
    ss << ")";
    return ss.str();
}

std::ostream &operator<<(std::ostream &out, const FVec &v) {
    return out << v.str();
}

int dot(const FVec &a, const FVec &b) {
    check_same(a, b);
    long s = 0;
    for (size_t i = 0; i < a.e.size(); i++) {
        s += (long)a.e[i] * b.e[i];
    }
    return fmod_pos(s, a.d);
}

int symp(const FVec &a, const FVec &b) {
    check_same(a, b);
    if (a.e.size() % 2) {
        throw DimensionMismatch("symplectic vectors must have even length");
    }
    size_t n = a.e.size() / 2;
    long s = 0;
    for (size_t i = 0; i < n; i++) {
        s += (long)a.e[i] * b.e[n + i] - (long)a.e[n + i] * b.e[i];
    }
    return fmod_pos(s, a.d);
}

FElem symplectic_product(const FVec &a, const FVec &b) {
    return FElem(symp(a, b), a.d);
}

bool is_isotropic(const std::vector<FVec> &vs) {
    for (size_t i = 0; i < vs.size(); i++) {
        if (vs[i].d != vs[0].d) {
            throw DimensionMismatch("mixed moduli in isotropy test");
        }
        for (size_t j = i + 1; j < vs.size(); j++) {
            if (symp(vs[i], vs[j]) != 0) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace stabsep
