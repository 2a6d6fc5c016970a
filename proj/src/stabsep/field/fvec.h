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

#ifndef STABSEP_FIELD_FVEC_H
#define STABSEP_FIELD_FVEC_H

#include <cstdint>
#include <ostream>
#include <string>
#include <initializer_list>
#include <vector>

namespace stabsep {

/// Throws InvalidInput unless d is prime.
void check_prime(int d);
bool is_prime(int d);

/// a mod d in [0, d).
inline int fmod_pos(long a, int d) {
    long r = a % d;
    return (int)(r < 0 ? r + d : r);
}

/// Multiplicative inverse of a nonzero element of F_d.
int finv(int a, int d);

/// An element of the prime field F_d.
class FElem {
   public:
    FElem(long value, int d);

    int value() const {
        return v_;
    }
    int modulus() const {
        return d_;
    }

    FElem operator+(const FElem &o) const;
    FElem operator-(const FElem &o) const;
    FElem operator*(const FElem &o) const;
    FElem operator-() const;
    FElem inverse() const;
    bool operator==(const FElem &o) const {
        return v_ == o.v_ && d_ == o.d_;
    }
    bool operator!=(const FElem &o) const {
        return !(*this == o);
    }

   private:
    int v_;
    int d_;
    FElem(int v, int d, bool) : v_(v), d_(d) {
    }
};

/// A vector over F_d. Entries are kept in [0, d).
struct FVec {
    int d = 2;
    std::vector<int> e;

    FVec() = default;
    FVec(size_t len, int d) : d(d), e(len, 0) {
    }
    FVec(std::vector<int> entries, int d);
    // Braced entry lists always mean entries, never a length.
    FVec(std::initializer_list<int> entries, int d) : FVec(std::vector<int>(entries), d) {
    }
    static FVec from_elems(const std::vector<FElem> &elems);
    /// Base-d digits of index, first coordinate most significant.
    static FVec from_index(uint64_t index, size_t len, int d);

    size_t size() const {
        return e.size();
    }
    int operator[](size_t i) const {
        return e[i];
    }
    FElem elem(size_t i) const {
        return FElem(e[i], d);
    }
    void set(size_t i, long v) {
        e[i] = fmod_pos(v, d);
    }
    bool is_zero() const;
    /// Inverse of from_index; lexicographic order equals index order.
    uint64_t index() const;

    FVec operator+(const FVec &o) const;
    FVec operator-(const FVec &o) const;
    FVec operator-() const;
    FVec operator*(long s) const;
    FVec &operator+=(const FVec &o);
    bool operator==(const FVec &o) const {
        return d == o.d && e == o.e;
    }
    bool operator!=(const FVec &o) const {
        return !(*this == o);
    }
    bool operator<(const FVec &o) const {
        return e < o.e;
    }

    /// Sub-vector [start, start + len).
    FVec slice(size_t start, size_t len) const;
    FVec concat(const FVec &o) const;
    std::string str() const;
};

std::ostream &operator<<(std::ostream &out, const FVec &v);

/// Σ_i a_i b_i mod d.
int dot(const FVec &a, const FVec &b);

/// [a, b] = a_z·b_x − a_x·b_z for a = (a_z, a_x) of length 2n.
FElem symplectic_product(const FVec &a, const FVec &b);
/// Integer-valued form of symplectic_product.
int symp(const FVec &a, const FVec &b);

/// True iff all pairwise symplectic products vanish.
bool is_isotropic(const std::vector<FVec> &vs);

}  // namespace stabsep

#endif
