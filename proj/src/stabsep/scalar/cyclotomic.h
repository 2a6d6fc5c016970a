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

#ifndef STABSEP_SCALAR_CYCLOTOMIC_H
#define STABSEP_SCALAR_CYCLOTOMIC_H

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stabsep/scalar/rational.h"

namespace stabsep {

/// Order D of the phase root τ for local dimension d: 4 for d = 2, d for odd d.
int tau_order(int d);

/// Exponent k with τ^k = ω = e^{2πi/d}.
int omega_exponent(int d);

/// An element of Q(τ), τ = e^{2πi/D}, D ∈ {4} ∪ {odd primes}.
///
/// Stored in the power basis 1, τ, ..., τ^{φ(D)-1}, i.e. reduced modulo the
/// cyclotomic polynomial Φ_D, so the representation is canonical. A default
/// constructed value is a field-agnostic zero that adopts the order of
/// whatever it is combined with.
class CycRat {
   public:
    CycRat() = default;
    explicit CycRat(int order);
    CycRat(int order, const Rational &q);

    /// τ^k.
    static CycRat root(int order, long k);
    /// From coefficients of 1, τ, τ², ... (any length; reduced).
    static CycRat from_powers(int order, const std::vector<Rational> &powers);

    int order() const {
        return order_;
    }
    /// φ(D) coefficients (empty for a field-agnostic zero).
    const std::vector<Rational> &coeffs() const {
        return c_;
    }

    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational() const;
    /// The k in [0, D) with *this == τ^k, if any.
    std::optional<int> root_exponent() const;

    CycRat conj() const;
    CycRat inverse() const;
    /// |z|² as a field element (always real, not necessarily rational).
    CycRat norm_sq() const;

    CycRat operator-() const;
    CycRat &operator+=(const CycRat &o);
    CycRat &operator-=(const CycRat &o);
    CycRat &operator*=(const CycRat &o);
    CycRat &operator*=(const Rational &q);
    CycRat operator+(const CycRat &o) const;
    CycRat operator-(const CycRat &o) const;
    CycRat operator*(const CycRat &o) const;
    CycRat operator*(const Rational &q) const;
    CycRat operator/(const CycRat &o) const;
    bool operator==(const CycRat &o) const;
    bool operator!=(const CycRat &o) const {
        return !(*this == o);
    }

    /// Multiply in place by τ^k (cheap: a permutation plus reduction).
    void mul_root(long k);

    std::string str() const;

   private:
    int order_ = 0;
    std::vector<Rational> c_;

    void adopt(int order);
    void reduce_from_full(std::vector<Rational> &full);
};

std::ostream &operator<<(std::ostream &out, const CycRat &z);

/// Euler phi for the supported orders.
int cyclotomic_degree(int order);

}  // namespace stabsep

#endif
