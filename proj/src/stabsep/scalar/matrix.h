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

#ifndef STABSEP_SCALAR_MATRIX_H
#define STABSEP_SCALAR_MATRIX_H

#include <cstddef>
#include <optional>
#include <vector>

#include "stabsep/scalar/cyclotomic.h"

namespace stabsep {

/// Dense row-major matrix over Q(τ).
class CycMatrix {
   public:
    CycMatrix() = default;
    CycMatrix(size_t rows, size_t cols, int order);

    static CycMatrix identity(size_t dim, int order);
    /// Column vector.
    static CycMatrix column(const std::vector<CycRat> &entries, int order);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    int order() const {
        return order_;
    }
    CycRat &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const CycRat &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    CycMatrix operator*(const CycMatrix &o) const;
    CycMatrix operator+(const CycMatrix &o) const;
    CycMatrix operator-(const CycMatrix &o) const;
    CycMatrix &operator+=(const CycMatrix &o);
    CycMatrix &operator-=(const CycMatrix &o);
    CycMatrix operator*(const CycRat &s) const;
    CycMatrix operator*(const Rational &s) const;
    bool operator==(const CycMatrix &o) const;
    bool operator!=(const CycMatrix &o) const {
        return !(*this == o);
    }

    CycMatrix adjoint() const;
    CycMatrix transpose() const;
    /// Entrywise complex conjugate.
    CycMatrix conj() const;
    CycMatrix kron(const CycMatrix &o) const;
    CycRat trace() const;
    bool is_zero() const;
    bool is_hermitian() const;
    CycMatrix col(size_t c) const;

    /// The unique c with *this == c·o, if *this and o are proportional (o nonzero).
    std::optional<CycRat> ratio_to(const CycMatrix &o) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    int order_ = 0;
    std::vector<CycRat> data_;
};

/// Partial trace of an operator on (A ⊗ B) with dims (da, db): trace out B if trace_second.
CycMatrix partial_trace(const CycMatrix &m, size_t da, size_t db, bool trace_second);

/// A matrix times a power of √d: value = d^{half_exp/2} · m.
///
/// normalised() keeps half_exp ∈ {0, 1}; for d ≡ 1 mod 4 √d lies in Q(τ)
/// and is absorbed, so half_exp becomes 0.
struct ScaledMatrix {
    CycMatrix m;
    int half_exp = 0;
    int d = 2;

    ScaledMatrix() = default;
    ScaledMatrix(CycMatrix m, int half_exp, int d) : m(std::move(m)), half_exp(half_exp), d(d) {
    }

    ScaledMatrix normalised() const;
    ScaledMatrix operator*(const ScaledMatrix &o) const;
    ScaledMatrix adjoint() const;
    ScaledMatrix kron(const ScaledMatrix &o) const;
    bool operator==(const ScaledMatrix &o) const;
    bool operator!=(const ScaledMatrix &o) const {
        return !(*this == o);
    }
    /// Exact sum; requires equal parity of half_exp after normalisation unless one is zero.
    ScaledMatrix operator+(const ScaledMatrix &o) const;
};

/// A scalar times a power of √d, same conventions as ScaledMatrix.
struct ScaledScalar {
    CycRat value;
    int half_exp = 0;
    int d = 2;

    ScaledScalar normalised() const;
    bool operator==(const ScaledScalar &o) const;
    bool is_zero() const {
        return value.is_zero();
    }
};

/// √d as an element of Q(τ) when d ≡ 1 mod 4 (Gauss sum), else none.
std::optional<CycRat> sqrt_d_in_field(int d);

/// If a == c·b for a unit-modulus c, returns c; both matrices must carry √d scalings.
/// Used to compare unitaries defined only up to global phase.
std::optional<ScaledScalar> equal_up_to_phase(const ScaledMatrix &a, const ScaledMatrix &b);

}  // namespace stabsep

#endif
