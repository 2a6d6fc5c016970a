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

#ifndef STABSEP_FIELD_LINALG_H
#define STABSEP_FIELD_LINALG_H

#include <optional>
#include <vector>

#include "stabsep/field/fvec.h"

namespace stabsep {

/// Reduced row echelon form of a list of vectors, with each output row
/// expressed as a combination of the inputs.
struct Echelon {
    size_t len = 0;
    int d = 2;
    std::vector<FVec> rows;       // nonzero RREF rows, pivots increasing
    std::vector<size_t> pivots;   // pivot column of each row
    std::vector<FVec> combos;     // rows[i] = Σ_j combos[i][j] · input[j]

    size_t rank() const {
        return rows.size();
    }
    /// Subtracts multiples of the rows so v vanishes on all pivot columns.
    FVec reduce(const FVec &v) const;
    bool contains(const FVec &v) const;
    /// Coefficients c with Σ c_j input_j = v, if v is in the span.
    std::optional<FVec> express(const FVec &v) const;
};

Echelon row_reduce(const std::vector<FVec> &vs, size_t len, int d);

size_t rank_of(const std::vector<FVec> &vs, size_t len, int d);

/// Basis of {x : r·x = 0 for all rows r}, in RREF.
std::vector<FVec> kernel_basis(const std::vector<FVec> &rows, size_t len, int d);

/// Basis of {a ∈ F_d^{2n} : [a, v] = 0 for all v}.
std::vector<FVec> symplectic_complement(const std::vector<FVec> &vs, size_t n, int d);

/// Matrix over F_d stored as rows.
struct FMatrix {
    size_t rows = 0, cols = 0;
    int d = 2;
    std::vector<int> a;

    FMatrix() = default;
    FMatrix(size_t rows, size_t cols, int d) : rows(rows), cols(cols), d(d), a(rows * cols, 0) {
    }
    static FMatrix identity(size_t n, int d);
    int &operator()(size_t r, size_t c) {
        return a[r * cols + c];
    }
    int operator()(size_t r, size_t c) const {
        return a[r * cols + c];
    }
    FMatrix operator*(const FMatrix &o) const;
    FVec operator*(const FVec &v) const;
    FMatrix transpose() const;
    bool operator==(const FMatrix &o) const {
        return rows == o.rows && cols == o.cols && d == o.d && a == o.a;
    }
    /// Inverse of a square matrix, if invertible.
    std::optional<FMatrix> inverse() const;
};

/// The standard symplectic form J with [a,b] = aᵀ J b on (z, x) coordinates.
FMatrix symplectic_form(size_t n, int d);
/// Mᵀ J M == J.
bool is_symplectic(const FMatrix &m);

}  // namespace stabsep

#endif
