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

#include "stabsep/field/linalg.h"

#include "stabsep/util/errors.h"

namespace stabsep {

Echelon row_reduce(const std::vector<FVec> &vs, size_t len, int d) {
    size_t m = vs.size();
    std::vector<FVec> rows;
    std::vector<FVec> combos;
    for (size_t i = 0; i < m; i++) {
        if (vs[i].size() != len || vs[i].d != d) {
            throw DimensionMismatch("row_reduce: inconsistent vector");
        }
        rows.push_back(vs[i]);
        FVec c(m, d);
        c.e[i] = 1;
        combos.push_back(c);
    }
    Echelon out;
    out.len = len;
    out.d = d;
    size_t r = 0;
    for (size_t col = 0; col < len && r < m; col++) {
        size_t p = r;
        while (p < m && rows[p][col] == 0) {
            p++;
        }
        if (p == m) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        std::swap(combos[p], combos[r]);
        int inv = finv(rows[r][col], d);
        rows[r] = rows[r] * inv;
        combos[r] = combos[r] * inv;
        for (size_t i = 0; i < m; i++) {
            if (i != r && rows[i][col] != 0) {
                int f = rows[i][col];
                rows[i] = rows[i] - rows[r] * f;
                combos[i] = combos[i] - combos[r] * f;
            }
        }
        out.pivots.push_back(col);
        r++;
    }
    rows.resize(r);
    combos.resize(r);
    out.rows = std::move(rows);
    out.combos = std::move(combos);
    return out;
}

FVec Echelon::reduce(const FVec &v) const {
    FVec r = v;
    for (size_t i = 0; i < rows.size(); i++) {
        int f = r[pivots[i]];
        if (f) {
            r = r - rows[i] * f;
        }
    }
    return r;
}

bool Echelon::contains(const FVec &v) const {
    return reduce(v).is_zero();
}

std::optional<FVec> Echelon::express(const FVec &v) const {
    FVec r = v;
    size_t m = combos.empty() ? 0 : combos[0].size();
    FVec c(m, d);
    for (size_t i = 0; i < rows.size(); i++) {
        int f = r[pivots[i]];
        if (f) {
            r = r - rows[i] * f;
            c = c + combos[i] * f;
        }
    }
    if (!r.is_zero()) {
        return std::nullopt;
    }
    return c;
}

size_t rank_of(const std::vector<FVec> &vs, size_t len, int d) {
    return row_reduce(vs, len, d).rank();
}

std::vector<FVec> kernel_basis(const std::vector<FVec> &rows, size_t len, int d) {
    Echelon ech = row_reduce(rows, len, d);
    std::vector<bool> is_pivot(len, false);
    for (size_t p : ech.pivots) {
        is_pivot[p] = true;
    }
    std::vector<FVec> out;
    for (size_t f = 0; f < len; f++) {
        if (is_pivot[f]) {
            continue;
        }
        FVec x(len, d);
        x.e[f] = 1;
        for (size_t i = 0; i < ech.rows.size(); i++) {
            x.set(ech.pivots[i], -ech.rows[i][f]);
        }
        out.push_back(x);
    }
    return row_reduce(out, len, d).rows;
}

std::vector<FVec> symplectic_complement(const std::vector<FVec> &vs, size_t n, int d) {
    // [a, v] = a_z·v_x − a_x·v_z = a · (v_x, −v_z).
    std::vector<FVec> rows;
    for (const auto &v : vs) {
        FVec w(2 * n, d);
        for (size_t i = 0; i < n; i++) {
            w.e[i] = v[n + i];
            w.set(n + i, -v[i]);
        }
        rows.push_back(w);
    }
    return kernel_basis(rows, 2 * n, d);
}

FMatrix FMatrix::identity(size_t n, int d) {
    FMatrix r(n, n, d);
    for (size_t i = 0; i < n; i++) {
        r(i, i) = 1;
    }
    return r;
}

FMatrix FMatrix::operator*(const FMatrix &o) const {
    if (cols != o.rows) {
        throw DimensionMismatch("FMatrix product shape mismatch");
    }
    FMatrix r(rows, o.cols, d);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < o.cols; j++) {
            long s = 0;
            for (size_t k = 0; k < cols; k++) {
                s += (long)(*this)(i, k) * o(k, j);
            }
            r(i, j) = fmod_pos(s, d);
        }
    }
    return r;
}

FVec FMatrix::operator*(const FVec &v) const {
    if (cols != v.size()) {
        throw DimensionMismatch("FMatrix-vector shape mismatch");
    }
    FVec r(rows, d);
    for (size_t i = 0; i < rows; i++) {
        long s = 0;
        for (size_t k = 0; k < cols; k++) {
            s += (long)(*this)(i, k) * v[k];
        }
        r.e[i] = fmod_pos(s, d);
    }
    return r;
}

FMatrix FMatrix::transpose() const {
    FMatrix r(cols, rows, d);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

std::optional<FMatrix> FMatrix::inverse() const {
    if (rows != cols) {
        return std::nullopt;
    }
    size_t n = rows;
    FMatrix a = *this, inv = identity(n, d);
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && a(p, c) == 0) {
            p++;
        }
        if (p == n) {
            return std::nullopt;
        }
        for (size_t j = 0; j < n; j++) {
            std::swap(a(p, j), a(c, j));
            std::swap(inv(p, j), inv(c, j));
        }
        int s = finv(a(c, c), d);
        for (size_t j = 0; j < n; j++) {
            a(c, j) = (int)((long)a(c, j) * s % d);
            inv(c, j) = (int)((long)inv(c, j) * s % d);
        }
        for (size_t i = 0; i < n; i++) {
            if (i != c && a(i, c) != 0) {
                long f = a(i, c);
                for (size_t j = 0; j < n; j++) {
                    a(i, j) = fmod_pos(a(i, j) - f * a(c, j), d);
                    inv(i, j) = fmod_pos(inv(i, j) - f * inv(c, j), d);
                }
            }
        }
    }
    return inv;
}

FMatrix symplectic_form(size_t n, int d) {
    FMatrix j(2 * n, 2 * n, d);
    for (size_t i = 0; i < n; i++) {
        j(i, n + i) = 1;
        j(n + i, i) = d - 1;
    }
    return j;
}

bool is_symplectic(const FMatrix &m) {
    if (m.rows != m.cols || m.rows % 2) {
        return false;
    }
    FMatrix j = symplectic_form(m.rows / 2, m.d);
    return m.transpose() * j * m == j;
}

}  // namespace stabsep
