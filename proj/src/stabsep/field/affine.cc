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

#include "stabsep/field/affine.h"

#include <algorithm>

#include "stabsep/util/caps.h"
#include "stabsep/util/errors.h"

namespace stabsep {

AffineSubspace::AffineSubspace(const std::vector<FVec> &basis, const FVec &offset) {
    check_prime(offset.d);
    Echelon ech = row_reduce(basis, offset.size(), offset.d);
    if (ech.rank() != basis.size()) {
        throw InvalidInput("affine subspace basis is linearly dependent");
    }
    basis_ = ech.rows;
    pivots_ = ech.pivots;
    offset_ = ech.reduce(offset);
}

uint64_t AffineSubspace::cardinality() const {
    return checked_pow(d(), dim());
}

bool AffineSubspace::contains(const FVec &x) const {
    if (x.size() != offset_.size() || x.d != offset_.d) {
        throw DimensionMismatch("membership test dimension mismatch");
    }
    FVec r = x - offset_;
    for (size_t i = 0; i < basis_.size(); i++) {
        int f = r[pivots_[i]];
        if (f) {
            r = r - basis_[i] * f;
        }
    }
    return r.is_zero();
}

FVec AffineSubspace::point(const FVec &u) const {
    FVec x = offset_;
    for (size_t i = 0; i < basis_.size(); i++) {
        if (u[i]) {
            x = x + basis_[i] * u[i];
        }
    }
    return x;
}

FVec AffineSubspace::coords(const FVec &x) const {
    FVec u(basis_.size(), d());
    for (size_t i = 0; i < basis_.size(); i++) {
        u.set(i, x[pivots_[i]] - offset_[pivots_[i]]);
    }
    return u;
}

std::vector<FVec> AffineSubspace::elements() const {
    std::vector<FVec> out;
    uint64_t count = cardinality();
    out.reserve(count);
    for (uint64_t i = 0; i < count; i++) {
        out.push_back(point(FVec::from_index(i, dim(), d())));
    }
    // u ↦ point(u) is monotone for RREF bases, but sort to make the contract explicit.
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t AffineSubspace::mask() const {
    uint64_t m = 0;
    for (const auto &x : elements()) {
        uint64_t i = x.index();
        if (i >= 64) {
            throw CapExceeded("bitmask requires at most 64 points");
        }
        m |= uint64_t{1} << i;
    }
    return m;
}

bool AffineSubspace::operator<(const AffineSubspace &o) const {
    if (offset_ != o.offset_) {
        return offset_ < o.offset_;
    }
    if (basis_.size() != o.basis_.size()) {
        return basis_.size() < o.basis_.size();
    }
    return basis_ < o.basis_;
}

namespace {

void fill_free(size_t n, int d, const std::vector<size_t> &pivots, size_t slot, std::vector<FVec> &rows,
               std::vector<std::vector<FVec>> &out) {
    // slot indexes (row, free column > pivot) pairs in row-major order.
    size_t k = pivots.size();
    size_t idx = 0;
    for (size_t r = 0; r < k; r++) {
        for (size_t c = pivots[r] + 1; c < n; c++) {
            if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) {
                continue;
            }
            if (idx == slot) {
                for (int v = 0; v < d; v++) {
                    rows[r].e[c] = v;
                    fill_free(n, d, pivots, slot + 1, rows, out);
                }
                rows[r].e[c] = 0;
                return;
            }
            idx++;
        }
    }
    out.push_back(rows);
}

}  // namespace

std::vector<std::vector<FVec>> enumerate_subspaces(size_t n, size_t k, int d) {
    std::vector<std::vector<FVec>> out;
    if (k > n) {
        return out;
    }
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + k, true);
    // Iterate pivot sets in lexicographic order of their sorted column lists.
    std::vector<std::vector<size_t>> pivot_sets;
    do {
        std::vector<size_t> p;
        for (size_t i = 0; i < n; i++) {
            if (choose[i]) {
                p.push_back(i);
            }
        }
        pivot_sets.push_back(p);
    } while (std::prev_permutation(choose.begin(), choose.end()));
    for (const auto &p : pivot_sets) {
        std::vector<FVec> rows(k, FVec(n, d));
        for (size_t r = 0; r < k; r++) {
            rows[r].e[p[r]] = 1;
        }
        fill_free(n, d, p, 0, rows, out);
    }
    return out;
}

std::vector<AffineSubspace> enumerate_affine_subspaces(size_t n, int d) {
    check_prime(d);
    std::vector<AffineSubspace> out;
    for (size_t k = 0; k <= n; k++) {
        for (const auto &basis : enumerate_subspaces(n, k, d)) {
            AffineSubspace lin(basis, FVec(n, d));
            const auto &piv = lin.pivots();
            std::vector<size_t> free_cols;
            for (size_t c = 0; c < n; c++) {
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) {
                    free_cols.push_back(c);
                }
            }
            uint64_t count = checked_pow(d, free_cols.size());
            for (uint64_t i = 0; i < count; i++) {
                FVec f = FVec::from_index(i, free_cols.size(), d);
                FVec o(n, d);
                for (size_t j = 0; j < free_cols.size(); j++) {
                    o.e[free_cols[j]] = f[j];
                }
                out.emplace_back(basis, o);
            }
        }
    }
    return out;
}

std::vector<AffineSubspace> proper_affine_hyperplanes(size_t n, int d) {
    check_prime(d);
    std::vector<AffineSubspace> out;
    if (n == 0) {
        return out;
    }
    for (const auto &basis : enumerate_subspaces(n, n - 1, d)) {
        AffineSubspace lin(basis, FVec(n, d));
        size_t free_col = 0;
        while (std::find(lin.pivots().begin(), lin.pivots().end(), free_col) != lin.pivots().end()) {
            free_col++;
        }
        for (int v = 1; v < d; v++) {
            FVec o(n, d);
            o.e[free_col] = v;
            out.emplace_back(basis, o);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct PartitionSearch {
    // candidates[p]: affine subspaces avoiding 0 whose least element has index p.
    std::vector<std::vector<std::pair<uint64_t, const AffineSubspace *>>> candidates;
    const std::function<void(const AffinePartition &)> *visit;
    std::vector<const AffineSubspace *> stack;

    void recurse(uint64_t uncovered) {
        if (uncovered == 0) {
            AffinePartition part;
            for (auto *s : stack) {
                part.parts.push_back(*s);
            }
            (*visit)(part);
            return;
        }
        int p = __builtin_ctzll(uncovered);
        for (const auto &[m, s] : candidates[p]) {
            if ((m & uncovered) == m) {
                stack.push_back(s);
                recurse(uncovered & ~m);
                stack.pop_back();
            }
        }
    }
};

}  // namespace

void for_each_affine_partition(size_t n, int d, const std::function<void(const AffinePartition &)> &visit,
                               uint64_t point_cap) {
    check_prime(d);
    uint64_t points = checked_pow(d, n);
    if (points > point_cap || points > 64) {
        throw CapExceeded("affine partition search limited to " + std::to_string(std::min<uint64_t>(point_cap, 64)) +
                          " points, requested d^n = " + std::to_string(points));
    }
    std::vector<AffineSubspace> all;
    for (auto &s : enumerate_affine_subspaces(n, d)) {
        if (!s.contains(FVec(n, d))) {
            all.push_back(std::move(s));
        }
    }
    PartitionSearch search;
    search.visit = &visit;
    search.candidates.resize(points);
    for (const auto &s : all) {
        uint64_t m = s.mask();
        search.candidates[__builtin_ctzll(m)].push_back({m, &s});
    }
    for (auto &c : search.candidates) {
        std::sort(c.begin(), c.end(), [](const auto &a, const auto &b) { return *a.second < *b.second; });
    }
    uint64_t full = points == 64 ? ~uint64_t{0} : (uint64_t{1} << points) - 1;
    search.recurse(full & ~uint64_t{1});
}

std::vector<AffinePartition> enumerate_affine_partitions(size_t n, int d, uint64_t point_cap) {
    std::vector<AffinePartition> out;
    for_each_affine_partition(n, d, [&](const AffinePartition &p) { out.push_back(p); }, point_cap);
    return out;
}

}  // namespace stabsep
