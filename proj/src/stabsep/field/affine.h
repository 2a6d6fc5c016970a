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

#ifndef STABSEP_FIELD_AFFINE_H
#define STABSEP_FIELD_AFFINE_H

#include <cstdint>
#include <functional>
#include <vector>

#include "stabsep/field/linalg.h"

namespace stabsep {

/// K = offset + span(basis) ⊆ F_d^n in canonical form: basis in RREF and
/// offset reduced modulo the span. The offset is then the lexicographically
/// least element of K.
class AffineSubspace {
   public:
    AffineSubspace() = default;
    /// Canonicalises; throws InvalidInput if basis is linearly dependent.
    AffineSubspace(const std::vector<FVec> &basis, const FVec &offset);

    size_t ambient_dim() const {
        return offset_.size();
    }
    int d() const {
        return offset_.d;
    }
    size_t dim() const {
        return basis_.size();
    }
    const std::vector<FVec> &basis() const {
        return basis_;
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }
    const FVec &offset() const {
        return offset_;
    }
    uint64_t cardinality() const;
    bool contains(const FVec &x) const;
    /// offset + Σ u_i basis_i.
    FVec point(const FVec &u) const;
    /// Coordinates u of a member x (u_i = x at pivot i minus offset there).
    FVec coords(const FVec &x) const;
    /// All elements in increasing lexicographic order.
    std::vector<FVec> elements() const;
    /// Bitmask of element indices (ambient size ≤ 64 points).
    uint64_t mask() const;

    bool operator==(const AffineSubspace &o) const {
        return offset_ == o.offset_ && basis_ == o.basis_;
    }
    bool operator<(const AffineSubspace &o) const;

   private:
    std::vector<FVec> basis_;
    std::vector<size_t> pivots_;
    FVec offset_;
};

/// All RREF bases of k-dimensional subspaces of F_d^n.
std::vector<std::vector<FVec>> enumerate_subspaces(size_t n, size_t k, int d);

/// Every affine subspace of F_d^n (all dimensions, all cosets).
std::vector<AffineSubspace> enumerate_affine_subspaces(size_t n, int d);

/// Codimension-1 affine subspaces not containing 0; exactly d^n − 1 of them.
std::vector<AffineSubspace> proper_affine_hyperplanes(size_t n, int d);

struct AffinePartition {
    std::vector<AffineSubspace> parts;
};

/// Visits every partition of F_d^n ∖ {0} into affine subspaces not
/// containing 0, each exactly once, parts ordered by least element.
/// Throws CapExceeded if d^n exceeds point_cap (at most 64).
void for_each_affine_partition(size_t n, int d, const std::function<void(const AffinePartition &)> &visit,
                               uint64_t point_cap = 64);

std::vector<AffinePartition> enumerate_affine_partitions(size_t n, int d, uint64_t point_cap = 64);

}  // namespace stabsep

#endif
