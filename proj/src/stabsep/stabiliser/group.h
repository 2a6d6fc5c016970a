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

#ifndef STABSEP_STABILISER_GROUP_H
#define STABSEP_STABILISER_GROUP_H

#include <optional>
#include <vector>

#include "stabsep/pauli/pauli.h"

namespace stabsep {

/// An abelian subgroup of the Pauli group not containing nontrivial scalars,
/// held as an independent generating set.
class StabGroup {
   public:
    StabGroup() = default;
    /// Reduces to an independent generating set. Throws InvalidInput if the
    /// generators do not commute or generate a nontrivial multiple of 1.
    StabGroup(size_t n, int d, const std::vector<PauliOp> &generators);

    size_t n() const {
        return n_;
    }
    int d() const {
        return d_;
    }
    size_t rank() const {
        return gens_.size();
    }
    const std::vector<PauliOp> &generators() const {
        return gens_;
    }
    /// All d^rank elements, indexed by exponent vectors in base-d order.
    std::vector<PauliOp> elements() const;
    /// The element with vector a, if a lies in the support Ŝ.
    std::optional<PauliOp> element_with(const FVec &a) const;
    bool contains(const PauliOp &p) const;

   private:
    size_t n_ = 0;
    int d_ = 2;
    std::vector<PauliOp> gens_;
};

/// The [[n, n−k]] code stabilised by a rank-k group.
struct StabCode {
    StabGroup group;

    size_t n() const {
        return group.n();
    }
    size_t k() const {
        return group.rank();
    }
};

/// P_S = |S|^{-1} Σ_{s∈S} s, dense.
CycMatrix projector(const StabCode &code, const Caps &caps = default_caps());

/// Labels x ≠ y and a unit c with P|x⟩ = c·P|y⟩ ≠ 0; none if P is diagonal.
/// A pair with c = 1 is preferred when one exists.
struct Collision {
    uint64_t x, y;
    CycRat phase;
};
std::optional<Collision> diagonal_projector_collision(const StabCode &code, const Caps &caps = default_caps());

/// Stabiliser group of a dense projector (all Paulis s with sP = P), by scanning.
StabGroup stabiliser_group_of_projector(const CycMatrix &p, size_t n, int d);

}  // namespace stabsep

#endif
