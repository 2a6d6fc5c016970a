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

#ifndef STABSEP_IO_JSON_H
#define STABSEP_IO_JSON_H

#include <string>
#include <vector>

#include "json.hpp"
#include "stabsep/channels/channel.h"
#include "stabsep/lp/lp.h"
#include "stabsep/separation/separation.h"
#include "stabsep/stabiliser/basis.h"

namespace stabsep::io {

/// Key order is insertion order, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char *kSchema = "v1";

/// {"schema": "v1", "kind": kind, ...body}.
Json artifact(const std::string &kind, Json body);
/// Throws InvalidInput unless j is an object with schema "v1" (and kind, if given).
void check_artifact(const Json &j, const std::string &kind = "");

Json parse_text(const std::string &text);
Json read_file(const std::string &path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json &j);

// Scalars and matrices. Every parser throws InvalidInput on malformed data.
Json to_json(const Rational &q);
Rational rational_from(const Json &j);
/// φ(D) "p/q" strings; parsing accepts up to D coefficients and reduces.
Json to_json(const CycRat &z, int d);
CycRat cyc_from(const Json &j, int d);
Json to_json(const CycMatrix &m, int d);
CycMatrix matrix_from(const Json &j, int d);

Json to_json(const FVec &v);
FVec fvec_from(const Json &j, int d);
/// {"phase": k, "a": [...]}.
Json to_json(const PauliOp &p);
PauliOp pauli_from(const Json &j, int d);
/// Gate strings in operator-product order, e.g. ["CZ(0,1)", "H(1)"].
Json to_json(const std::vector<Gate> &gates);
std::vector<Gate> gates_from(const Json &j);
/// Images of Z_0..Z_{n-1}, X_0..X_{n-1}.
Json to_json(const CliffordOp &c);

Json to_json(const AffineSubspace &k);
AffineSubspace affine_from(const Json &j, int d);
Json to_json(const AffinePartition &p);

/// {d, n, support_basis, support_offset, phase_poly: {quad, lin}}.
Json to_json(const StabState &s);
StabState state_from(const Json &j);
/// {d, n, generators}.
Json to_json(const StabGroup &g);
StabGroup group_from(const Json &j);

/// {d, n_in, n_out, form: "kraus" | "superop" | "choi", data}.
Json to_json(const Channel &ch);
Channel channel_from(const Json &j);

Json to_json(const VPolytopeLP &lp);
VPolytopeLP lp_from(const Json &j);
Json to_json(const LPResult &r);
LPResult lp_result_from(const Json &j);

// Reports (serialisation only).
Json to_json(const CspCertificate &c);
Json to_json(const PnReport &r);
Json to_json(const SoAdBoundReport &r);
Json to_json(const PolarForm &f, int d);

}  // namespace stabsep::io

#endif
