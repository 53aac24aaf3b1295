// Copyright 2026 The wwqca Authors
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

#ifndef WWQCA_SERIALIZE_H
#define WWQCA_SERIALIZE_H

#include <string>
#include <string_view>

#include "wwqca/laurent.h"
#include "wwqca/lattice.h"
#include "wwqca/pauli.h"
#include "wwqca/phase_ops.h"

namespace wwqca {

/// Version stamped into every JSON document written by the library and the CLI.
inline constexpr int kJsonSchemaVersion = 1;

// JSON text round-trips. Parsers throw UsageError on malformed input.

/// {"modulus": m, "poly": "<polynomial text>"}
std::string to_json(const LaurentPoly &p);
LaurentPoly laurent_from_json(std::string_view text);

/// {"modulus": m, "size": k, "entries": ["...", ...]}
std::string to_json(const SympVec &v);
SympVec symp_vec_from_json(std::string_view text);

/// {"modulus": m, "rows": r, "cols": c, "entries": [["...", ...], ...]}
std::string to_json(const SympMatrix &m);
SympMatrix symp_matrix_from_json(std::string_view text);

/// {"D": 2N, "phase_exp": k, "factors": [{"cell": [i, j, k], "dir": d, "x": a, "z": b}]}
/// in the stored normal order. Edges are named by cell and direction.
std::string to_json(const PauliOp &op, const Lattice &lattice);
PauliOp pauli_from_json(std::string_view text, const Lattice &lattice);

/// {"n": n, "register": [{"modulus", "label"}], "shift": [[site, amount]],
///  "components": [{"sites": [...], "table": [...]}]}, the table listing the
/// anchored values with every coordinate nonzero, last site fastest. The
/// register is rebuilt on reading.
std::string to_json(const PhaseTableOp &op);
PhaseTableOp phase_table_from_json(std::string_view text);

}  // namespace wwqca

#endif
