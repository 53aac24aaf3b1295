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

#ifndef WWQCA_MODELS_H
#define WWQCA_MODELS_H

#include <array>
#include <string>
#include <vector>

#include "wwqca/lattice.h"
#include "wwqca/laurent.h"
#include "wwqca/pauli.h"
#include "wwqca/report.h"

namespace wwqca {

/// Unit-cell vectors over Z_{2N}[x, y, z, 1/x, 1/y, 1/z], index = edge direction or
/// plaquette normal. Coefficients use the Z-before-X reading.
struct ModelVectors {
    std::array<SympVec, 3> scriptx;  // semion hop on the x, y, z edge
    std::array<SympVec, 3> btilde;   // modified plaquette with normal x, y, z
    std::array<SympVec, 3> flipper;
    int64_t scriptx_phase;           // overall phase of the semion hop
};

ModelVectors model_vectors(const ModelParams &params);

/// Pairings of the unit-cell vectors as polynomials, for all directions i, j:
/// Bt_i^dagger Omega Bt_j = 0, N Bt_i^dagger Omega X_j = 0, F_i^dagger Omega X_j = 0
/// and Bt_i^dagger Omega F_j = 2 delta_ij.
Report verify_vector_identities(const ModelParams &params);

enum class OperatorKind { A_v, B_p, Btilde_p, C_e, ScriptX_e, F_p, Ahat_v, BtildePrime_p };
enum class ModelId { HWW, HtildeWW, Hcond, H1family };

OperatorKind parse_operator_kind(const std::string &name);
ModelId parse_model_id(const std::string &name);
std::string model_name(ModelId id);

/// Operator factory for one lattice and level.
///
/// A_v carries Z on the three edges ending at v and Z^-1 on the three leaving it.
/// Plaquette vertex labels and the O edge follow Plaquette in lattice.h.
class Model {
   public:
    Model(const Lattice &lattice, const ModelParams &params);

    const Lattice &lattice() const { return lattice_; }
    const ModelParams &params() const { return params_; }
    const ModelVectors &vectors() const { return vecs_; }

    PauliOp vertex(int v) const;
    /// Part of A_v on edges inside the plane of v.
    PauliOp vertex_in_plane(int v) const;
    PauliOp plaquette(int p) const;
    PauliOp btilde(int p) const;
    /// B~_p A_1^-2, the lower-plane loop term.
    PauliOp btilde_prime(int p) const;
    PauliOp boson_hop(int e) const;
    PauliOp semion_hop(int e) const;
    PauliOp flipper(int p) const;
    /// Semion hop along an edge of the lower plane, dressed so that it excites
    /// only endpoint terms of the condensed slab model.
    PauliOp lower_hop(int e) const;
    /// Hop from vertex a to a neighbouring vertex b (dagger when against the edge).
    PauliOp hop(int a, int b, bool lower = false) const;
    /// Vertex with label 1..4 of a plaquette.
    int plaquette_vertex(int p, int label) const;

    PauliOp make(OperatorKind kind, int loc) const;
    std::vector<PauliOp> hamiltonian(ModelId model) const;

   private:
    Lattice lattice_;
    ModelParams params_;
    ModelVectors vecs_;
};

/// Checks the relation catalog R1..R10 (each where applicable to the lattice)
/// plus mutual commutation of the Hamiltonian terms.
Report verify_relation_catalog(const Lattice &lattice, const ModelParams &params);

}  // namespace wwqca

#endif
