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

#ifndef WWQCA_SPIN_H
#define WWQCA_SPIN_H

#include <cstdint>
#include <string>
#include <vector>

#include "wwqca/automorphism.h"
#include "wwqca/models.h"
#include "wwqca/pauli.h"
#include "wwqca/phase_ops.h"
#include "wwqca/report.h"

namespace wwqca {

enum class Plane { U, L };
Plane parse_plane(const std::string &name);

/// Which operator algebra the strings live in: Pauli hops of the condensed slab
/// model, or derived hops of the split model.
enum class SpinModel { Cond, H1 };
SpinModel parse_spin_model(const std::string &name);

/// Vertex paths of three strings leaving a common point. Each path starts at
/// the common point.
struct StringPaths {
    std::vector<int> w1, w2, w3;
};

/// Straight strings of the given length from (0, 0, z) of the plane along +x,
/// +y and -x. The slab must be at least 2 * length + 1 wide in x.
StringPaths canonical_paths(const Lattice &lattice, Plane plane, int length = 1);

/// Ordered product of hops along a vertex path (first hop rightmost, so it acts first).
PauliOp pauli_string(const Model &model, const std::vector<int> &path, bool lower);
PhaseTableOp split_string(const SplitModel &sm, const std::vector<int> &path, bool lower);

/// Exponent (units pi/(2N), mod 4N) of W3 W2^dagger W1 W3^dagger W2 W1^dagger.
/// GeometryError if the product is not a scalar.
int64_t topological_spin(const PauliOp &w1, const PauliOp &w2, const PauliOp &w3);
int64_t topological_spin(const PhaseTableOp &w1, const PhaseTableOp &w2, const PhaseTableOp &w3);

/// Spin of the boundary anyon on a slab, with strings of the given length.
int64_t boundary_spin(SpinModel model, const Lattice &lattice, const ModelParams &params, Plane plane,
                      int length = 1);

/// Exact text for e^{i pi k/(2N)}: "1", "-1", "i", "-i" or "exp(i pi a/b)".
std::string root_of_unity(int64_t exponent, const ModelParams &params);

/// Hamiltonian terms with a type tag, so excitations can be classified.
struct LabeledTerm {
    PauliOp op;
    bool vertex_type = false;
    int loc = 0;  // vertex or term index
    Vec3 anchor{};  // vertex, plaquette cell or edge tail
};
std::vector<LabeledTerm> labeled_terms(const Model &model, ModelId id);

/// Indices of the terms with a nonzero commutation exponent against op.
std::vector<size_t> excitation_pattern(const PauliOp &op, const std::vector<LabeledTerm> &terms);

/// For an open string along path: the excited vertex-type terms are exactly
/// those at the two endpoints (when the model has vertex terms there), and every
/// excited term is anchored within one lattice step of an endpoint.
Report certify_deconfinement(const Model &model, ModelId id, const std::vector<int> &path, bool lower);

}  // namespace wwqca

#endif
