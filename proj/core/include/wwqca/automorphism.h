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

#ifndef WWQCA_AUTOMORPHISM_H
#define WWQCA_AUTOMORPHISM_H

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wwqca/dense.h"
#include "wwqca/models.h"
#include "wwqca/phase_ops.h"
#include "wwqca/report.h"
#include "wwqca/stabilizer.h"

namespace wwqca {

/// Ways of writing a 2N-dimensional qudit as an N-dimensional qudit A times a qubit B.
///
/// QubitPair (n = 1) and QuditQubit are the shipped maps, with the Hadamard on B
/// already applied: X -> X^ CZ^, Z -> X S^, X^N -> Z, Z^N -> Z^^{N/2}.
/// ExtensionUnrotated is the same map before the Hadamard (X -> X^ CX^, Z -> Z^^{1/2} Z,
/// where CX^ flips B iff a = N-1). AlternativeExtension uses |2a + b> and gives
/// X -> X CX^ (qubit-controlled qudit shift), Z -> Z^{1/N} Z^.
enum class AutomorphismVariant { QubitPair, QuditQubit, ExtensionUnrotated, AlternativeExtension };

std::string variant_name(AutomorphismVariant v);
AutomorphismVariant parse_variant(const std::string &name);

class Automorphism {
   public:
    Automorphism(AutomorphismVariant variant, const ModelParams &params);

    AutomorphismVariant variant() const { return variant_; }
    const ModelParams &params() const { return params_; }
    /// True when the images are shift-times-phase operators (the shipped variants).
    bool has_phase_table_images() const;

    /// Images on sites (a, b) of a register; only for has_phase_table_images().
    PhaseTableOp image_x(const RegisterPtr &reg, int a, int b) const;
    PhaseTableOp image_z(const RegisterPtr &reg, int a, int b) const;
    PhaseTableOp image_x_pow_n(const RegisterPtr &reg, int a, int b) const;
    PhaseTableOp image_z_pow_n(const RegisterPtr &reg, int a, int b) const;

    /// Images as 2N x 2N matrices on (A, B), A the more significant factor, built
    /// from textbook gate matrices.
    DenseMatrix dense_image_x() const;
    DenseMatrix dense_image_z() const;
    /// V with V |n> = |a, b> (times the unnormalized Hadamard on B for the shipped maps).
    DenseMatrix state_map() const;

   private:
    AutomorphismVariant variant_;
    ModelParams params_;
};

/// Dense oracle: clock/shift algebra of the images, intertwining with the state
/// map, and agreement of the phase-table images with the textbook matrices.
Report verify_automorphism(const Automorphism &a);

/// A_e and B_e sites for every edge: A has dimension N, B is a qubit.
class SplitRegister {
   public:
    SplitRegister(const Lattice &lattice, const ModelParams &params);

    const RegisterPtr &reg() const { return reg_; }
    int a_site(int edge) const { return 2 * edge; }
    int b_site(int edge) const { return 2 * edge + 1; }
    const std::vector<int> &b_sites() const { return b_sites_; }
    int num_edges() const { return edges_; }

   private:
    RegisterPtr reg_;
    std::vector<int> b_sites_;
    int edges_;
};

/// Image of a Z_{2N} Pauli operator, factor by factor in normal order.
PhaseTableOp split_pauli(const PauliOp &op, const Automorphism &a, const SplitRegister &sr);

/// labeling[k] is the slot of label k+1 at every vertex: slots 0..2 are the edges
/// leaving along x, y, z and slots 3..5 the edges arriving along x, y, z.
using EdgeLabeling = std::array<int, 6>;
inline constexpr EdgeLabeling kFrozenLabeling{0, 1, 2, 3, 4, 5};

/// The fifteen vertex gates as (control label, target label): the control is the A
/// qudit and the target the B qubit of the labeled edges.
const std::array<std::pair<int, int>, 15> &vertex_block_gates();

/// Edge at a vertex for a slot, or -1 when absent (slab boundary).
int slot_edge(const Lattice &lattice, int vertex, int slot);

/// U = prod_e CX^_e prod_v U_v, each gate |a,b> -> |a, b + a mod 2>. Gates touching
/// a missing slab edge are dropped. Construction fails if some site would be both
/// a control and a target, so all gates commute.
LinearPermutation circuit_u(const Lattice &lattice, const SplitRegister &sr, const EdgeLabeling &labeling);

/// U split(C_e) U^dagger = Z^B_e and U X^B_e U^dagger = X^B_e for every edge.
Report certify_labeling(const Lattice &lattice, const ModelParams &params, const EdgeLabeling &labeling,
                        bool stop_at_first_failure = false);

/// First labeling in lexicographic order that certifies; DefinitionError if none.
EdgeLabeling find_labeling(const Lattice &lattice, const ModelParams &params);
std::vector<EdgeLabeling> all_passing_labelings(const Lattice &lattice, const ModelParams &params);

enum class SplitOperator { Bhat_p, Fhat_p, Xhat_e, Ahat_v };
SplitOperator parse_split_operator(const std::string &name);

/// Operators of the split model on H_A: U split(.) U^dagger restricted to Z^B = 1.
class SplitModel {
   public:
    SplitModel(const Lattice &lattice, const ModelParams &params, const EdgeLabeling &labeling = kFrozenLabeling);

    const Model &model() const { return model_; }
    const Lattice &lattice() const { return model_.lattice(); }
    const ModelParams &params() const { return model_.params(); }
    const SplitRegister &split() const { return split_; }
    const LinearPermutation &circuit() const { return circuit_; }
    const Automorphism &automorphism() const { return auto_; }

    /// U split(op) U^dagger.
    PhaseTableOp transform(const PauliOp &op) const;
    /// transform(op) restricted; DefinitionError if it moves a B qubit.
    PhaseTableOp derive(const PauliOp &op) const;
    /// A_a hop(a, b, lower) A_b^dagger. The vertex factors cancel the flips of the
    /// C_e around both endpoints, so the dressed hop is derivable, and they
    /// telescope around any closed path.
    PauliOp dressed_hop(int a, int b, bool lower = false) const;

    PhaseTableOp bhat(int p) const;
    PhaseTableOp fhat(int p) const;
    PhaseTableOp xhat(int e) const;
    /// derive(dressed_hop(a, b, lower)); xhat(e) is the hop from tail to head.
    PhaseTableOp hop_hat(int a, int b, bool lower = false) const;
    /// Image of A_v^-2: prod of Z^^{-1} on arriving and Z^ on leaving edges
    /// (prod_e Z_e for n = 1).
    PhaseTableOp ahat(int v) const;
    PhaseTableOp zhat(int e, int64_t power = 1) const;
    PhaseTableOp make(SplitOperator kind, int loc) const;

    /// B^_p for all p, plus A^_v on the L plane of a slab.
    std::vector<PhaseTableOp> hamiltonian() const;

   private:
    Model model_;
    Automorphism auto_;
    SplitRegister split_;
    LinearPermutation circuit_;
};

/// Separator axioms on a torus: B^_p^N = 1, [B^_p, B^_q] = 0, F^_p B^_p =
/// e^{2 pi i/N} B^_p F^_p, [F^_p, B^_q] = 0 for q != p, and the group order N^E
/// with no scalar.
Report verify_separator(const SplitModel &sm);

/// Slab terms commute and have order N, B^_p equals its loop of hops (times Z^_O^-1
/// off the U plane), and the two plane relations hold.
Report verify_split_slab(const SplitModel &sm);

/// N^E over the order of the term group.
BigInt split_gsd(const SplitModel &sm);

}  // namespace wwqca

#endif
