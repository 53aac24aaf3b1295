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

#ifndef WWQCA_STABILIZER_H
#define WWQCA_STABILIZER_H

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "wwqca/lattice.h"
#include "wwqca/models.h"
#include "wwqca/pauli.h"
#include "wwqca/phase_ops.h"

namespace wwqca {

using BigInt = boost::multiprecision::cpp_int;

/// Diagonal form of an integer matrix over Z_{2^bits}: rows are generators of a
/// subgroup of (Z_{2^bits})^cols.
struct Pow2Diagonal {
    int bits = 0;
    /// 2-adic valuations of the nonzero diagonal entries.
    std::vector<int> valuations;
    /// Integer combinations of the input rows (mod 2^bits) spanning all
    /// relations sum_i c_i row_i = 0.
    std::vector<std::vector<int64_t>> relations;

    /// Order of the row span: 2^{sum(bits - v)}.
    BigInt span_order() const;
    /// log2 of span_order().
    int64_t span_log2() const;
};

/// Diagonalizes by row and column operations over Z_{2^bits}. Row operations are
/// tracked so relations come out in terms of the original rows.
Pow2Diagonal diagonalize_pow2(std::vector<std::vector<int64_t>> rows, size_t cols, int bits,
                              bool want_relations = true);

/// Commuting Pauli generators over Z_{2N} on E edges.
class StabGroup {
   public:
    StabGroup(const ModelParams &params, size_t num_edges, std::vector<PauliOp> generators);

    const std::vector<PauliOp> &generators() const { return gens_; }
    /// Rows (x_0..x_{E-1}, z_0..z_{E-1}).
    std::vector<std::vector<int64_t>> exponent_matrix() const;
    /// First non-commuting pair as "i,j", or empty.
    std::string first_noncommuting_pair() const;

    BigInt order() const;
    /// log2 of the group order.
    int64_t order_log2() const;
    /// Every generator has order dividing 2N and every relation among the
    /// exponent vectors multiplies out to the identity (no scalar other than 1).
    bool phase_consistent(std::string *witness = nullptr) const;

   private:
    const Pow2Diagonal &diag() const;

    ModelParams params_;
    size_t edges_;
    std::vector<PauliOp> gens_;
    mutable bool have_diag_ = false;
    mutable Pow2Diagonal diag_;
};

struct GsdResult {
    BigInt hilbert_dim;
    BigInt group_order;
    BigInt gsd;
    size_t generators = 0;
};

/// Hilbert dimension (2N)^E over the stabilizer group order. UsageError if the
/// terms do not commute, DefinitionError if a relation carries a scalar.
GsdResult gsd(ModelId model, const Lattice &lattice, const ModelParams &params);
GsdResult gsd_of(const StabGroup &group, size_t num_edges);

/// Pauli separators inside the C_e = 1 space: |<separators, C>| / |<C>| must equal
/// constrained_dim.
bool separator_independence(const std::vector<PauliOp> &separators, const std::vector<PauliOp> &constraints,
                            size_t num_edges, const BigInt &constrained_dim);

/// Order of the group generated by commuting phase-table operators of finite order
/// dividing order_bound (a power of two). Also reports whether the group contains
/// a scalar other than 1.
struct PhaseGroupOrder {
    BigInt order;
    bool has_scalar = false;
};
PhaseGroupOrder phase_group_order(const std::vector<PhaseTableOp> &ops, int64_t order_bound);

/// Phase-table separators: commuting, of order dividing N, and generating a group
/// of order constrained_dim with no nontrivial scalar.
bool separator_independence(const std::vector<PhaseTableOp> &separators, const BigInt &constrained_dim);

}  // namespace wwqca

#endif
