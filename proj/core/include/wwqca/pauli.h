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

#ifndef WWQCA_PAULI_H
#define WWQCA_PAULI_H

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wwqca/lattice.h"
#include "wwqca/laurent.h"
#include "wwqca/params.h"

namespace wwqca {

/// Generalized Pauli operator on Z_{2N} qudits living on lattice edges.
///
/// Stored in normal order: omega'^phase * prod_e X_e^{a_e} Z_e^{b_e}, with
/// omega' = e^{i pi/(2N)}, ZX = omega XZ and omega = omega'^2.
class PauliOp {
   public:
    using Factors = std::map<int, std::pair<int64_t, int64_t>>;

    explicit PauliOp(const ModelParams &params);
    PauliOp(const ModelParams &params, Factors factors, int64_t phase);

    static PauliOp x(const ModelParams &params, int edge, int64_t power = 1);
    static PauliOp z(const ModelParams &params, int edge, int64_t power = 1);
    static PauliOp scalar(const ModelParams &params, int64_t phase);
    /// Builds prod_e Z^{b_e} X^{a_e} (Z written first) times omega'^figure_phase.
    static PauliOp from_figure(const ModelParams &params, const Factors &factors, int64_t figure_phase);

    const ModelParams &params() const { return params_; }
    int64_t phase() const { return phase_; }
    const Factors &factors() const { return factors_; }
    int64_t x_exp(int edge) const;
    int64_t z_exp(int edge) const;
    bool is_identity() const { return phase_ == 0 && factors_.empty(); }
    bool is_scalar() const { return factors_.empty(); }
    size_t weight() const { return factors_.size(); }

    PauliOp operator*(const PauliOp &o) const;
    PauliOp &operator*=(const PauliOp &o);
    PauliOp dagger() const;
    /// Negative k gives powers of the dagger.
    PauliOp pow(int64_t k) const;
    PauliOp with_phase(int64_t added) const;
    /// The phase this operator would carry written per site as Z^b X^a.
    int64_t figure_phase() const;

    bool operator==(const PauliOp &o) const {
        return params_ == o.params_ && phase_ == o.phase_ && factors_ == o.factors_;
    }
    bool operator!=(const PauliOp &o) const { return !(*this == o); }

    std::string str() const;

   private:
    void normalize();

    ModelParams params_;
    int64_t phase_;
    Factors factors_;
};

/// c with a*b = omega^c * b*a, reduced mod 2N.
int64_t comm_exponent(const PauliOp &a, const PauliOp &b);

/// Places translation-invariant vector data at a cell. Rows 0..2 of the X block
/// and rows 3..5 of the Z block refer to the x, y, z edges of the cell plus the
/// monomial offset. Coefficients are read with Z written before X on each edge.
/// Factors on absent slab edges are dropped when truncate is set and rejected
/// otherwise.
PauliOp instantiate(const SympVec &v, const Vec3 &cell, const Lattice &lattice,
                    const ModelParams &params, int64_t figure_phase, bool truncate = true);

}  // namespace wwqca

#endif
