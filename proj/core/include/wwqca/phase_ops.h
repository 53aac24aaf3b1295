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

#ifndef WWQCA_PHASE_OPS_H
#define WWQCA_PHASE_OPS_H

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wwqca/dense.h"
#include "wwqca/params.h"

namespace wwqca {

/// Ordered list of sites with their local dimensions (N for split qudits, 2 for
/// qubits, 2N for unsplit qudits in small oracles).
class Register {
   public:
    explicit Register(const ModelParams &params) : params_(params) {}

    int add_site(int64_t modulus, std::string label = "");
    int64_t modulus(int site) const { return moduli_.at(site); }
    const std::string &label(int site) const { return labels_.at(site); }
    size_t size() const { return moduli_.size(); }
    const ModelParams &params() const { return params_; }

   private:
    ModelParams params_;
    std::vector<int64_t> moduli_;
    std::vector<std::string> labels_;
};

using RegisterPtr = std::shared_ptr<const Register>;

/// Unitary |c> -> omega'^{D(c)} |c + s> on a register, with omega' = e^{i pi/(2N)}
/// and D taken mod 4N.
///
/// D is kept as its unique anchored decomposition D = sum_Q f_Q(c_Q): each f_Q
/// vanishes as soon as one of its arguments is 0, so f_Q is stored only on
/// configurations with every coordinate nonzero. The empty set carries the
/// global phase. Two operators are equal iff shifts and components agree.
class PhaseTableOp {
   public:
    using Sites = std::vector<int>;  // strictly increasing
    /// Values on x_i in [1, modulus_i), last site fastest.
    using Table = std::vector<int64_t>;
    using Components = std::map<Sites, Table>;
    using Shift = std::map<int, int64_t>;  // nonzero entries only
    using Config = std::map<int, int64_t>;  // absent sites read as 0

    explicit PhaseTableOp(RegisterPtr reg);

    static PhaseTableOp scalar(RegisterPtr reg, int64_t phase);
    static PhaseTableOp shift_op(RegisterPtr reg, int site, int64_t amount = 1);
    /// Diagonal operator with phase f(config of sites), f given on all configurations
    /// with coordinates in the order of sites.
    static PhaseTableOp diagonal(RegisterPtr reg, Sites sites,
                                 const std::function<int64_t(const std::vector<int64_t> &)> &f);

    /// From an anchored decomposition (entries reduced mod 4N, zero tables dropped).
    static PhaseTableOp from_components(RegisterPtr reg, Components comps);

    const RegisterPtr &reg() const { return reg_; }
    const ModelParams &params() const { return reg_->params(); }
    const Shift &shift() const { return shift_; }
    const Components &components() const { return comps_; }
    int64_t shift_at(int site) const;
    /// D(c).
    int64_t phase_at(const Config &c) const;
    /// Sites carrying a shift or a nonconstant phase.
    std::vector<int> support() const;

    bool is_scalar() const;
    bool is_identity() const { return shift_.empty() && comps_.empty(); }
    /// Phase exponent of a scalar operator; DefinitionError otherwise.
    int64_t scalar_of() const;

    /// this after o.
    PhaseTableOp operator*(const PhaseTableOp &o) const;
    PhaseTableOp dagger() const;
    PhaseTableOp pow(int64_t k) const;
    PhaseTableOp with_phase(int64_t added) const;
    /// Restricts to the subspace where every pinned site is 0. The pinned sites
    /// must carry no shift.
    PhaseTableOp restrict(const std::vector<int> &pinned) const;

    /// Matrix on the given sites (first most significant); they must cover the support.
    DenseMatrix dense(const std::vector<int> &order) const;

    bool operator==(const PhaseTableOp &o) const;
    bool operator!=(const PhaseTableOp &o) const { return !(*this == o); }
    std::string str() const;

   private:
    void add_full(const Sites &sites, std::vector<int64_t> full);
    void add_components(const Components &c, int64_t sign);
    /// Decomposition of c -> D(c + t).
    Components shifted(const Shift &t) const;
    void prune();

    RegisterPtr reg_;
    Shift shift_;
    Components comps_;
};

enum class GateKind { X, Z, S, CZ, Xhat, Zhat, Shat, CZhat };

/// Shift-times-phase gates. X and Z act on any site as shift and clock; S is the
/// square root of the clock (qubit S = diag(1, i), qudit S^ = Z^^{1/2}).
/// CZ needs two qubits; CZhat needs (Z_N qudit, qubit) and gives -1 iff a = N-1, b = 1.
/// The hatted kinds require a qudit of dimension N.
PhaseTableOp gate(const RegisterPtr &reg, GateKind kind, const std::vector<int> &sites);

/// Linear permutation |c> -> |c'> with c'_t = c_t + sum coeff * c_control (mod
/// modulus_t). Covers CX and the qudit-controlled qubit flip |a,b> -> |a, b+a mod 2>.
/// Controls may not be targets, which keeps every term commuting.
class LinearPermutation {
   public:
    struct Term {
        int control;
        int target;
        int64_t coeff;
    };

    LinearPermutation() = default;
    void add(int control, int target, int64_t coeff = 1);
    const std::vector<Term> &terms() const { return terms_; }
    /// Controls acting on a target, with accumulated coefficients.
    const std::map<int, std::map<int, int64_t>> &by_target() const { return by_target_; }
    bool targets(int site) const { return by_target_.count(site) > 0; }
    DenseMatrix dense(const Register &reg, const std::vector<int> &order) const;

   private:
    std::vector<Term> terms_;
    std::map<int, std::map<int, int64_t>> by_target_;
    std::map<int, bool> is_control_;
};

/// g op g^dagger.
PhaseTableOp conjugate(const PhaseTableOp &op, const LinearPermutation &g);

}  // namespace wwqca

#endif
