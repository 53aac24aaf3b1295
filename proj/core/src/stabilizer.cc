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

#include "wwqca/stabilizer.h"

#include <algorithm>
#include <map>
#include <set>

#include "wwqca/error.h"

namespace wwqca {

namespace {

int valuation(uint64_t v) {
    return __builtin_ctzll(v);
}

/// Inverse of an odd number modulo 2^64 (Newton iteration).
uint64_t odd_inverse(uint64_t u) {
    uint64_t x = u;
    for (int i = 0; i < 6; i++) {
        x *= 2 - u * x;
    }
    return x;
}

int log2_exact(int64_t v) {
    if (v <= 0 || (v & (v - 1))) {
        throw UsageError("modulus must be a power of two");
    }
    return valuation(static_cast<uint64_t>(v));
}

}  // namespace

BigInt Pow2Diagonal::span_order() const {
    BigInt r = 1;
    r <<= static_cast<unsigned>(span_log2());
    return r;
}

int64_t Pow2Diagonal::span_log2() const {
    int64_t s = 0;
    for (int v : valuations) {
        s += bits - v;
    }
    return s;
}

Pow2Diagonal diagonalize_pow2(std::vector<std::vector<int64_t>> rows_in, size_t cols, int bits, bool want_relations) {
    if (bits < 1 || bits > 62) {
        throw UsageError("bits out of range");
    }
    const uint64_t mask = (uint64_t{1} << bits) - 1;
    size_t k = rows_in.size();
    std::vector<std::vector<uint64_t>> a(k, std::vector<uint64_t>(cols, 0));
    for (size_t i = 0; i < k; i++) {
        if (rows_in[i].size() != cols) {
            throw UsageError("ragged matrix");
        }
        for (size_t j = 0; j < cols; j++) {
            a[i][j] = static_cast<uint64_t>(rows_in[i][j]) & mask;
        }
    }
    rows_in.clear();
    std::vector<std::vector<uint64_t>> t;
    if (want_relations) {
        t.assign(k, std::vector<uint64_t>(k, 0));
        for (size_t i = 0; i < k; i++) {
            t[i][i] = 1;
        }
    }

    Pow2Diagonal out;
    out.bits = bits;
    size_t r = 0;
    for (; r < k && r < cols; r++) {
        // Pivot of least valuation in the remaining block; it divides everything there.
        int best = bits;
        size_t bi = 0, bj = 0;
        for (size_t i = r; i < k && best > 0; i++) {
            for (size_t j = r; j < cols; j++) {
                if (a[i][j] && valuation(a[i][j]) < best) {
                    best = valuation(a[i][j]);
                    bi = i;
                    bj = j;
                    if (best == 0) {
                        break;
                    }
                }
            }
        }
        if (best == bits) {
            break;
        }
        std::swap(a[r], a[bi]);
        if (want_relations) {
            std::swap(t[r], t[bi]);
        }
        if (bj != r) {
            for (size_t i = r; i < k; i++) {
                std::swap(a[i][r], a[i][bj]);
            }
        }
        uint64_t inv = odd_inverse(a[r][r] >> best) & mask;
        for (size_t j = r; j < cols; j++) {
            a[r][j] = (a[r][j] * inv) & mask;
        }
        if (want_relations) {
            for (auto &v : t[r]) {
                v = (v * inv) & mask;
            }
        }
        for (size_t i = r + 1; i < k; i++) {
            if (!a[i][r]) {
                continue;
            }
            uint64_t f = a[i][r] >> best;
            for (size_t j = r; j < cols; j++) {
                a[i][j] = (a[i][j] - f * a[r][j]) & mask;
            }
            if (want_relations) {
                for (size_t j = 0; j < k; j++) {
                    t[i][j] = (t[i][j] - f * t[r][j]) & mask;
                }
            }
        }
        // Column operations clear the rest of the pivot row; rows below are
        // already zero in column r, so only row r changes.
        for (size_t j = r + 1; j < cols; j++) {
            a[r][j] = 0;
        }
        out.valuations.push_back(best);
    }
    if (want_relations) {
        for (size_t i = 0; i < k; i++) {
            std::vector<int64_t> rel(k);
            uint64_t scale = i < out.valuations.size() ? (uint64_t{1} << (bits - out.valuations[i])) : 1;
            bool nonzero = false;
            for (size_t j = 0; j < k; j++) {
                rel[j] = static_cast<int64_t>((t[i][j] * scale) & mask);
                nonzero |= rel[j] != 0;
            }
            if (nonzero) {
                out.relations.push_back(std::move(rel));
            }
        }
    }
    return out;
}

StabGroup::StabGroup(const ModelParams &params, size_t num_edges, std::vector<PauliOp> generators)
    : params_(params), edges_(num_edges), gens_(std::move(generators)) {
    for (const auto &g : gens_) {
        if (g.params() != params_) {
            throw UsageError("generator level mismatch");
        }
        for (const auto &[e, f] : g.factors()) {
            if (e < 0 || static_cast<size_t>(e) >= edges_) {
                throw UsageError("generator acts outside the edge range");
            }
        }
    }
}

std::vector<std::vector<int64_t>> StabGroup::exponent_matrix() const {
    std::vector<std::vector<int64_t>> rows;
    rows.reserve(gens_.size());
    for (const auto &g : gens_) {
        std::vector<int64_t> row(2 * edges_, 0);
        for (const auto &[e, f] : g.factors()) {
            row[e] = f.first;
            row[edges_ + e] = f.second;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string StabGroup::first_noncommuting_pair() const {
    std::map<int, std::vector<size_t>> by_edge;
    for (size_t i = 0; i < gens_.size(); i++) {
        for (const auto &[e, f] : gens_[i].factors()) {
            by_edge[e].push_back(i);
        }
    }
    std::set<std::pair<size_t, size_t>> seen;
    for (const auto &[e, list] : by_edge) {
        for (size_t x = 0; x < list.size(); x++) {
            for (size_t y = x + 1; y < list.size(); y++) {
                auto key = std::make_pair(list[x], list[y]);
                if (!seen.insert(key).second) {
                    continue;
                }
                if (comm_exponent(gens_[key.first], gens_[key.second]) != 0) {
                    return std::to_string(key.first) + "," + std::to_string(key.second);
                }
            }
        }
    }
    return "";
}

const Pow2Diagonal &StabGroup::diag() const {
    if (!have_diag_) {
        diag_ = diagonalize_pow2(exponent_matrix(), 2 * edges_, log2_exact(params_.D), true);
        have_diag_ = true;
    }
    return diag_;
}

BigInt StabGroup::order() const {
    return diag().span_order();
}

int64_t StabGroup::order_log2() const {
    return diag().span_log2();
}

bool StabGroup::phase_consistent(std::string *witness) const {
    for (size_t i = 0; i < gens_.size(); i++) {
        if (!gens_[i].pow(params_.D).is_identity()) {
            if (witness) {
                *witness = "generator " + std::to_string(i) + " has order above 2N";
            }
            return false;
        }
    }
    for (const auto &rel : diag().relations) {
        PauliOp prod(params_);
        for (size_t j = 0; j < rel.size(); j++) {
            if (rel[j]) {
                prod *= gens_[j].pow(rel[j]);
            }
        }
        if (!prod.is_identity()) {
            if (witness) {
                std::string w = "relation";
                for (size_t j = 0; j < rel.size(); j++) {
                    if (rel[j]) {
                        w += " g" + std::to_string(j) + "^" + std::to_string(rel[j]);
                    }
                }
                *witness = w + " = " + prod.str();
            }
            return false;
        }
    }
    return true;
}

GsdResult gsd_of(const StabGroup &group, size_t num_edges) {
    GsdResult r;
    const auto &p = group.generators().empty() ? ModelParams::make(1) : group.generators().front().params();
    r.hilbert_dim = 1;
    for (size_t e = 0; e < num_edges; e++) {
        r.hilbert_dim *= p.D;
    }
    r.group_order = group.order();
    r.gsd = r.hilbert_dim / r.group_order;
    r.generators = group.generators().size();
    return r;
}

GsdResult gsd(ModelId model, const Lattice &lattice, const ModelParams &params) {
    Model m(lattice, params);
    StabGroup g(params, lattice.num_edges(), m.hamiltonian(model));
    auto bad = g.first_noncommuting_pair();
    if (!bad.empty()) {
        throw UsageError("terms " + bad + " do not commute");
    }
    std::string witness;
    if (!g.phase_consistent(&witness)) {
        throw DefinitionError("phase obstruction: " + witness);
    }
    return gsd_of(g, lattice.num_edges());
}

bool separator_independence(const std::vector<PauliOp> &separators, const std::vector<PauliOp> &constraints,
                            size_t num_edges, const BigInt &constrained_dim) {
    if (separators.empty()) {
        return constrained_dim == 1;
    }
    const auto &p = separators.front().params();
    std::vector<PauliOp> all = constraints;
    all.insert(all.end(), separators.begin(), separators.end());
    StabGroup joint(p, num_edges, all);
    if (!joint.first_noncommuting_pair().empty()) {
        throw UsageError("separators and constraints must commute");
    }
    StabGroup base(p, num_edges, constraints);
    int64_t diff = joint.order_log2() - base.order_log2();
    BigInt ratio = 1;
    ratio <<= static_cast<unsigned>(diff);
    return ratio == constrained_dim;
}

namespace {

bool supports_overlap(const PhaseTableOp &a, const PhaseTableOp &b) {
    auto sa = a.support();
    auto sb = b.support();
    std::vector<int> both;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
    return !both.empty();
}

}  // namespace

PhaseGroupOrder phase_group_order(const std::vector<PhaseTableOp> &ops, int64_t order_bound) {
    PhaseGroupOrder out;
    out.order = 1;
    if (ops.empty()) {
        return out;
    }
    const auto &reg = ops.front().reg();
    int bits = log2_exact(order_bound);
    for (size_t i = 0; i < ops.size(); i++) {
        if (ops[i].reg() != reg) {
            throw UsageError("operators live on different registers");
        }
        if (!ops[i].pow(order_bound).is_identity()) {
            throw UsageError("operator " + std::to_string(i) + " has order above the bound");
        }
        for (size_t j = i + 1; j < ops.size(); j++) {
            if (supports_overlap(ops[i], ops[j]) && ops[i] * ops[j] != ops[j] * ops[i]) {
                throw UsageError("operators " + std::to_string(i) + "," + std::to_string(j) + " do not commute");
            }
        }
    }

    // Shift part, with Z_m embedded in Z_{2^bits} as multiples of 2^bits/m.
    std::map<int, size_t> col;
    for (const auto &op : ops) {
        for (const auto &[s, v] : op.shift()) {
            col.emplace(s, 0);
        }
    }
    size_t c = 0;
    for (auto &[s, idx] : col) {
        idx = c++;
        if ((int64_t{1} << bits) % reg->modulus(s)) {
            throw UsageError("site modulus does not divide the order bound");
        }
    }
    std::vector<std::vector<int64_t>> rows;
    for (const auto &op : ops) {
        std::vector<int64_t> row(col.size(), 0);
        for (const auto &[s, v] : op.shift()) {
            row[col[s]] = v * ((int64_t{1} << bits) / reg->modulus(s));
        }
        rows.push_back(std::move(row));
    }
    auto sd = diagonalize_pow2(rows, col.size(), bits, true);

    // Diagonal subgroup, generated by the relation products.
    std::vector<PhaseTableOp> diag;
    for (const auto &rel : sd.relations) {
        PhaseTableOp prod(reg);
        for (size_t j = 0; j < rel.size(); j++) {
            if (rel[j]) {
                prod = prod * ops[j].pow(rel[j]);
            }
        }
        if (!prod.shift().empty()) {
            throw DefinitionError("relation product kept a shift");
        }
        if (!prod.is_identity()) {
            diag.push_back(std::move(prod));
        }
    }
    std::map<PhaseTableOp::Sites, size_t> offset;
    size_t width = 0;
    for (const auto &d : diag) {
        for (const auto &[q, t] : d.components()) {
            if (!offset.count(q)) {
                offset[q] = width;
                width += t.size();
            }
        }
    }
    int pbits = log2_exact(reg->params().P);
    auto flatten = [&](bool with_scalar) {
        std::vector<std::vector<int64_t>> m;
        for (const auto &d : diag) {
            std::vector<int64_t> row(width, 0);
            for (const auto &[q, t] : d.components()) {
                if (q.empty() && !with_scalar) {
                    continue;
                }
                std::copy(t.begin(), t.end(), row.begin() + static_cast<std::ptrdiff_t>(offset[q]));
            }
            m.push_back(std::move(row));
        }
        return m;
    };
    int64_t g0 = diag.empty() ? 0 : diagonalize_pow2(flatten(true), width, pbits, false).span_log2();
    int64_t proj = diag.empty() ? 0 : diagonalize_pow2(flatten(false), width, pbits, false).span_log2();
    out.has_scalar = proj != g0;
    out.order = 1;
    out.order <<= static_cast<unsigned>(sd.span_log2() + g0);
    return out;
}

bool separator_independence(const std::vector<PhaseTableOp> &separators, const BigInt &constrained_dim) {
    if (separators.empty()) {
        return constrained_dim == 1;
    }
    auto r = phase_group_order(separators, separators.front().params().N);
    return !r.has_scalar && r.order == constrained_dim;
}

}  // namespace wwqca
