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

#include "wwqca/automorphism.h"

#include <algorithm>
#include <map>
#include <set>

#include "wwqca/error.h"

namespace wwqca {

std::string variant_name(AutomorphismVariant v) {
    switch (v) {
        case AutomorphismVariant::QubitPair:
            return "qubit_pair";
        case AutomorphismVariant::QuditQubit:
            return "qudit_qubit";
        case AutomorphismVariant::ExtensionUnrotated:
            return "extension_unrotated";
        case AutomorphismVariant::AlternativeExtension:
            return "alternative_extension";
    }
    return "?";
}

AutomorphismVariant parse_variant(const std::string &name) {
    for (auto v : {AutomorphismVariant::QubitPair, AutomorphismVariant::QuditQubit,
                   AutomorphismVariant::ExtensionUnrotated, AutomorphismVariant::AlternativeExtension}) {
        if (variant_name(v) == name) {
            return v;
        }
    }
    throw UsageError("unknown automorphism variant '" + name + "'");
}

Automorphism::Automorphism(AutomorphismVariant variant, const ModelParams &params)
    : variant_(variant), params_(params) {
    if (variant == AutomorphismVariant::QubitPair && params.n != 1) {
        throw UsageError("the qubit pair map needs n = 1");
    }
}

bool Automorphism::has_phase_table_images() const {
    return variant_ == AutomorphismVariant::QubitPair || variant_ == AutomorphismVariant::QuditQubit;
}

namespace {

void need_phase_tables(const Automorphism &a) {
    if (!a.has_phase_table_images()) {
        throw UsageError("variant " + variant_name(a.variant()) + " has no shift-times-phase images");
    }
}

}  // namespace

PhaseTableOp Automorphism::image_x(const RegisterPtr &reg, int a, int b) const {
    need_phase_tables(*this);
    return gate(reg, GateKind::Xhat, {a}) * gate(reg, GateKind::CZhat, {a, b});
}

PhaseTableOp Automorphism::image_z(const RegisterPtr &reg, int a, int b) const {
    need_phase_tables(*this);
    return gate(reg, GateKind::X, {b}) * gate(reg, GateKind::Shat, {a});
}

PhaseTableOp Automorphism::image_x_pow_n(const RegisterPtr &reg, int, int b) const {
    need_phase_tables(*this);
    return gate(reg, GateKind::Z, {b});
}

PhaseTableOp Automorphism::image_z_pow_n(const RegisterPtr &reg, int a, int) const {
    need_phase_tables(*this);
    return gate(reg, GateKind::Zhat, {a}).pow(params_.N / 2);
}

namespace {

/// Permutation and phase on (a, b), index a*2 + b.
DenseMatrix pair_monomial(const ModelParams &p, const std::function<std::pair<int64_t, int64_t>(int64_t, int64_t)> &to,
                          const std::function<int64_t(int64_t, int64_t)> &phase) {
    size_t dim = static_cast<size_t>(p.D);
    std::vector<size_t> perm(dim);
    std::vector<int64_t> ph(dim);
    for (int64_t a = 0; a < p.N; a++) {
        for (int64_t b = 0; b < 2; b++) {
            auto [a2, b2] = to(a, b);
            perm[a * 2 + b] = static_cast<size_t>(a2 * 2 + b2);
            ph[a * 2 + b] = phase(a, b);
        }
    }
    return DenseMatrix::monomial(p.D, perm, ph);
}

DenseMatrix id2(const ModelParams &p) {
    return DenseMatrix::identity(p.D, 2);
}

DenseMatrix idN(const ModelParams &p) {
    return DenseMatrix::identity(p.D, static_cast<size_t>(p.N));
}

}  // namespace

DenseMatrix Automorphism::dense_image_x() const {
    const auto &p = params_;
    int64_t N = p.N;
    auto ident = [](int64_t a, int64_t b) { return std::make_pair(a, b); };
    switch (variant_) {
        case AutomorphismVariant::QubitPair:
        case AutomorphismVariant::QuditQubit: {
            // X^ (on A) after CZ^ = -1 iff a = N-1 and b = 1.
            DenseMatrix xhat = dense_gates::shift(p.D, N).kron(id2(p));
            DenseMatrix czhat = pair_monomial(p, ident, [&](int64_t a, int64_t b) { return a == N - 1 && b ? p.D : 0; });
            return xhat * czhat;
        }
        case AutomorphismVariant::ExtensionUnrotated: {
            DenseMatrix xhat = dense_gates::shift(p.D, N).kron(id2(p));
            DenseMatrix cx = pair_monomial(
                p, [&](int64_t a, int64_t b) { return std::make_pair(a, a == N - 1 ? 1 - b : b); },
                [](int64_t, int64_t) { return 0; });
            return xhat * cx;
        }
        case AutomorphismVariant::AlternativeExtension: {
            DenseMatrix x = idN(p).kron(dense_gates::shift(p.D, 2));
            DenseMatrix cxhat = pair_monomial(
                p, [&](int64_t a, int64_t b) { return std::make_pair((a + b) % N, b); },
                [](int64_t, int64_t) { return 0; });
            return x * cxhat;
        }
    }
    throw UsageError("unknown variant");
}

DenseMatrix Automorphism::dense_image_z() const {
    const auto &p = params_;
    switch (variant_) {
        case AutomorphismVariant::QubitPair:
        case AutomorphismVariant::QuditQubit: {
            // X on B after S^ = e^{i pi a/N} on A.
            DenseMatrix x = idN(p).kron(dense_gates::shift(p.D, 2));
            std::vector<int64_t> s(static_cast<size_t>(p.N));
            for (int64_t a = 0; a < p.N; a++) {
                s[a] = 2 * a;
            }
            return x * dense_gates::diag_exponents(p.D, s).kron(id2(p));
        }
        case AutomorphismVariant::ExtensionUnrotated: {
            std::vector<int64_t> s(static_cast<size_t>(p.N));
            for (int64_t a = 0; a < p.N; a++) {
                s[a] = 2 * a;
            }
            return dense_gates::diag_exponents(p.D, s).kron(dense_gates::clock(p.D, 2));
        }
        case AutomorphismVariant::AlternativeExtension: {
            // Z^ on A times diag(1, e^{i pi/N}) on B.
            return dense_gates::clock(p.D, p.N).kron(dense_gates::diag_exponents(p.D, {0, 2}));
        }
    }
    throw UsageError("unknown variant");
}

DenseMatrix Automorphism::state_map() const {
    const auto &p = params_;
    size_t dim = static_cast<size_t>(p.D);
    std::vector<size_t> perm(dim);
    std::vector<int64_t> ph(dim, 0);
    for (int64_t n = 0; n < p.D; n++) {
        int64_t a, b;
        if (variant_ == AutomorphismVariant::AlternativeExtension) {
            a = n / 2;
            b = n % 2;
        } else {
            a = n % p.N;
            b = n / p.N;
        }
        perm[n] = static_cast<size_t>(a * 2 + b);
    }
    DenseMatrix t = DenseMatrix::monomial(p.D, perm, ph);
    if (has_phase_table_images()) {
        return idN(p).kron(dense_gates::hadamard_unnormalized(p.D)) * t;
    }
    return t;
}

Report verify_automorphism(const Automorphism &au) {
    Report r;
    const auto &p = au.params();
    std::string loc = variant_name(au.variant()) + " n=" + std::to_string(p.n);
    DenseMatrix ix = au.dense_image_x();
    DenseMatrix iz = au.dense_image_z();
    DenseMatrix id = DenseMatrix::identity(p.D, static_cast<size_t>(p.D));
    r.expect(ix.pow(p.D) == id && iz.pow(p.D) == id, "auto.order", loc);
    r.expect(ix.pow(p.D - 1) != id && iz.pow(p.D - 1) != id, "auto.order_exact", loc);
    r.expect(iz * ix == (ix * iz).scaled(Cyclo::root(p.D, 2)), "auto.clock_shift", loc);

    DenseMatrix v = au.state_map();
    DenseMatrix xbar = dense_gates::shift(p.D, p.D);
    DenseMatrix zbar = dense_gates::clock(p.D, p.D);
    r.expect(v * xbar == ix * v, "auto.intertwine_x", loc);
    r.expect(v * zbar == iz * v, "auto.intertwine_z", loc);

    if (au.has_phase_table_images()) {
        auto reg = std::make_shared<Register>(p);
        int a = reg->add_site(p.N, "A");
        int b = reg->add_site(2, "B");
        RegisterPtr rp = reg;
        auto px = au.image_x(rp, a, b);
        auto pz = au.image_z(rp, a, b);
        r.expect(px.dense({a, b}) == ix, "auto.table_x", loc);
        r.expect(pz.dense({a, b}) == iz, "auto.table_z", loc);
        r.expect(px.pow(p.N) == au.image_x_pow_n(rp, a, b), "auto.power_x", loc);
        r.expect(pz.pow(p.N) == au.image_z_pow_n(rp, a, b), "auto.power_z", loc);
    }
    return r;
}

SplitRegister::SplitRegister(const Lattice &lattice, const ModelParams &params) : edges_(lattice.num_edges()) {
    auto reg = std::make_shared<Register>(params);
    for (int e = 0; e < edges_; e++) {
        reg->add_site(params.N, "A" + std::to_string(e));
        b_sites_.push_back(reg->add_site(2, "B" + std::to_string(e)));
    }
    reg_ = reg;
}

PhaseTableOp split_pauli(const PauliOp &op, const Automorphism &a, const SplitRegister &sr) {
    const auto &reg = sr.reg();
    PhaseTableOp out = PhaseTableOp::scalar(reg, op.phase());
    for (const auto &[e, f] : op.factors()) {
        int sa = sr.a_site(e), sb = sr.b_site(e);
        // Normal order per edge: X^a Z^b.
        out = out * a.image_x(reg, sa, sb).pow(f.first) * a.image_z(reg, sa, sb).pow(f.second);
    }
    return out;
}

const std::array<std::pair<int, int>, 15> &vertex_block_gates() {
    static const std::array<std::pair<int, int>, 15> gates{{{2, 3},
                                                            {6, 3},
                                                            {1, 6},
                                                            {2, 6},
                                                            {5, 6},
                                                            {1, 2},
                                                            {5, 2},
                                                            {1, 5},
                                                            {3, 5},
                                                            {4, 5},
                                                            {3, 1},
                                                            {4, 1},
                                                            {2, 4},
                                                            {3, 4},
                                                            {6, 4}}};
    return gates;
}

int slot_edge(const Lattice &lattice, int vertex, int slot) {
    Vec3 v = lattice.vertex(vertex);
    int d = slot % 3;
    if (slot >= 3) {
        v[d] -= 1;
    }
    auto e = lattice.edge_id(v, d);
    return e ? *e : -1;
}

LinearPermutation circuit_u(const Lattice &lattice, const SplitRegister &sr, const EdgeLabeling &labeling) {
    LinearPermutation u;
    for (int e = 0; e < lattice.num_edges(); e++) {
        u.add(sr.a_site(e), sr.b_site(e));
    }
    for (int v = 0; v < lattice.num_vertices(); v++) {
        for (const auto &[c, t] : vertex_block_gates()) {
            int ec = slot_edge(lattice, v, labeling[c - 1]);
            int et = slot_edge(lattice, v, labeling[t - 1]);
            if (ec >= 0 && et >= 0) {
                u.add(sr.a_site(ec), sr.b_site(et));
            }
        }
    }
    return u;
}

namespace {

std::string edge_name(const Lattice &l, int e) {
    const auto &ed = l.edge(e);
    static const char *dn[3] = {"x", "y", "z"};
    return "edge (" + std::to_string(ed.cell[0]) + "," + std::to_string(ed.cell[1]) + "," +
           std::to_string(ed.cell[2]) + ")/" + dn[ed.dir];
}

std::string plaq_name(const Lattice &l, int p) {
    const auto &pl = l.plaquette(p);
    static const char *dn[3] = {"x", "y", "z"};
    return "plaquette (" + std::to_string(pl.cell[0]) + "," + std::to_string(pl.cell[1]) + "," +
           std::to_string(pl.cell[2]) + ")/" + dn[pl.normal];
}

Automorphism shipped(const ModelParams &p) {
    return Automorphism(p.n == 1 ? AutomorphismVariant::QubitPair : AutomorphismVariant::QuditQubit, p);
}

}  // namespace

Report certify_labeling(const Lattice &lattice, const ModelParams &params, const EdgeLabeling &labeling,
                        bool stop_at_first_failure) {
    Report r;
    Model model(lattice, params);
    SplitRegister sr(lattice, params);
    Automorphism au = shipped(params);
    LinearPermutation u = circuit_u(lattice, sr, labeling);
    for (int e = 0; e < lattice.num_edges(); e++) {
        auto img = conjugate(split_pauli(model.boson_hop(e), au, sr), u);
        auto zb = gate(sr.reg(), GateKind::Z, {sr.b_site(e)});
        bool ok = img == zb;
        r.expect(ok, "U.boson_to_zb", edge_name(lattice, e), ok ? "" : img.str());
        if (!ok && stop_at_first_failure) {
            return r;
        }
        auto xb = gate(sr.reg(), GateKind::X, {sr.b_site(e)});
        bool fixed = conjugate(xb, u) == xb;
        r.expect(fixed, "U.fixes_xb", edge_name(lattice, e));
        if (!fixed && stop_at_first_failure) {
            return r;
        }
    }
    return r;
}

std::vector<EdgeLabeling> all_passing_labelings(const Lattice &lattice, const ModelParams &params) {
    std::vector<EdgeLabeling> out;
    EdgeLabeling lab{0, 1, 2, 3, 4, 5};
    do {
        if (certify_labeling(lattice, params, lab, true).all_pass()) {
            out.push_back(lab);
        }
    } while (std::next_permutation(lab.begin(), lab.end()));
    return out;
}

EdgeLabeling find_labeling(const Lattice &lattice, const ModelParams &params) {
    if (lattice.is_slab()) {
        throw UsageError("labeling search needs a torus");
    }
    for (int d = 0; d < 3; d++) {
        if (lattice.dims()[d] < 3) {
            throw UsageError("labeling search needs a torus of size at least 3");
        }
    }
    EdgeLabeling lab{0, 1, 2, 3, 4, 5};
    do {
        if (certify_labeling(lattice, params, lab, true).all_pass()) {
            return lab;
        }
    } while (std::next_permutation(lab.begin(), lab.end()));
    throw DefinitionError("no edge labeling maps every boson hop to Z^B");
}

SplitOperator parse_split_operator(const std::string &name) {
    if (name == "bhat" || name == "Bhat_p") return SplitOperator::Bhat_p;
    if (name == "fhat" || name == "Fhat_p") return SplitOperator::Fhat_p;
    if (name == "xhat" || name == "Xhat_e") return SplitOperator::Xhat_e;
    if (name == "ahat" || name == "Ahat_v") return SplitOperator::Ahat_v;
    throw UsageError("unknown split operator '" + name + "'");
}

SplitModel::SplitModel(const Lattice &lattice, const ModelParams &params, const EdgeLabeling &labeling)
    : model_(lattice, params),
      auto_(shipped(params)),
      split_(lattice, params),
      circuit_(circuit_u(lattice, split_, labeling)) {
}

PhaseTableOp SplitModel::transform(const PauliOp &op) const {
    return conjugate(split_pauli(op, auto_, split_), circuit_);
}

PhaseTableOp SplitModel::derive(const PauliOp &op) const {
    return transform(op).restrict(split_.b_sites());
}

PauliOp SplitModel::dressed_hop(int a, int b, bool lower) const {
    return model_.vertex(a) * model_.hop(a, b, lower) * model_.vertex(b).dagger();
}

PhaseTableOp SplitModel::bhat(int p) const {
    return derive(model_.btilde(p));
}

PhaseTableOp SplitModel::fhat(int p) const {
    return derive(model_.flipper(p));
}

PhaseTableOp SplitModel::xhat(int e) const {
    const Edge &edge = lattice().edge(e);
    return hop_hat(edge.tail, edge.head);
}

PhaseTableOp SplitModel::hop_hat(int a, int b, bool lower) const {
    return derive(dressed_hop(a, b, lower));
}

PhaseTableOp SplitModel::ahat(int v) const {
    return derive(model_.vertex(v).pow(-2));
}

PhaseTableOp SplitModel::zhat(int e, int64_t power) const {
    return gate(split_.reg(), GateKind::Zhat, {split_.a_site(e)}).pow(mod_floor(power, params().N));
}

PhaseTableOp SplitModel::make(SplitOperator kind, int loc) const {
    auto need = [&](int count, const char *what) {
        if (loc < 0 || loc >= count) {
            throw UsageError(std::string("location out of range for ") + what);
        }
    };
    switch (kind) {
        case SplitOperator::Bhat_p:
            need(lattice().num_plaquettes(), "plaquette");
            return bhat(loc);
        case SplitOperator::Fhat_p:
            need(lattice().num_plaquettes(), "plaquette");
            return fhat(loc);
        case SplitOperator::Xhat_e:
            need(lattice().num_edges(), "edge");
            return xhat(loc);
        case SplitOperator::Ahat_v:
            need(lattice().num_vertices(), "vertex");
            return ahat(loc);
    }
    throw UsageError("unknown split operator");
}

std::vector<PhaseTableOp> SplitModel::hamiltonian() const {
    std::vector<PhaseTableOp> terms;
    const auto &l = lattice();
    if (l.is_slab()) {
        for (int v = 0; v < l.num_vertices(); v++) {
            if (l.in_lower(l.vertex(v))) {
                terms.push_back(ahat(v));
            }
        }
    }
    for (int p = 0; p < l.num_plaquettes(); p++) {
        terms.push_back(bhat(p));
    }
    return terms;
}

namespace {

bool overlap(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return !both.empty();
}

void check_commuting(Report &r, const std::string &id, const std::vector<PhaseTableOp> &ops,
                     const std::vector<std::string> &names) {
    std::vector<std::vector<int>> supp;
    for (const auto &o : ops) {
        supp.push_back(o.support());
    }
    for (size_t i = 0; i < ops.size(); i++) {
        for (size_t j = i + 1; j < ops.size(); j++) {
            if (!overlap(supp[i], supp[j])) {
                r.pass(id, names[i] + " " + names[j]);
                continue;
            }
            r.expect(ops[i] * ops[j] == ops[j] * ops[i], id, names[i] + " " + names[j]);
        }
    }
}

}  // namespace

Report verify_separator(const SplitModel &sm) {
    Report r;
    const auto &l = sm.lattice();
    const auto &p = sm.params();
    int P = l.num_plaquettes();
    std::vector<PhaseTableOp> B, F;
    std::vector<std::string> names;
    std::vector<std::vector<int>> bs, fs;
    for (int q = 0; q < P; q++) {
        B.push_back(sm.bhat(q));
        F.push_back(sm.fhat(q));
        names.push_back(plaq_name(l, q));
        bs.push_back(B.back().support());
        fs.push_back(F.back().support());
    }
    for (int q = 0; q < P; q++) {
        r.expect(B[q].pow(p.N).is_identity(), "S.order", names[q]);
        r.expect(!B[q].pow(p.N / 2).is_identity() || p.N == 1, "S.order_exact", names[q]);
        r.expect(F[q] * B[q] == (B[q] * F[q]).with_phase(4), "S.flip", names[q]);
    }
    check_commuting(r, "S.commute", B, names);
    for (int q = 0; q < P; q++) {
        for (int s = 0; s < P; s++) {
            if (s == q) {
                continue;
            }
            std::string loc = names[q] + " " + names[s];
            if (!overlap(fs[q], bs[s])) {
                r.pass("S.flip_other", loc);
                continue;
            }
            r.expect(F[q] * B[s] == B[s] * F[q], "S.flip_other", loc);
        }
    }
    BigInt dim = 1;
    for (int e = 0; e < l.num_edges(); e++) {
        dim *= p.N;
    }
    auto g = phase_group_order(B, p.N);
    r.expect(g.order == dim && !g.has_scalar, "S.independence", l.describe(),
             "order " + g.order.str() + " vs " + dim.str() + (g.has_scalar ? ", contains a scalar" : ""));
    return r;
}

Report verify_split_slab(const SplitModel &sm) {
    Report r;
    const auto &l = sm.lattice();
    const auto &p = sm.params();
    const auto &model = sm.model();
    auto terms = sm.hamiltonian();
    std::vector<std::string> names;
    for (int v = 0; v < l.num_vertices(); v++) {
        if (l.is_slab() && l.in_lower(l.vertex(v))) {
            names.push_back("vertex " + std::to_string(v));
        }
    }
    for (int q = 0; q < l.num_plaquettes(); q++) {
        names.push_back(plaq_name(l, q));
    }
    for (size_t i = 0; i < terms.size(); i++) {
        r.expect(terms[i].pow(p.N).is_identity(), "H1.order", names[i]);
    }
    check_commuting(r, "H1.commute", terms, names);

    std::map<std::pair<int, int>, PhaseTableOp> hops;
    auto hop = [&](int a, int b) -> const PhaseTableOp & {
        auto it = hops.find({a, b});
        if (it == hops.end()) {
            it = hops.emplace(std::make_pair(a, b), sm.hop_hat(a, b)).first;
        }
        return it->second;
    };
    PhaseTableOp upper(sm.split().reg()), lower(sm.split().reg());
    for (int q = 0; q < l.num_plaquettes(); q++) {
        PhaseTableOp b = sm.bhat(q);
        int v1 = model.plaquette_vertex(q, 1), v2 = model.plaquette_vertex(q, 2);
        int v3 = model.plaquette_vertex(q, 3), v4 = model.plaquette_vertex(q, 4);
        PhaseTableOp loop = hop(v2, v3) * hop(v3, v4) * hop(v4, v1) * hop(v1, v2);
        const auto &o = l.plaquette(q).o_edge;
        PhaseTableOp rhs = o ? loop * sm.zhat(*o, -1) : loop;
        r.expect(b == rhs, "H1.loop", plaq_name(l, q));
        if (l.plaquette_in_upper(q)) {
            upper = upper * b;
        }
        if (l.plaquette_in_lower(q)) {
            lower = lower * b;
        }
    }
    if (l.is_slab()) {
        for (int v = 0; v < l.num_vertices(); v++) {
            if (l.in_lower(l.vertex(v))) {
                lower = lower * sm.ahat(v);
            }
        }
        r.expect(upper.is_identity(), "H1.upper_relation", "plane U", upper.str());
        r.expect(lower.is_identity(), "H1.lower_relation", "plane L", lower.str());
    }
    return r;
}

BigInt split_gsd(const SplitModel &sm) {
    BigInt dim = 1;
    for (int e = 0; e < sm.lattice().num_edges(); e++) {
        dim *= sm.params().N;
    }
    auto g = phase_group_order(sm.hamiltonian(), sm.params().N);
    if (g.has_scalar) {
        throw DefinitionError("the split term group contains a nontrivial scalar");
    }
    return dim / g.order;
}

}  // namespace wwqca
