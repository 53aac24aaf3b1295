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

#include "wwqca/models.h"

#include <sstream>

namespace wwqca {

namespace {

std::string vec_str(const Vec3 &v) {
    std::ostringstream out;
    out << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
    return out.str();
}

const char *dir_name(int d) {
    static const char *names[3] = {"x", "y", "z"};
    return names[d];
}

std::string edge_loc(const Lattice &l, int e) {
    return "edge " + vec_str(l.edge(e).cell) + "/" + dir_name(l.edge(e).dir);
}

std::string plaq_loc(const Lattice &l, int p) {
    return "plaquette " + vec_str(l.plaquette(p).cell) + "/" + dir_name(l.plaquette(p).normal);
}

std::string vertex_loc(const Lattice &l, int v) {
    return "vertex " + vec_str(l.vertex(v));
}

SympVec vec_from(int64_t D, int64_t m, const std::vector<std::pair<int64_t, std::string>> &rows) {
    SympVec v(D, rows.size());
    for (size_t k = 0; k < rows.size(); k++) {
        v[k] = LaurentPoly::parse(rows[k].second, D).scaled(rows[k].first);
    }
    (void)m;
    return v;
}

}  // namespace

ModelVectors model_vectors(const ModelParams &params) {
    const int64_t D = params.D;
    const int64_t m = params.m;
    ModelVectors mv;
    SympVec sx = vec_from(D, m, {{1, "1"}, {1, "0"}, {1, "0"},
                                 {m, "1 - x^-1"}, {-m, "x + 2 y^-1"}, {m, "x + x z^-1 + 1"}});
    SympVec bt = vec_from(D, m, {{1, "0"}, {1, "1 - z"}, {1, "y - 1"},
                                 {1, "0"}, {m, "y z + y - y^-1 - z"}, {m, "y z + 1 - y z^-1 - z^-1"}});
    LaurentPoly s = LaurentPoly::parse("y z + y + 1", D);
    LaurentPoly xi = LaurentPoly::parse("x^-1", D);
    bt[3] = s.scaled(m) - LaurentPoly::parse("y z", D) - (s * xi).scaled(m) - xi;
    SympVec fl = vec_from(D, m, {{1, "y z"}, {1, "0"}, {1, "0"},
                                 {m, "y z - x y z"}, {m, "x z + y z + z"}, {-m, "2 x y z + y"}});
    mv.scriptx = {sx, sx.cycle(), sx.cycle().cycle()};
    mv.btilde = {bt, bt.cycle(), bt.cycle().cycle()};
    mv.flipper = {fl, fl.cycle(), fl.cycle().cycle()};
    // Sign chosen so that the N-th power of the hop is the boson hop with phase +1.
    mv.scriptx_phase = mod_floor(m * (params.N - 1), params.P);
    return mv;
}

Report verify_vector_identities(const ModelParams &params) {
    ModelVectors v = model_vectors(params);
    LaurentPoly zero(params.D);
    LaurentPoly two = LaurentPoly::constant(params.D, 2);
    Report r;
    const char *axis = "xyz";
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            std::string loc = std::string("n=") + std::to_string(params.n) + " " + axis[i] + axis[j];
            LaurentPoly bb = symp_pair(v.btilde[i], v.btilde[j]);
            r.expect(bb == zero, "B.btilde_btilde", loc, bb.str());
            LaurentPoly bx = symp_pair(v.btilde[i], v.scriptx[j]).scaled(params.N);
            r.expect(bx == zero, "B.btilde_scriptx", loc, bx.str());
            LaurentPoly fx = symp_pair(v.flipper[i], v.scriptx[j]);
            r.expect(fx == zero, "B.flipper_scriptx", loc, fx.str());
            LaurentPoly bf = symp_pair(v.btilde[i], v.flipper[j]);
            r.expect(bf == (i == j ? two : zero), "B.btilde_flipper", loc, bf.str());
        }
    }
    return r;
}

OperatorKind parse_operator_kind(const std::string &name) {
    if (name == "A_v" || name == "avertex") return OperatorKind::A_v;
    if (name == "B_p" || name == "bplaq") return OperatorKind::B_p;
    if (name == "Btilde_p" || name == "btilde") return OperatorKind::Btilde_p;
    if (name == "C_e" || name == "boson") return OperatorKind::C_e;
    if (name == "ScriptX_e" || name == "semion") return OperatorKind::ScriptX_e;
    if (name == "F_p" || name == "flipper") return OperatorKind::F_p;
    if (name == "Ahat_v" || name == "ahat") return OperatorKind::Ahat_v;
    if (name == "BtildePrime_p" || name == "btildeprime") return OperatorKind::BtildePrime_p;
    throw UsageError("unknown operator kind '" + name + "'");
}

ModelId parse_model_id(const std::string &name) {
    if (name == "hww") return ModelId::HWW;
    if (name == "htww") return ModelId::HtildeWW;
    if (name == "cond") return ModelId::Hcond;
    if (name == "h1") return ModelId::H1family;
    throw UsageError("unknown model '" + name + "' (expected hww, htww, cond, h1)");
}

std::string model_name(ModelId id) {
    switch (id) {
        case ModelId::HWW:
            return "hww";
        case ModelId::HtildeWW:
            return "htww";
        case ModelId::Hcond:
            return "cond";
        case ModelId::H1family:
            return "h1";
    }
    return "?";
}

Model::Model(const Lattice &lattice, const ModelParams &params)
    : lattice_(lattice), params_(params), vecs_(model_vectors(params)) {
}

PauliOp Model::vertex(int v) const {
    PauliOp::Factors f;
    const Vec3 &p = lattice_.vertex(v);
    for (int d = 0; d < 3; d++) {
        if (auto e = lattice_.edge_id(p, d)) {
            f[*e].second -= 1;
        }
        Vec3 q = p;
        q[d] -= 1;
        if (auto e = lattice_.edge_id(q, d)) {
            f[*e].second += 1;
        }
    }
    return PauliOp(params_, f, 0);
}

PauliOp Model::vertex_in_plane(int v) const {
    PauliOp a = vertex(v);
    PauliOp::Factors f;
    for (const auto &[e, ab] : a.factors()) {
        if (lattice_.edge(e).dir != 2) {
            f[e] = ab;
        }
    }
    return PauliOp(params_, f, 0);
}

int Model::plaquette_vertex(int p, int label) const {
    static const int corner_of_label[5] = {-1, 2, 3, 0, 1};
    if (label < 1 || label > 4) {
        throw UsageError("plaquette vertex label must be 1..4");
    }
    return lattice_.plaquette(p).corner_ids[corner_of_label[label]];
}

PauliOp Model::btilde(int p) const {
    const auto &pl = lattice_.plaquette(p);
    return instantiate(vecs_.btilde[pl.normal], pl.cell, lattice_, params_, 0);
}

PauliOp Model::plaquette(int p) const {
    PauliOp a = vertex(plaquette_vertex(p, 1)) * vertex(plaquette_vertex(p, 3)) *
                vertex(plaquette_vertex(p, 4));
    return btilde(p) * a.pow(params_.m);
}

PauliOp Model::btilde_prime(int p) const {
    return btilde(p) * vertex(plaquette_vertex(p, 1)).pow(-2);
}

PauliOp Model::semion_hop(int e) const {
    const auto &ed = lattice_.edge(e);
    return instantiate(vecs_.scriptx[ed.dir], ed.cell, lattice_, params_, vecs_.scriptx_phase);
}

PauliOp Model::boson_hop(int e) const {
    const auto &ed = lattice_.edge(e);
    return instantiate(vecs_.scriptx[ed.dir].scaled(params_.N), ed.cell, lattice_, params_, 0);
}

PauliOp Model::flipper(int p) const {
    const auto &pl = lattice_.plaquette(p);
    return instantiate(vecs_.flipper[pl.normal], pl.cell, lattice_, params_, 0);
}

PauliOp Model::lower_hop(int e) const {
    const auto &ed = lattice_.edge(e);
    if (ed.dir == 2) {
        throw UsageError("lower_hop is defined for in-plane edges");
    }
    PauliOp h = semion_hop(e);
    Vec3 head = ed.cell + unit(ed.dir);
    int other = 1 - ed.dir;
    int64_t power = ed.dir == 0 ? -2 : 2;
    if (auto f = lattice_.edge_id(head, other)) {
        h *= PauliOp::z(params_, *f, power);
    }
    return h;
}

PauliOp Model::hop(int a, int b, bool lower) const {
    for (int e : lattice_.incident_edges(a)) {
        const auto &ed = lattice_.edge(e);
        if (ed.tail == a && ed.head == b) {
            return lower ? lower_hop(e) : semion_hop(e);
        }
        if (ed.head == a && ed.tail == b) {
            return (lower ? lower_hop(e) : semion_hop(e)).dagger();
        }
    }
    throw UsageError("vertices are not adjacent");
}

PauliOp Model::make(OperatorKind kind, int loc) const {
    auto need = [&](int count, const char *what) {
        if (loc < 0 || loc >= count) {
            throw UsageError(std::string("location out of range for ") + what);
        }
    };
    switch (kind) {
        case OperatorKind::A_v:
            need(lattice_.num_vertices(), "vertex");
            return vertex(loc);
        case OperatorKind::B_p:
            need(lattice_.num_plaquettes(), "plaquette");
            return plaquette(loc);
        case OperatorKind::Btilde_p:
            need(lattice_.num_plaquettes(), "plaquette");
            return btilde(loc);
        case OperatorKind::C_e:
            need(lattice_.num_edges(), "edge");
            return boson_hop(loc);
        case OperatorKind::ScriptX_e:
            need(lattice_.num_edges(), "edge");
            return semion_hop(loc);
        case OperatorKind::F_p:
            need(lattice_.num_plaquettes(), "plaquette");
            return flipper(loc);
        case OperatorKind::BtildePrime_p:
            need(lattice_.num_plaquettes(), "plaquette");
            return btilde_prime(loc);
        case OperatorKind::Ahat_v:
            throw UsageError("Ahat_v acts on the split register; use derive_operator");
    }
    throw UsageError("unknown operator kind");
}

std::vector<PauliOp> Model::hamiltonian(ModelId model) const {
    std::vector<PauliOp> terms;
    switch (model) {
        case ModelId::HWW:
        case ModelId::HtildeWW:
            for (int v = 0; v < lattice_.num_vertices(); v++) {
                terms.push_back(vertex(v));
            }
            for (int p = 0; p < lattice_.num_plaquettes(); p++) {
                terms.push_back(model == ModelId::HWW ? plaquette(p) : btilde(p));
            }
            break;
        case ModelId::Hcond:
            if (lattice_.is_slab()) {
                for (int v = 0; v < lattice_.num_vertices(); v++) {
                    if (lattice_.in_lower(lattice_.vertex(v))) {
                        terms.push_back(vertex(v).pow(2));
                    }
                }
            }
            for (int p = 0; p < lattice_.num_plaquettes(); p++) {
                terms.push_back(btilde(p));
            }
            for (int e = 0; e < lattice_.num_edges(); e++) {
                terms.push_back(boson_hop(e));
            }
            break;
        case ModelId::H1family:
            throw UsageError("the split model is built from phase-table operators (automorphism module)");
    }
    return terms;
}

namespace {

void check_eq(Report &r, const std::string &id, const std::string &loc, const PauliOp &lhs, const PauliOp &rhs) {
    if (lhs == rhs) {
        r.pass(id, loc);
    } else {
        r.fail(id, loc, (lhs * rhs.dagger()).str());
    }
}

void check_comm(Report &r, const std::string &id, const std::string &loc, const PauliOp &a, const PauliOp &b,
                int64_t want) {
    int64_t c = comm_exponent(a, b);
    int64_t w = mod_floor(want, a.params().D);
    if (c == w) {
        r.pass(id, loc);
    } else {
        r.fail(id, loc, "commutation exponent " + std::to_string(c) + ", expected " + std::to_string(w));
    }
}

void check_commuting_terms(Report &r, const std::string &id, const std::vector<PauliOp> &terms) {
    bool ok = true;
    std::string where;
    for (size_t i = 0; i < terms.size() && ok; i++) {
        for (size_t j = i + 1; j < terms.size(); j++) {
            if (comm_exponent(terms[i], terms[j]) != 0) {
                ok = false;
                where = "terms " + std::to_string(i) + "," + std::to_string(j);
                break;
            }
        }
    }
    r.expect(ok, id, std::to_string(terms.size()) + " terms", where);
}

}  // namespace

Report verify_relation_catalog(const Lattice &lattice, const ModelParams &params) {
    Report r;
    Model model(lattice, params);
    const int64_t N = params.N;
    const int V = lattice.num_vertices(), E = lattice.num_edges(), P = lattice.num_plaquettes();

    std::vector<PauliOp> A, Bt, B, C, X, F;
    for (int v = 0; v < V; v++) A.push_back(model.vertex(v));
    for (int p = 0; p < P; p++) {
        Bt.push_back(model.btilde(p));
        B.push_back(model.plaquette(p));
        F.push_back(model.flipper(p));
    }
    for (int e = 0; e < E; e++) {
        C.push_back(model.boson_hop(e));
        X.push_back(model.semion_hop(e));
    }

    // Cube relations.
    for (int c = 0; c < lattice.num_cubes(); c++) {
        const auto &cube = lattice.cube(c);
        std::string loc = "cube " + vec_str(cube.cell);
        PauliOp pb(params), pbt(params), pbn(params), near_b(params), near_bt(params), near_bn(params);
        for (int d = 0; d < 3; d++) {
            pb *= B[cube.far_faces[d]];
            pbt *= Bt[cube.far_faces[d]];
            pbn *= Bt[cube.far_faces[d]].pow(N);
            near_b *= B[cube.near_faces[d]];
            near_bt *= Bt[cube.near_faces[d]];
            near_bn *= Bt[cube.near_faces[d]].pow(N);
        }
        pb *= near_b.dagger();
        pbt *= near_bt.dagger();
        pbn *= near_bn.dagger();
        check_eq(r, "R1", loc, pb, A[cube.vertex1] * A[cube.vertex8]);
        check_eq(r, "R2", loc, pbt, A[cube.vertex1].pow(2));
        check_eq(r, "R3", loc, pbn, PauliOp(params));
    }

    // Boson hops.
    for (int p = 0; p < P; p++) {
        PauliOp prod(params);
        for (int e : lattice.plaquette(p).edges) {
            prod *= C[e];
        }
        check_eq(r, "R4", plaq_loc(lattice, p), Bt[p].pow(N), prod);
    }
    for (int e = 0; e < E; e++) {
        check_eq(r, "R4.square", edge_loc(lattice, e), C[e].pow(2), PauliOp(params));
        check_eq(r, "R4.hermitian", edge_loc(lattice, e), C[e].dagger(), C[e]);
        for (int v = 0; v < V; v++) {
            bool touches = lattice.edge(e).tail == v || lattice.edge(e).head == v;
            check_comm(r, "R5.vertex", edge_loc(lattice, e) + " " + vertex_loc(lattice, v), C[e], A[v],
                       touches ? N : 0);
        }
        for (int p = 0; p < P; p++) {
            check_comm(r, "R5.plaquette", edge_loc(lattice, e) + " " + plaq_loc(lattice, p), C[e], Bt[p], 0);
        }
        for (int f = 0; f < E; f++) {
            check_comm(r, "R5.boson", edge_loc(lattice, e) + " " + edge_loc(lattice, f), C[e], C[f], 0);
        }
    }

    // Flippers. Near a slab boundary the truncated flipper of a plaquette with no O
    // edge has nothing to flip, so only plaquettes with an O edge are checked.
    for (int p = 0; p < P; p++) {
        if (!lattice.plaquette(p).o_edge) {
            continue;
        }
        for (int q = 0; q < P; q++) {
            check_comm(r, "R6.flip", plaq_loc(lattice, p) + " " + plaq_loc(lattice, q), F[p], Bt[q],
                       p == q ? 2 : 0);
        }
        for (int e = 0; e < E; e++) {
            check_comm(r, "R6.boson", plaq_loc(lattice, p) + " " + edge_loc(lattice, e), F[p], C[e], 0);
        }
    }

    if (!lattice.is_slab()) {
        PauliOp prod(params);
        for (int v = 0; v < V; v++) prod *= A[v];
        check_eq(r, "R7", "all vertices", prod, PauliOp(params));
    }

    // Hop relations.
    for (int e = 0; e < E; e++) {
        check_comm(r, "R8.z_hop", edge_loc(lattice, e), PauliOp::z(params, e), X[e], 1);
        check_eq(r, "R8.hop_power", edge_loc(lattice, e), X[e].pow(N), C[e]);
    }
    for (int p = 0; p < P; p++) {
        int v1 = model.plaquette_vertex(p, 1), v2 = model.plaquette_vertex(p, 2);
        int v3 = model.plaquette_vertex(p, 3), v4 = model.plaquette_vertex(p, 4);
        PauliOp loop = model.hop(v2, v3) * model.hop(v3, v4) * model.hop(v4, v1) * model.hop(v1, v2);
        const auto &o = lattice.plaquette(p).o_edge;
        PauliOp rhs = o ? loop * PauliOp::z(params, *o, -2) : loop;
        check_eq(r, "R8.loop", plaq_loc(lattice, p), Bt[p], rhs);
        if (lattice.plaquette_in_lower(p)) {
            PauliOp lhs = model.btilde_prime(p);
            PauliOp rhs2 = loop * model.vertex_in_plane(v1).pow(-2);
            check_eq(r, "R8.lower_loop", plaq_loc(lattice, p), lhs, rhs2);
        }
    }

    if (lattice.is_slab()) {
        PauliOp upper(params), lower(params);
        for (int p = 0; p < P; p++) {
            if (lattice.plaquette_in_upper(p)) upper *= Bt[p];
            if (lattice.plaquette_in_lower(p)) lower *= Bt[p];
        }
        for (int v = 0; v < V; v++) {
            if (lattice.in_lower(lattice.vertex(v))) lower *= A[v].pow(-2);
        }
        check_eq(r, "R9.upper", "plane U", upper, PauliOp(params));
        check_eq(r, "R9.lower", "plane L", lower, PauliOp(params));
    }

    for (int p = 0; p < P; p++) {
        const auto &o = lattice.plaquette(p).o_edge;
        if (!o) {
            continue;
        }
        for (int e = 0; e < E; e++) {
            PauliOp z2 = PauliOp::z(params, e, 2);
            check_comm(r, "R10.z2", plaq_loc(lattice, p) + " " + edge_loc(lattice, e), F[p], z2,
                       e == *o ? -2 : 0);
            check_comm(r, "R10.hop", plaq_loc(lattice, p) + " " + edge_loc(lattice, e), F[p], X[e], 0);
        }
    }

    check_commuting_terms(r, "H.hww", model.hamiltonian(ModelId::HWW));
    check_commuting_terms(r, "H.htww", model.hamiltonian(ModelId::HtildeWW));
    check_commuting_terms(r, "H.cond", model.hamiltonian(ModelId::Hcond));
    return r;
}

}  // namespace wwqca
