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

#include "wwqca/spin.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "wwqca/error.h"

namespace wwqca {

Plane parse_plane(const std::string &name) {
    if (name == "U" || name == "u") {
        return Plane::U;
    }
    if (name == "L" || name == "l") {
        return Plane::L;
    }
    throw UsageError("unknown boundary plane '" + name + "' (expected U or L)");
}

SpinModel parse_spin_model(const std::string &name) {
    if (name == "cond") {
        return SpinModel::Cond;
    }
    if (name == "h1") {
        return SpinModel::H1;
    }
    throw UsageError("spin needs --model cond or h1, got '" + name + "'");
}

StringPaths canonical_paths(const Lattice &lattice, Plane plane, int length) {
    if (!lattice.is_slab()) {
        throw UsageError("boundary strings need a slab");
    }
    if (length < 1 || lattice.dims()[0] < 2 * length + 1 || lattice.dims()[1] < length + 1) {
        throw UsageError("slab too small for strings of length " + std::to_string(length));
    }
    int z = plane == Plane::U ? lattice.slab_m() : 0;
    auto walk = [&](int dx, int dy) {
        std::vector<int> path;
        for (int k = 0; k <= length; k++) {
            path.push_back(*lattice.vertex_id({k * dx, k * dy, z}));
        }
        return path;
    };
    return {walk(1, 0), walk(0, 1), walk(-1, 0)};
}

PauliOp pauli_string(const Model &model, const std::vector<int> &path, bool lower) {
    PauliOp w(model.params());
    for (size_t i = 0; i + 1 < path.size(); i++) {
        w = model.hop(path[i], path[i + 1], lower) * w;
    }
    return w;
}

PhaseTableOp split_string(const SplitModel &sm, const std::vector<int> &path, bool lower) {
    PhaseTableOp w(sm.split().reg());
    for (size_t i = 0; i + 1 < path.size(); i++) {
        w = sm.hop_hat(path[i], path[i + 1], lower) * w;
    }
    return w;
}

int64_t topological_spin(const PauliOp &w1, const PauliOp &w2, const PauliOp &w3) {
    PauliOp t = w3 * w2.dagger() * w1 * w3.dagger() * w2 * w1.dagger();
    if (!t.is_scalar()) {
        throw GeometryError("hexagon product is not a scalar: " + t.str());
    }
    return t.phase();
}

int64_t topological_spin(const PhaseTableOp &w1, const PhaseTableOp &w2, const PhaseTableOp &w3) {
    PhaseTableOp t = w3 * w2.dagger() * w1 * w3.dagger() * w2 * w1.dagger();
    if (!t.is_scalar()) {
        throw GeometryError("hexagon product is not a scalar: " + t.str());
    }
    return t.scalar_of();
}

int64_t boundary_spin(SpinModel model, const Lattice &lattice, const ModelParams &params, Plane plane,
                      int length) {
    StringPaths paths = canonical_paths(lattice, plane, length);
    bool lower = plane == Plane::L;
    if (model == SpinModel::Cond) {
        Model m(lattice, params);
        return topological_spin(pauli_string(m, paths.w1, lower), pauli_string(m, paths.w2, lower),
                                pauli_string(m, paths.w3, lower));
    }
    SplitModel sm(lattice, params);
    return topological_spin(split_string(sm, paths.w1, lower), split_string(sm, paths.w2, lower),
                            split_string(sm, paths.w3, lower));
}

std::string root_of_unity(int64_t exponent, const ModelParams &params) {
    int64_t k = ((exponent % params.P) + params.P) % params.P;
    if (k == 0) {
        return "1";
    }
    if (k == params.D) {
        return "-1";
    }
    if (k == params.N) {
        return "i";
    }
    if (k == 3 * params.N) {
        return "-i";
    }
    // e^{i pi k/(2N)}
    int64_t den = params.D;
    int64_t g = std::gcd(k, den);
    return "exp(i pi " + std::to_string(k / g) + "/" + std::to_string(den / g) + ")";
}

std::vector<LabeledTerm> labeled_terms(const Model &model, ModelId id) {
    const Lattice &l = model.lattice();
    std::vector<LabeledTerm> terms;
    switch (id) {
        case ModelId::HWW:
        case ModelId::HtildeWW:
            for (int v = 0; v < l.num_vertices(); v++) {
                terms.push_back({model.vertex(v), true, v, l.vertex(v)});
            }
            for (int p = 0; p < l.num_plaquettes(); p++) {
                terms.push_back({id == ModelId::HWW ? model.plaquette(p) : model.btilde(p), false, p, l.plaquette(p).cell});
            }
            break;
        case ModelId::Hcond:
            if (l.is_slab()) {
                for (int v = 0; v < l.num_vertices(); v++) {
                    if (l.in_lower(l.vertex(v))) {
                        terms.push_back({model.vertex(v).pow(2), true, v, l.vertex(v)});
                    }
                }
            }
            for (int p = 0; p < l.num_plaquettes(); p++) {
                terms.push_back({model.btilde(p), false, p, l.plaquette(p).cell});
            }
            for (int e = 0; e < l.num_edges(); e++) {
                terms.push_back({model.boson_hop(e), false, e, l.edge(e).cell});
            }
            break;
        case ModelId::H1family:
            throw UsageError("excitation patterns are defined for the Pauli models");
    }
    return terms;
}

std::vector<size_t> excitation_pattern(const PauliOp &op, const std::vector<LabeledTerm> &terms) {
    std::vector<size_t> hit;
    for (size_t i = 0; i < terms.size(); i++) {
        if (comm_exponent(op, terms[i].op) != 0) {
            hit.push_back(i);
        }
    }
    return hit;
}

Report certify_deconfinement(const Model &model, ModelId id, const std::vector<int> &path, bool lower) {
    if (path.size() < 2 || path.front() == path.back()) {
        throw UsageError("deconfinement needs an open path");
    }
    const Lattice &l = model.lattice();
    auto terms = labeled_terms(model, id);
    PauliOp w = pauli_string(model, path, lower);
    std::string where = model_name(id) + " " + l.describe() + " length " + std::to_string(path.size() - 1);

    std::set<int> ends{path.front(), path.back()};
    // Lattice steps between two points, periodic where the lattice is.
    auto steps = [&l](const Vec3 &a, const Vec3 &b) {
        int d = 0;
        for (int k = 0; k < 3; k++) {
            int diff = std::abs(a[k] - b[k]);
            if (k < 2 || !l.is_slab()) {
                diff = std::min(diff, l.dims()[k] - diff);
            }
            d = std::max(d, diff);
        }
        return d;
    };
    std::set<int> expected, excited;
    for (const auto &t : terms) {
        if (t.vertex_type && ends.count(t.loc)) {
            expected.insert(t.loc);
        }
    }
    std::string far;
    for (size_t i : excitation_pattern(w, terms)) {
        const auto &t = terms[i];
        if (t.vertex_type) {
            excited.insert(t.loc);
        }
        bool touches = std::any_of(ends.begin(), ends.end(),
                                   [&](int v) { return steps(t.anchor, l.vertex(v)) <= 1; });
        if (!touches && far.empty()) {
            far = "term " + std::to_string(i) + " away from the endpoints";
        }
    }
    std::string got;
    for (int v : excited) {
        got += (got.empty() ? "" : ",") + std::to_string(v);
    }
    Report r;
    r.expect(excited == expected, "string.endpoint_vertices", where, "excited vertices {" + got + "}");
    r.expect(far.empty(), "string.local", where, far);
    return r;
}

}  // namespace wwqca
