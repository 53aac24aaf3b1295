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

#include "wwqca/lattice.h"

#include <sstream>

#include "wwqca/error.h"

namespace wwqca {

Lattice::Lattice(Boundary b, Vec3 dims) : boundary_(b), dims_(dims) {
}

Lattice Lattice::torus(int lx, int ly, int lz) {
    if (lx < 2 || ly < 2 || lz < 2) {
        throw UsageError("torus dimensions must be at least 2 (got " + std::to_string(lx) + "x" +
                         std::to_string(ly) + "x" + std::to_string(lz) + ")");
    }
    Lattice l(Boundary::torus, {lx, ly, lz});
    l.build();
    return l;
}

Lattice Lattice::slab(int lx, int ly, int m) {
    if (lx < 2 || ly < 2 || lx * ly < 4 || m < 0) {
        throw UsageError("slab needs Lx, Ly >= 2, Lx*Ly >= 4 and M >= 0");
    }
    Lattice l(Boundary::slab, {lx, ly, m + 1});
    l.build();
    return l;
}

std::string Lattice::describe() const {
    std::ostringstream out;
    if (is_slab()) {
        out << "slab " << dims_[0] << "x" << dims_[1] << " M=" << slab_m();
    } else {
        out << "torus " << dims_[0] << "x" << dims_[1] << "x" << dims_[2];
    }
    return out.str();
}

std::optional<Vec3> Lattice::wrap(const Vec3 &v) const {
    Vec3 w;
    for (int k = 0; k < 3; k++) {
        int L = dims_[k];
        if (k == 2 && is_slab()) {
            if (v[2] < 0 || v[2] >= L) {
                return std::nullopt;
            }
            w[2] = v[2];
        } else {
            w[k] = ((v[k] % L) + L) % L;
        }
    }
    return w;
}

int Lattice::cell_index(const Vec3 &w) const {
    return (w[0] * dims_[1] + w[1]) * dims_[2] + w[2];
}

std::optional<int> Lattice::vertex_id(const Vec3 &v) const {
    auto w = wrap(v);
    if (!w) {
        return std::nullopt;
    }
    return cell_index(*w);
}

std::optional<int> Lattice::edge_id(const Vec3 &cell, int dir) const {
    auto w = wrap(cell);
    if (!w) {
        return std::nullopt;
    }
    int id = edge_index_[cell_index(*w) * 3 + dir];
    if (id < 0) {
        return std::nullopt;
    }
    return id;
}

std::optional<int> Lattice::plaquette_id(const Vec3 &cell, int normal) const {
    auto w = wrap(cell);
    if (!w) {
        return std::nullopt;
    }
    int id = plaq_index_[cell_index(*w) * 3 + normal];
    if (id < 0) {
        return std::nullopt;
    }
    return id;
}

std::optional<int> Lattice::cube_id(const Vec3 &cell) const {
    auto w = wrap(cell);
    if (!w) {
        return std::nullopt;
    }
    int id = cube_index_[cell_index(*w)];
    if (id < 0) {
        return std::nullopt;
    }
    return id;
}

void Lattice::build() {
    int ncell = dims_[0] * dims_[1] * dims_[2];
    vertices_.resize(ncell);
    for (int i = 0; i < dims_[0]; i++) {
        for (int j = 0; j < dims_[1]; j++) {
            for (int k = 0; k < dims_[2]; k++) {
                Vec3 v{i, j, k};
                vertices_[cell_index(v)] = v;
            }
        }
    }
    edge_index_.assign(ncell * 3, -1);
    for (int c = 0; c < ncell; c++) {
        const Vec3 &v = vertices_[c];
        for (int d = 0; d < 3; d++) {
            auto head = vertex_id(v + unit(d));
            if (!head) {
                continue;
            }
            edge_index_[c * 3 + d] = static_cast<int>(edges_.size());
            edges_.push_back(Edge{v, d, c, *head});
        }
    }
    plaq_index_.assign(ncell * 3, -1);
    for (int c = 0; c < ncell; c++) {
        const Vec3 &b = vertices_[c];
        for (int d = 0; d < 3; d++) {
            int d1 = (d + 1) % 3, d2 = (d + 2) % 3;
            Plaquette p;
            p.cell = b;
            p.normal = d;
            std::array<Vec3, 4> raw{b, b + unit(d1), b + unit(d1) + unit(d2), b + unit(d2)};
            bool ok = true;
            for (int k = 0; k < 4; k++) {
                auto w = wrap(raw[k]);
                if (!w) {
                    ok = false;
                    break;
                }
                p.corners[k] = *w;
                p.corner_ids[k] = cell_index(*w);
            }
            if (!ok) {
                continue;
            }
            auto e0 = edge_id(raw[0], d1), e1 = edge_id(raw[1], d2);
            auto e2 = edge_id(raw[3], d1), e3 = edge_id(raw[0], d2);
            if (!e0 || !e1 || !e2 || !e3) {
                continue;
            }
            p.edges = {*e0, *e1, *e2, *e3};
            p.o_edge = edge_id(raw[2], d);
            plaq_index_[c * 3 + d] = static_cast<int>(plaquettes_.size());
            plaquettes_.push_back(p);
        }
    }
    cube_index_.assign(ncell, -1);
    for (int c = 0; c < ncell; c++) {
        const Vec3 &b = vertices_[c];
        Cube cube;
        cube.cell = b;
        bool ok = true;
        for (int d = 0; d < 3; d++) {
            auto nf = plaquette_id(b, d);
            auto ff = plaquette_id(b + unit(d), d);
            if (!nf || !ff) {
                ok = false;
                break;
            }
            cube.near_faces[d] = *nf;
            cube.far_faces[d] = *ff;
        }
        auto v1 = vertex_id(b + Vec3{1, 1, 1});
        if (!ok || !v1) {
            continue;
        }
        cube.vertex1 = *v1;
        cube.vertex8 = c;
        cube_index_[c] = static_cast<int>(cubes_.size());
        cubes_.push_back(cube);
    }
    vertex_edges_.assign(ncell, {});
    for (int e = 0; e < num_edges(); e++) {
        vertex_edges_[edges_[e].tail].push_back(e);
        if (edges_[e].head != edges_[e].tail) {
            vertex_edges_[edges_[e].head].push_back(e);
        }
    }
    edge_plaqs_.assign(num_edges(), {});
    for (int p = 0; p < num_plaquettes(); p++) {
        for (int e : plaquettes_[p].edges) {
            edge_plaqs_[e].push_back(p);
        }
    }
}

std::vector<int> Lattice::incident_edges(int vertex) const {
    return vertex_edges_[vertex];
}

std::vector<int> Lattice::edge_plaquettes(int edge) const {
    return edge_plaqs_[edge];
}

bool Lattice::plaquette_in_lower(int p) const {
    const auto &pl = plaquettes_[p];
    return is_slab() && pl.normal == 2 && pl.cell[2] == 0;
}

bool Lattice::plaquette_in_upper(int p) const {
    const auto &pl = plaquettes_[p];
    return is_slab() && pl.normal == 2 && pl.cell[2] == slab_m();
}

}  // namespace wwqca
