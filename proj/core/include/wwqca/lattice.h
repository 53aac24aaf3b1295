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

#ifndef WWQCA_LATTICE_H
#define WWQCA_LATTICE_H

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wwqca {

using Vec3 = std::array<int, 3>;

inline Vec3 operator+(const Vec3 &a, const Vec3 &b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 unit(int d) {
    Vec3 v{0, 0, 0};
    v[d] = 1;
    return v;
}

enum class Boundary { torus, slab };

struct Edge {
    Vec3 cell;  // tail vertex
    int dir;
    int tail;  // vertex ids
    int head;
};

/// Plaquette with base cell b and normal d. With d1 = d+1, d2 = d+2 (mod 3) the
/// corners are c0 = b, c1 = b+e_d1, c2 = b+e_d1+e_d2, c3 = b+e_d2. Vertex labels
/// 1..4 are c2, c3, c0, c1. The O edge leaves c2 along the normal.
struct Plaquette {
    Vec3 cell;
    int normal;
    std::array<Vec3, 4> corners;  // c0..c3, wrapped
    std::array<int, 4> corner_ids;
    std::array<int, 4> edges;  // (c0,d1), (c1,d2), (c3,d1), (c0,d2)
    std::optional<int> o_edge;
};

/// Elementary cube with base cell b. Vertex 1 is the far corner b+(1,1,1), vertex 8
/// is b; faces 1..3 touch vertex 1, faces 4..6 touch vertex 8.
struct Cube {
    Vec3 cell;
    int vertex1;
    int vertex8;
    std::array<int, 3> far_faces;   // plaquettes at b+e_d with normal d
    std::array<int, 3> near_faces;  // plaquettes at b with normal d
};

/// Cubic lattice: a three-torus, or a slab periodic in x and y with planes
/// z = 0 (L) through z = M (U). z-edges exist only below the top plane.
class Lattice {
   public:
    static Lattice torus(int lx, int ly, int lz);
    static Lattice slab(int lx, int ly, int m);

    Boundary boundary() const { return boundary_; }
    bool is_slab() const { return boundary_ == Boundary::slab; }
    const Vec3 &dims() const { return dims_; }  // for a slab dims()[2] = M + 1 planes
    int slab_m() const { return dims_[2] - 1; }
    int plane_size() const { return dims_[0] * dims_[1]; }
    std::string describe() const;

    /// Periodic reduction; nullopt when the point leaves a slab.
    std::optional<Vec3> wrap(const Vec3 &v) const;
    std::optional<int> vertex_id(const Vec3 &v) const;
    std::optional<int> edge_id(const Vec3 &cell, int dir) const;
    std::optional<int> plaquette_id(const Vec3 &cell, int normal) const;
    std::optional<int> cube_id(const Vec3 &cell) const;

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_plaquettes() const { return static_cast<int>(plaquettes_.size()); }
    int num_cubes() const { return static_cast<int>(cubes_.size()); }

    const Vec3 &vertex(int id) const { return vertices_[id]; }
    const Edge &edge(int id) const { return edges_[id]; }
    const Plaquette &plaquette(int id) const { return plaquettes_[id]; }
    const Cube &cube(int id) const { return cubes_[id]; }

    /// Edges touching a vertex (up to six on a slab boundary).
    std::vector<int> incident_edges(int vertex) const;
    /// Plaquettes containing an edge.
    std::vector<int> edge_plaquettes(int edge) const;

    bool in_lower(const Vec3 &v) const { return is_slab() && v[2] == 0; }
    bool in_upper(const Vec3 &v) const { return is_slab() && v[2] == slab_m(); }
    /// Plaquette lies entirely in the L or U plane.
    bool plaquette_in_lower(int p) const;
    bool plaquette_in_upper(int p) const;

   private:
    Lattice(Boundary b, Vec3 dims);
    int cell_index(const Vec3 &w) const;
    void build();

    Boundary boundary_;
    Vec3 dims_;
    std::vector<Vec3> vertices_;
    std::vector<Edge> edges_;
    std::vector<Plaquette> plaquettes_;
    std::vector<Cube> cubes_;
    std::vector<int> edge_index_;   // cell_index*3 + dir -> id or -1
    std::vector<int> plaq_index_;   // cell_index*3 + normal -> id or -1
    std::vector<int> cube_index_;   // cell_index -> id or -1
    std::vector<std::vector<int>> vertex_edges_;
    std::vector<std::vector<int>> edge_plaqs_;
};

}  // namespace wwqca

#endif
