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

#include <gtest/gtest.h>

#include <random>

#include "wwqca/dense.h"
#include "wwqca/lattice.h"
#include "wwqca/models.h"
#include "wwqca/pauli.h"

using namespace wwqca;

namespace {

PauliOp random_pauli(std::mt19937_64 &rng, const ModelParams &p, int edges) {
    std::uniform_int_distribution<int64_t> ex(0, p.D - 1), ph(0, p.P - 1);
    std::uniform_int_distribution<int> e(0, edges - 1);
    PauliOp op = PauliOp::scalar(p, ph(rng));
    for (int k = 0; k < 3; k++) {
        int site = e(rng);
        op *= PauliOp::x(p, site, ex(rng)) * PauliOp::z(p, site, ex(rng));
    }
    return op;
}

/// Dense matrix of a Pauli operator on edges 0..k-1 (edge 0 most significant).
DenseMatrix dense_of(const PauliOp &op, int k) {
    const ModelParams &p = op.params();
    DenseMatrix m = DenseMatrix::identity(p.D, 1);
    for (int e = 0; e < k; e++) {
        DenseMatrix site = dense_gates::shift(p.D, p.D).pow(op.x_exp(e)) * dense_gates::clock(p.D, p.D).pow(op.z_exp(e));
        m = m.kron(site);
    }
    size_t dim = m.rows();
    std::vector<size_t> perm(dim);
    for (size_t i = 0; i < dim; i++) {
        perm[i] = i;
    }
    DenseMatrix phase = DenseMatrix::monomial(p.D, perm, std::vector<int64_t>(dim, op.phase()));
    return phase * m;
}

}  // namespace

TEST(ModelParams, ClockRelation) {
    for (int n = 1; n <= 4; n++) {
        ModelParams p = ModelParams::make(n);
        EXPECT_EQ(p.N, int64_t{1} << n);
        EXPECT_EQ(mod_floor(3 * p.m, p.D), p.D - 1) << n;
    }
    EXPECT_EQ(ModelParams::make(1).m, 1);
    EXPECT_EQ(ModelParams::make(2).m, 5);
}

TEST(PauliOp, ZXIsIXZ) {
    ModelParams p = ModelParams::make(1);
    PauliOp zx = PauliOp::z(p, 0) * PauliOp::x(p, 0);
    EXPECT_EQ(zx, (PauliOp::x(p, 0) * PauliOp::z(p, 0)).with_phase(2));
    EXPECT_EQ(comm_exponent(PauliOp::z(p, 0), PauliOp::x(p, 0)), 1);
}

TEST(PauliOp, DaggerAndPowers) {
    ModelParams p = ModelParams::make(2);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; t++) {
        PauliOp a = random_pauli(rng, p, 5);
        EXPECT_EQ(a.dagger().dagger(), a);
        EXPECT_TRUE((a * a.dagger()).is_identity());
        EXPECT_EQ(a.pow(3), a * a * a);
        EXPECT_EQ(a.pow(-2), a.dagger().pow(2));
    }
    EXPECT_TRUE(PauliOp::x(p, 2).pow(p.D).is_identity());
}

TEST(PauliOp, AssociativeAndMatchesDenseMatrices) {
    for (int n = 1; n <= 2; n++) {
        ModelParams p = ModelParams::make(n);
        std::mt19937_64 rng(100 + n);
        for (int t = 0; t < 20; t++) {
            PauliOp a = random_pauli(rng, p, 2), b = random_pauli(rng, p, 2), c = random_pauli(rng, p, 2);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(dense_of(a * b, 2), dense_of(a, 2) * dense_of(b, 2));
            int64_t k = comm_exponent(a, b);
            EXPECT_EQ(a * b, (b * a).with_phase(2 * k));
        }
    }
}

TEST(PauliOp, SemionHopSquaresToBosonHop) {
    ModelParams p = ModelParams::make(1);
    Model m(Lattice::torus(3, 3, 3), p);
    for (int e = 0; e < 9; e++) {
        EXPECT_EQ(m.semion_hop(e).pow(2), m.boson_hop(e)) << e;
    }
    ModelParams p2 = ModelParams::make(2);
    Model m2(Lattice::torus(3, 3, 3), p2);
    EXPECT_EQ(m2.semion_hop(4).pow(p2.N), m2.boson_hop(4));
}

TEST(Lattice, Counts) {
    Lattice t = Lattice::torus(3, 4, 5);
    EXPECT_EQ(t.num_vertices(), 60);
    EXPECT_EQ(t.num_edges(), 180);
    EXPECT_EQ(t.num_plaquettes(), 180);
    EXPECT_EQ(t.num_cubes(), 60);
    Lattice s = Lattice::slab(4, 4, 1);
    EXPECT_EQ(s.num_vertices(), 32);
    EXPECT_EQ(s.num_edges(), 16 * 2 * 2 + 16);
    EXPECT_TRUE(s.is_slab());
    EXPECT_FALSE(s.edge_id({0, 0, 1}, 2).has_value());
    EXPECT_EQ(s.incident_edges(*s.vertex_id({0, 0, 1})).size(), 5u);
}

TEST(Lattice, PlaquetteLabelsAndWrap) {
    Lattice t = Lattice::torus(3, 3, 3);
    EXPECT_EQ(*t.vertex_id({3, -1, 0}), *t.vertex_id({0, 2, 0}));
    Model m(t, ModelParams::make(1));
    int q = *t.plaquette_id({0, 0, 0}, 2);
    EXPECT_EQ(t.vertex(m.plaquette_vertex(q, 3)), (Vec3{0, 0, 0}));
    EXPECT_EQ(t.vertex(m.plaquette_vertex(q, 1)), (Vec3{1, 1, 0}));
    EXPECT_EQ(t.edge(*t.plaquette(q).o_edge).cell, (Vec3{1, 1, 0}));
    EXPECT_THROW(m.plaquette_vertex(q, 5), UsageError);
}

TEST(Instantiate, TranslationAndTruncation) {
    ModelParams p = ModelParams::make(1);
    Lattice t = Lattice::torus(4, 4, 4);
    Model m(t, p);
    PauliOp a = m.btilde(*t.plaquette_id({0, 0, 0}, 0));
    PauliOp b = m.btilde(*t.plaquette_id({1, 2, 3}, 0));
    EXPECT_EQ(a.weight(), b.weight());
    Lattice s = Lattice::slab(4, 4, 0);
    Model ms(s, p);
    EXPECT_LT(ms.btilde(*s.plaquette_id({0, 0, 0}, 2)).weight(), a.weight());
}
