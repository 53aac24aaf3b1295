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

#include "wwqca/models.h"

using namespace wwqca;

namespace {

void expect_catalog(const Lattice &l, int n) {
    Report r = verify_relation_catalog(l, ModelParams::make(n));
    for (const auto &f : r.failed()) {
        ADD_FAILURE() << f.check_id << " at " << f.location << ": " << f.residual;
    }
    EXPECT_TRUE(r.all_pass()) << l.describe() << " n=" << n;
}

}  // namespace

TEST(RelationCatalog, TorusLevelOne) {
    expect_catalog(Lattice::torus(3, 3, 3), 1);
}

TEST(RelationCatalog, SlabLevelOne) {
    expect_catalog(Lattice::slab(4, 4, 0), 1);
    expect_catalog(Lattice::slab(4, 4, 1), 1);
}

TEST(RelationCatalog, TorusLevelTwo) {
    expect_catalog(Lattice::torus(3, 3, 3), 2);
}

TEST(Model, CubeProductIsVertexSquared) {
    Lattice l = Lattice::torus(3, 3, 3);
    ModelParams p = ModelParams::make(1);
    Model m(l, p);
    const Cube &c = l.cube(0);
    PauliOp prod(p);
    for (int q : c.far_faces) {
        prod *= m.btilde(q);
    }
    for (int q : c.near_faces) {
        prod *= m.btilde(q).dagger();
    }
    EXPECT_EQ(prod, m.vertex(c.vertex1).pow(2));
}

TEST(Model, BtildeSquaredIsProductOfBosonHops) {
    Lattice l = Lattice::torus(3, 3, 3);
    ModelParams p = ModelParams::make(1);
    Model m(l, p);
    for (int q = 0; q < 6; q++) {
        PauliOp c(p);
        for (int e : l.plaquette(q).edges) {
            c *= m.boson_hop(e);
        }
        EXPECT_EQ(m.btilde(q).pow(2), c) << q;
    }
}

TEST(Model, BosonHopAnticommutesWithEndpointVertices) {
    Lattice l = Lattice::torus(3, 3, 3);
    ModelParams p = ModelParams::make(1);
    Model m(l, p);
    const Edge &e = l.edge(5);
    EXPECT_EQ(comm_exponent(m.boson_hop(5), m.vertex(e.tail)), p.N);
    EXPECT_EQ(comm_exponent(m.boson_hop(5), m.vertex(e.head)), p.N);
}

TEST(Model, FlipperExchangePhase) {
    for (int n = 1; n <= 2; n++) {
        ModelParams p = ModelParams::make(n);
        Lattice l = Lattice::torus(3, 3, 3);
        Model m(l, p);
        for (int q = 0; q < 3; q++) {
            // F B = e^{2 pi i/N} B F
            EXPECT_EQ(m.flipper(q) * m.btilde(q), (m.btilde(q) * m.flipper(q)).with_phase(4)) << n;
        }
    }
}

TEST(Model, TermsCommute) {
    Lattice l = Lattice::slab(4, 4, 1);
    Model m(l, ModelParams::make(1));
    for (ModelId id : {ModelId::HWW, ModelId::HtildeWW, ModelId::Hcond}) {
        auto h = m.hamiltonian(id);
        for (size_t i = 0; i < h.size(); i++) {
            for (size_t j = i + 1; j < h.size(); j++) {
                ASSERT_EQ(comm_exponent(h[i], h[j]), 0) << model_name(id) << " " << i << " " << j;
            }
        }
    }
    EXPECT_THROW(m.hamiltonian(ModelId::H1family), UsageError);
}

TEST(Model, NamesAndErrors) {
    EXPECT_EQ(parse_model_id("htww"), ModelId::HtildeWW);
    EXPECT_THROW(parse_model_id("toric"), UsageError);
    EXPECT_EQ(parse_operator_kind("F_p"), OperatorKind::F_p);
    Model m(Lattice::torus(3, 3, 3), ModelParams::make(1));
    EXPECT_THROW(m.make(OperatorKind::A_v, 1000), UsageError);
    EXPECT_THROW(m.hop(0, 13), UsageError);
}
