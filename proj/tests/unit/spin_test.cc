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

#include "wwqca/error.h"
#include "wwqca/automorphism.h"
#include "wwqca/spin.h"

using namespace wwqca;

TEST(RootOfUnity, ExactText) {
    ModelParams p = ModelParams::make(1);  // units of pi/4
    EXPECT_EQ(root_of_unity(0, p), "1");
    EXPECT_EQ(root_of_unity(2, p), "i");
    EXPECT_EQ(root_of_unity(4, p), "-1");
    EXPECT_EQ(root_of_unity(6, p), "-i");
    EXPECT_EQ(root_of_unity(-2, p), "-i");
    EXPECT_EQ(root_of_unity(1, p), "exp(i pi 1/4)");
    ModelParams q = ModelParams::make(2);  // units of pi/8
    EXPECT_EQ(root_of_unity(1, q), "exp(i pi 1/8)");
    EXPECT_EQ(root_of_unity(2, q), "exp(i pi 1/4)");
    EXPECT_EQ(root_of_unity(14, q), "exp(i pi 7/4)");
}

TEST(BoundarySpin, UpperPlaneIsThetaBothModels) {
    for (int n = 1; n <= 3; n++) {
        ModelParams p = ModelParams::make(n);
        Lattice slab = Lattice::slab(4, 4, 1);
        // theta = e^{i pi/N}: exponent 2 in units pi/(2N).
        EXPECT_EQ(boundary_spin(SpinModel::Cond, slab, p, Plane::U), 2) << "n=" << n;
        EXPECT_EQ(boundary_spin(SpinModel::H1, slab, p, Plane::U), 2) << "n=" << n;
    }
}

TEST(BoundarySpin, LowerPlaneIsConjugate) {
    for (int n = 1; n <= 3; n++) {
        ModelParams p = ModelParams::make(n);
        Lattice slab = Lattice::slab(4, 4, 1);
        EXPECT_EQ(boundary_spin(SpinModel::Cond, slab, p, Plane::L), p.P - 2) << "n=" << n;
        EXPECT_EQ(boundary_spin(SpinModel::H1, slab, p, Plane::L), p.P - 2) << "n=" << n;
    }
}

TEST(BoundarySpin, IndependentOfStringLength) {
    ModelParams p = ModelParams::make(2);
    Lattice slab = Lattice::slab(6, 6, 1);
    for (int len = 1; len <= 2; len++) {
        EXPECT_EQ(boundary_spin(SpinModel::Cond, slab, p, Plane::U, len), 2);
        EXPECT_EQ(boundary_spin(SpinModel::H1, slab, p, Plane::U, len), 2);
    }
}

TEST(BoundarySpin, ThetaForNOneIsI) {
    ModelParams p = ModelParams::make(1);
    EXPECT_EQ(root_of_unity(boundary_spin(SpinModel::H1, Lattice::slab(4, 4, 1), p, Plane::U), p), "i");
}

TEST(CanonicalPaths, Shape) {
    Lattice slab = Lattice::slab(5, 5, 1);
    StringPaths sp = canonical_paths(slab, Plane::U, 2);
    ASSERT_EQ(sp.w1.size(), 3u);
    EXPECT_EQ(sp.w1[0], sp.w2[0]);
    EXPECT_EQ(sp.w1[0], sp.w3[0]);
    EXPECT_EQ(slab.vertex(sp.w1[0])[2], 1);
    EXPECT_EQ(canonical_paths(slab, Plane::L, 1).w2[1], *slab.vertex_id({0, 1, 0}));
    EXPECT_THROW(canonical_paths(Lattice::slab(4, 4, 1), Plane::U, 2), UsageError);
    EXPECT_THROW(canonical_paths(Lattice::torus(5, 5, 5), Plane::U, 1), UsageError);
}

TEST(TopologicalSpin, NonScalarProductThrows) {
    auto reg = std::make_shared<Register>(ModelParams::make(1));
    reg->add_site(2);
    RegisterPtr r = reg;
    // X S X S^dagger = i Z is not a scalar.
    PhaseTableOp s = gate(r, GateKind::S, {0}), x = gate(r, GateKind::X, {0});
    EXPECT_THROW(topological_spin(s, x, PhaseTableOp(r)), GeometryError);
    EXPECT_EQ(topological_spin(x, x, x), 0);
}

namespace {

std::string failures_of(const Report &r) {
    std::string s;
    for (const auto &f : r.failed()) {
        s += f.check_id + " @ " + f.location + ": " + f.residual + "\n";
    }
    return s;
}

std::vector<int> straight_path(const Lattice &l, int z, int length) {
    std::vector<int> path;
    for (int k = 0; k <= length; k++) {
        path.push_back(*l.vertex_id({k, 0, z}));
    }
    return path;
}

}  // namespace

TEST(Deconfinement, UpperBoundaryStringsExciteOnlyEndpoints) {
    for (int n = 1; n <= 2; n++) {
        ModelParams p = ModelParams::make(n);
        Lattice slab = Lattice::slab(11, 5, 1);
        Model m(slab, p);
        for (ModelId id : {ModelId::HWW, ModelId::HtildeWW, ModelId::Hcond}) {
            for (int k = 1; k <= 5; k++) {
                Report r = certify_deconfinement(m, id, straight_path(slab, 1, k), false);
                EXPECT_TRUE(r.all_pass()) << "n=" << n << " len=" << k << "\n" << failures_of(r);
            }
        }
    }
}

TEST(Deconfinement, LowerBoundaryCondensedStrings) {
    Lattice slab = Lattice::slab(11, 5, 1);
    Model m(slab, ModelParams::make(1));
    for (int k = 1; k <= 5; k++) {
        Report r = certify_deconfinement(m, ModelId::Hcond, straight_path(slab, 0, k), true);
        EXPECT_TRUE(r.all_pass()) << "len=" << k << "\n" << failures_of(r);
    }
}

TEST(Deconfinement, BulkStringsLeaveATrail) {
    // Away from the boundary the hop string excites plaquette terms along its length.
    Lattice torus = Lattice::torus(11, 5, 5);
    Model m(torus, ModelParams::make(1));
    for (ModelId id : {ModelId::HWW, ModelId::HtildeWW}) {
        Report r = certify_deconfinement(m, id, straight_path(torus, 0, 5), false);
        EXPECT_FALSE(r.all_pass());
        for (const auto &f : r.failed()) {
            EXPECT_EQ(f.check_id, "string.local");
        }
    }
}

TEST(Deconfinement, RejectsH1Family) {
    Lattice slab = Lattice::slab(4, 4, 1);
    EXPECT_THROW(labeled_terms(Model(slab, ModelParams::make(1)), ModelId::H1family), UsageError);
}

TEST(SpinParsing, Names) {
    EXPECT_EQ(parse_plane("U"), Plane::U);
    EXPECT_EQ(parse_plane("l"), Plane::L);
    EXPECT_EQ(parse_spin_model("h1"), SpinModel::H1);
    EXPECT_THROW(parse_plane("Q"), UsageError);
    EXPECT_THROW(parse_spin_model("x"), UsageError);
}
