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

#include "wwqca/error.h"
#include "wwqca/phase_ops.h"

using namespace wwqca;

namespace {

/// Register of small sites: moduli as given.
RegisterPtr make_reg(int n, const std::vector<int64_t> &moduli) {
    auto reg = std::make_shared<Register>(ModelParams::make(n));
    for (int64_t m : moduli) {
        reg->add_site(m);
    }
    return reg;
}

/// Random product of gates on a register with sites (N, 2, N).
PhaseTableOp random_op(std::mt19937_64 &rng, const RegisterPtr &r) {
    std::uniform_int_distribution<int> pick(0, 7), ph(0, 31);
    PhaseTableOp op = PhaseTableOp::scalar(r, ph(rng));
    for (int k = 0; k < 5; k++) {
        switch (pick(rng)) {
            case 0: op = gate(r, GateKind::X, {1}) * op; break;
            case 1: op = gate(r, GateKind::Z, {1}) * op; break;
            case 2: op = gate(r, GateKind::S, {1}) * op; break;
            case 3: op = gate(r, GateKind::Xhat, {0}) * op; break;
            case 4: op = gate(r, GateKind::Zhat, {2}) * op; break;
            case 5: op = gate(r, GateKind::Shat, {0}) * op; break;
            case 6: op = gate(r, GateKind::CZhat, {2, 1}) * op; break;
            default: op = gate(r, GateKind::Xhat, {2}).pow(3) * op; break;
        }
    }
    return op;
}

}  // namespace

TEST(PhaseTableOp, IdentitySXisIXSZ) {
    RegisterPtr r = make_reg(1, {2});
    PhaseTableOp S = gate(r, GateKind::S, {0}), X = gate(r, GateKind::X, {0}), Z = gate(r, GateKind::Z, {0});
    EXPECT_EQ(S * X, (X * S * Z).with_phase(2));
}

TEST(PhaseTableOp, IdentityCZXisXZCZ) {
    RegisterPtr r = make_reg(1, {2, 2});
    PhaseTableOp cz = gate(r, GateKind::CZ, {0, 1});
    PhaseTableOp x1 = gate(r, GateKind::X, {0}), z2 = gate(r, GateKind::Z, {1});
    EXPECT_EQ(cz * x1, x1 * z2 * cz);
}

TEST(PhaseTableOp, GatesMatchTextbookMatrices) {
    RegisterPtr r = make_reg(1, {2, 2});
    int64_t K = 4;  // zeta = e^{i pi/4}
    EXPECT_EQ(gate(r, GateKind::X, {0}).dense({0}), dense_gates::shift(K, 2));
    EXPECT_EQ(gate(r, GateKind::Z, {0}).dense({0}), dense_gates::clock(K, 2));
    EXPECT_EQ(gate(r, GateKind::S, {0}).dense({0}), dense_gates::diag_exponents(K, {0, 2}));
    EXPECT_EQ(gate(r, GateKind::CZ, {0, 1}).dense({0, 1}), dense_gates::diag_exponents(K, {0, 0, 0, 4}));
}

TEST(PhaseTableOp, DenseOracleOnRandomProducts) {
    for (int n = 1; n <= 2; n++) {
        ModelParams p = ModelParams::make(n);
        RegisterPtr r = make_reg(n, {p.N, 2, p.N});
        std::vector<int> order{0, 1, 2};
        std::mt19937_64 rng(20260101 + n);
        for (int t = 0; t < 25; t++) {
            PhaseTableOp a = random_op(rng, r), b = random_op(rng, r), c = random_op(rng, r);
            EXPECT_EQ((a * b).dense(order), a.dense(order) * b.dense(order));
            EXPECT_EQ(a.dagger().dense(order), a.dense(order).dagger());
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ((a * b).dagger(), b.dagger() * a.dagger());
            EXPECT_TRUE((a * a.dagger()).is_identity());
            EXPECT_EQ(a.pow(-1), a.dagger());
        }
    }
}

TEST(PhaseTableOp, HatGatesHaveOrderN) {
    for (int n = 1; n <= 3; n++) {
        ModelParams p = ModelParams::make(n);
        RegisterPtr r = make_reg(n, {p.N, 2});
        EXPECT_TRUE(gate(r, GateKind::Xhat, {0}).pow(p.N).is_identity());
        EXPECT_TRUE(gate(r, GateKind::Zhat, {0}).pow(p.N).is_identity());
        EXPECT_TRUE(gate(r, GateKind::CZhat, {0, 1}).pow(2).is_identity());
        EXPECT_EQ(gate(r, GateKind::Shat, {0}).pow(2), gate(r, GateKind::Zhat, {0}));
    }
}

TEST(PhaseTableOp, ScalarOf) {
    RegisterPtr r = make_reg(1, {2});
    EXPECT_EQ(PhaseTableOp(r).scalar_of(), 0);
    EXPECT_EQ(PhaseTableOp::scalar(r, 2).scalar_of(), 2);
    EXPECT_THROW(gate(r, GateKind::Z, {0}).scalar_of(), DefinitionError);
    EXPECT_THROW(gate(r, GateKind::X, {0}).scalar_of(), DefinitionError);
}

TEST(PhaseTableOp, Restrict) {
    RegisterPtr r = make_reg(1, {2, 2});
    PhaseTableOp zb = gate(r, GateKind::Z, {1});
    EXPECT_TRUE(zb.restrict({1}).is_identity());
    PhaseTableOp cz = gate(r, GateKind::CZ, {0, 1});
    EXPECT_TRUE(cz.restrict({1}).is_identity());
    EXPECT_THROW(gate(r, GateKind::X, {1}).restrict({1}), DefinitionError);
    PhaseTableOp z0 = gate(r, GateKind::Z, {0});
    EXPECT_EQ((z0 * zb).restrict({1}), z0);
}

TEST(Conjugate, CxMapsZTargetToZZ) {
    RegisterPtr r = make_reg(1, {2, 2});
    LinearPermutation cx;
    cx.add(0, 1);
    PhaseTableOp z0 = gate(r, GateKind::Z, {0}), z1 = gate(r, GateKind::Z, {1});
    PhaseTableOp x0 = gate(r, GateKind::X, {0}), x1 = gate(r, GateKind::X, {1});
    EXPECT_EQ(conjugate(z1, cx), z0 * z1);
    EXPECT_EQ(conjugate(x0, cx), x0 * x1);
    EXPECT_EQ(conjugate(x1, cx), x1);
    EXPECT_TRUE(conjugate(PhaseTableOp(r), cx).is_identity());
}

TEST(Conjugate, QuditControlledFlip) {
    for (int n = 1; n <= 2; n++) {
        ModelParams p = ModelParams::make(n);
        RegisterPtr r = make_reg(n, {p.N, 2});
        LinearPermutation cx;
        cx.add(0, 1);
        PhaseTableOp xa = gate(r, GateKind::Xhat, {0}), xb = gate(r, GateKind::X, {1});
        EXPECT_EQ(conjugate(xa, cx), xa * xb);
        // Dense oracle: g op g^dagger.
        std::vector<int> order{0, 1};
        DenseMatrix g = cx.dense(*r, order);
        PhaseTableOp cz = gate(r, GateKind::CZhat, {0, 1}) * gate(r, GateKind::Shat, {0});
        EXPECT_EQ(conjugate(cz, cx).dense(order), g * cz.dense(order) * g.dagger());
    }
}

TEST(Conjugate, RejectsNonHomomorphicCoefficients) {
    ModelParams p = ModelParams::make(2);
    RegisterPtr r = make_reg(2, {2, p.N});
    LinearPermutation bad;
    bad.add(0, 1);  // qubit controlling a Z_4 qudit is not linear
    EXPECT_THROW(conjugate(gate(r, GateKind::Zhat, {1}), bad), UsageError);
    LinearPermutation loop;
    loop.add(0, 1);
    EXPECT_THROW(loop.add(1, 0), UsageError);
}
