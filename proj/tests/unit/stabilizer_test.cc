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
#include <set>

#include "wwqca/stabilizer.h"

using namespace wwqca;

namespace {

/// Size of the subgroup of (Z_{2^bits})^cols spanned by rows, by closure.
size_t closure_size(const std::vector<std::vector<int64_t>> &rows, size_t cols, int bits) {
    int64_t mod = int64_t{1} << bits;
    std::set<std::vector<int64_t>> seen{std::vector<int64_t>(cols, 0)};
    std::vector<std::vector<int64_t>> frontier{std::vector<int64_t>(cols, 0)};
    while (!frontier.empty()) {
        std::vector<std::vector<int64_t>> next;
        for (const auto &v : frontier) {
            for (const auto &r : rows) {
                std::vector<int64_t> w(cols);
                for (size_t c = 0; c < cols; c++) {
                    w[c] = mod_floor(v[c] + r[c], mod);
                }
                if (seen.insert(w).second) {
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace

TEST(DiagonalizePow2, MatchesClosureOnRandomMatrices) {
    std::mt19937_64 rng(20260101);
    for (int bits = 1; bits <= 3; bits++) {
        std::uniform_int_distribution<int64_t> entry(0, (int64_t{1} << bits) - 1);
        for (int t = 0; t < 40; t++) {
            size_t cols = bits == 3 ? 3 : 4;
            std::vector<std::vector<int64_t>> rows(1 + t % 4, std::vector<int64_t>(cols));
            for (auto &r : rows) {
                for (auto &x : r) {
                    x = entry(rng) * (t % 3 == 0 ? 2 : 1);
                }
            }
            Pow2Diagonal d = diagonalize_pow2(rows, cols, bits);
            EXPECT_EQ(d.span_order(), BigInt(closure_size(rows, cols, bits)));
            // Every reported relation really is one.
            for (const auto &rel : d.relations) {
                for (size_t c = 0; c < cols; c++) {
                    int64_t s = 0;
                    for (size_t i = 0; i < rows.size(); i++) {
                        s += rel[i] * rows[i][c];
                    }
                    EXPECT_EQ(mod_floor(s, int64_t{1} << bits), 0);
                }
            }
        }
    }
}

TEST(Gsd, WalkerWangTorusIsEight) {
    for (int L : {2, 3, 4}) {
        Lattice l = Lattice::torus(L, L, L);
        EXPECT_EQ(gsd(ModelId::HWW, l, ModelParams::make(1)).gsd, 8) << L;
        EXPECT_EQ(gsd(ModelId::HtildeWW, l, ModelParams::make(1)).gsd, 8) << L;
    }
}

TEST(Gsd, CondensedTorusIsOne) {
    EXPECT_EQ(gsd(ModelId::Hcond, Lattice::torus(3, 3, 3), ModelParams::make(1)).gsd, 1);
    EXPECT_EQ(gsd(ModelId::Hcond, Lattice::torus(3, 3, 3), ModelParams::make(2)).gsd, 1);
}

TEST(Gsd, CondensedSlabIsNSquared) {
    for (int n = 1; n <= 3; n++) {
        ModelParams p = ModelParams::make(n);
        for (int M : {0, 1}) {
            EXPECT_EQ(gsd(ModelId::Hcond, Lattice::slab(4, 4, M), p).gsd, BigInt(p.N * p.N)) << n << " " << M;
        }
    }
}

TEST(Gsd, NonCommutingTermsRejected) {
    ModelParams p = ModelParams::make(1);
    StabGroup g(p, 1, {PauliOp::x(p, 0), PauliOp::z(p, 0)});
    EXPECT_EQ(g.first_noncommuting_pair(), "0,1");
    StabGroup ok(p, 2, {PauliOp::x(p, 0), PauliOp::z(p, 1)});
    EXPECT_EQ(ok.first_noncommuting_pair(), "");
}

TEST(StabGroup, ScalarRelationDetected) {
    ModelParams p = ModelParams::make(1);
    // X0^2 and (-1) X0^2 generate -1.
    StabGroup g(p, 1, {PauliOp::x(p, 0, 2), PauliOp::x(p, 0, 2).with_phase(4)});
    EXPECT_FALSE(g.phase_consistent());
    StabGroup ok(p, 2, {PauliOp::x(p, 0, 2), PauliOp::z(p, 1)});
    EXPECT_TRUE(ok.phase_consistent());
    EXPECT_EQ(ok.order(), 8);
}

TEST(PhaseGroupOrder, ScalarsAndOrders) {
    ModelParams p = ModelParams::make(1);
    auto reg = std::make_shared<Register>(p);
    reg->add_site(2);
    reg->add_site(2);
    RegisterPtr r = reg;
    PhaseTableOp z0 = gate(r, GateKind::Z, {0}), z1 = gate(r, GateKind::Z, {1});
    auto g = phase_group_order({z0, z1, z0 * z1}, 2);
    EXPECT_EQ(g.order, 4);
    EXPECT_FALSE(g.has_scalar);
    auto bad = phase_group_order({z0, z0.with_phase(4)}, 2);
    EXPECT_TRUE(bad.has_scalar);
}
