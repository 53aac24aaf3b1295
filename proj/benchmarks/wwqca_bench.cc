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

#include <benchmark/benchmark.h>

#include "wwqca/automorphism.h"
#include "wwqca/models.h"
#include "wwqca/qca3f.h"
#include "wwqca/spin.h"
#include "wwqca/stabilizer.h"

using namespace wwqca;

namespace {

void BM_LaurentProduct(benchmark::State &state) {
    LaurentPoly a = LaurentPoly::parse("xyz + x/y + 1/y^2z + 3z + 1", 8);
    LaurentPoly b = LaurentPoly::parse("x^2 + 5xy/z + 7", 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_LaurentProduct);

void BM_PhaseTableCompose(benchmark::State &state) {
    SplitModel sm(Lattice::torus(3, 3, 3), ModelParams::make(static_cast<int>(state.range(0))));
    PhaseTableOp a = sm.bhat(0), b = sm.fhat(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_PhaseTableCompose)->DenseRange(1, 3);

void BM_DeriveBhat(benchmark::State &state) {
    SplitModel sm(Lattice::torus(3, 3, 3), ModelParams::make(static_cast<int>(state.range(0))));
    int p = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sm.bhat(p));
        p = (p + 1) % sm.lattice().num_plaquettes();
    }
}
BENCHMARK(BM_DeriveBhat)->DenseRange(1, 3);

void BM_GsdCondensedSlab(benchmark::State &state) {
    Lattice slab = Lattice::slab(4, 4, 1);
    ModelParams p = ModelParams::make(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsd(ModelId::Hcond, slab, p));
    }
}
BENCHMARK(BM_GsdCondensedSlab)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_GsdWalkerWangTorus(benchmark::State &state) {
    int L = static_cast<int>(state.range(0));
    Lattice torus = Lattice::torus(L, L, L);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsd(ModelId::HWW, torus, ModelParams::make(1)));
    }
}
BENCHMARK(BM_GsdWalkerWangTorus)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_BoundarySpinSplit(benchmark::State &state) {
    Lattice slab = Lattice::slab(4, 4, 1);
    ModelParams p = ModelParams::make(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(boundary_spin(SpinModel::H1, slab, p, Plane::U));
    }
}
BENCHMARK(BM_BoundarySpinSplit)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Qca3fSquare(benchmark::State &state) {
    Qca3f q = Qca3f::load();
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_square_identity(q.matrix()));
    }
}
BENCHMARK(BM_Qca3fSquare)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
