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
#include "wwqca/models.h"
#include "wwqca/serialize.h"

using namespace wwqca;

TEST(Serialize, LaurentRoundTrip) {
    for (const char *s : {"0", "1", "xyz + x + 1/y^2z", "3x^2 - 1/z"}) {
        LaurentPoly p = LaurentPoly::parse(s, 8);
        EXPECT_EQ(laurent_from_json(to_json(p)), p) << s;
    }
}

TEST(Serialize, ModelVectorRoundTrip) {
    ModelParams params = ModelParams::make(2);
    SympVec v = SympVec::from_strings(params.D, {"1 + x", "0", "1/y", "2z", "0", "xyz"});
    EXPECT_EQ(symp_vec_from_json(to_json(v)), v);
}

TEST(Serialize, MatrixRoundTrip) {
    SympMatrix m = SympMatrix::identity(2, 4);
    m.at(0, 3) = LaurentPoly::parse("x + 1/z", 2);
    EXPECT_EQ(symp_matrix_from_json(to_json(m)), m);
}

TEST(Serialize, PauliRoundTrip) {
    ModelParams p = ModelParams::make(2);
    Lattice lat = Lattice::torus(3, 3, 3);
    Model m(lat, p);
    for (PauliOp op : {m.vertex(0), m.plaquette(5), m.hop(0, 1), PauliOp::scalar(p, 3)}) {
        EXPECT_EQ(pauli_from_json(to_json(op, lat), lat), op);
    }
}

TEST(Serialize, PhaseTableRoundTrip) {
    for (int n = 1; n <= 2; n++) {
        SplitModel sm(Lattice::torus(3, 3, 3), ModelParams::make(n));
        for (PhaseTableOp op : {sm.bhat(0), sm.fhat(3), sm.xhat(2), sm.ahat(1)}) {
            // The register is rebuilt, so compare the documents and the restored content.
            PhaseTableOp back = phase_table_from_json(to_json(op));
            EXPECT_EQ(to_json(back), to_json(op));
            EXPECT_EQ(back.shift(), op.shift());
            EXPECT_EQ(back.components(), op.components());
        }
    }
}

TEST(Serialize, MalformedInputIsAUsageError) {
    EXPECT_THROW(laurent_from_json("{"), UsageError);
    EXPECT_THROW(laurent_from_json("{\"modulus\": 2}"), UsageError);
    EXPECT_THROW(symp_vec_from_json("{\"modulus\": 2, \"size\": 3, \"entries\": [\"1\"]}"), UsageError);
    EXPECT_THROW(symp_matrix_from_json("{\"modulus\": 2, \"rows\": 2, \"cols\": 1, \"entries\": [[\"1\"]]}"),
                 UsageError);
    EXPECT_THROW(phase_table_from_json("{\"n\": 1, \"register\": [{\"modulus\": 2, \"label\": \"\"}], "
                                       "\"shift\": [], \"components\": [{\"sites\": [4], \"table\": [1]}]}"),
                 UsageError);
    Lattice lat = Lattice::torus(3, 3, 3);
    EXPECT_THROW(pauli_from_json("{\"D\": 6, \"phase_exp\": 0, \"factors\": []}", lat), UsageError);
}
