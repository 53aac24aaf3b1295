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
#include "wwqca/qca3f.h"

using namespace wwqca;

namespace {

SympVec unit(size_t k) {
    SympVec v(2, 12);
    v[k] = LaurentPoly::constant(2, 1);
    return v;
}

LaurentPoly f2(const char *s) { return LaurentPoly::parse(s, 2); }

}  // namespace

TEST(Qca3fData, ChecksumAndLoad) {
    EXPECT_EQ(qca3f_data_checksum(), 0x93fea60ab6df76e1ULL);
    EXPECT_NO_THROW(Qca3f::load());
}

TEST(Qca3fData, Fnv1aKnownValues) {
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Qca3fData, SpotEntries) {
    Qca3f q = Qca3f::load();
    EXPECT_EQ(q.entry(Qca3fBlock::B1, 1, 1), f2("1"));
    EXPECT_TRUE(q.entry(Qca3fBlock::B1, 1, 2).is_zero());
    EXPECT_EQ(q.entry(Qca3fBlock::B1, 4, 1), f2("xyz + x"));
    EXPECT_EQ(q.entry(Qca3fBlock::F1, 4, 1), f2("xyz + x + yz + 1"));
    EXPECT_EQ(q.entry(Qca3fBlock::B2, 2, 1), f2("1/y^2z + 1/yz"));
    EXPECT_THROW(q.entry(Qca3fBlock::B1, 13, 1), UsageError);
    EXPECT_THROW(q.entry(Qca3fBlock::B1, 1, 0), UsageError);
}

TEST(Qca3f, SquaresToIdentityAndIsSymplectic) {
    Qca3f q = Qca3f::load();
    EXPECT_TRUE(verify_square_identity(q.matrix()));
    EXPECT_TRUE(verify_symplectic(q.matrix()));
    EXPECT_TRUE(verify_qca3f(q).all_pass());
}

TEST(Qca3f, IdentityPassesTheChecks) {
    SympMatrix id = SympMatrix::identity(2, 12);
    EXPECT_TRUE(verify_square_identity(id));
    EXPECT_TRUE(verify_symplectic(id));
    EXPECT_EQ(propagation_radius(id), 0);
}

TEST(Qca3f, PlantedDefectsAreCaught) {
    Qca3f perturbed = Qca3f::load();
    perturbed.entry(Qca3fBlock::B1, 4, 1) += f2("x");
    EXPECT_FALSE(verify_square_identity(perturbed.matrix()));
    EXPECT_FALSE(verify_qca3f(perturbed).all_pass());

    Qca3f swapped = Qca3f::load();
    for (int r = 1; r <= 12; r++) {
        std::swap(swapped.entry(Qca3fBlock::F1, r, 1), swapped.entry(Qca3fBlock::F1, r, 2));
    }
    EXPECT_FALSE(verify_symplectic(swapped.matrix()));
}

TEST(Qca3f, PropagationRadiusIsTwo) {
    Qca3f q = Qca3f::load();
    EXPECT_EQ(propagation_radius(q.matrix()), 2);
}

TEST(Qca3f, ApplyIsAnInvolution) {
    Qca3f q = Qca3f::load();
    for (size_t k = 0; k < 12; k++) {
        SympVec img = apply(q, unit(k));
        for (size_t r = 0; r < 12; r++) {
            EXPECT_EQ(img[r], q.matrix().at(r, k));
        }
        EXPECT_EQ(apply(q, img), unit(k));
    }
    EXPECT_TRUE(apply(q, SympVec(2, 12)).is_zero());
    EXPECT_THROW(apply(q, SympVec(2, 6)), UsageError);
    EXPECT_THROW(apply(q, SympVec(3, 12)), UsageError);
}

TEST(Qca3f, VectorParsing) {
    std::string text = "# Z on the first x qubit\n1\n0\n0\n0\n0\n0\n0\n0\n0\n0\n0\n0\n";
    SympVec v = parse_qca3f_vector(text);
    EXPECT_EQ(v, unit(0));
    EXPECT_THROW(parse_qca3f_vector("1\n0\n"), UsageError);
}

TEST(Qca3f, ParseErrors) {
    EXPECT_THROW(Qca3f::parse("[B1]\n1 | 0\n"), UsageError);
    EXPECT_THROW(Qca3f::parse("[B1]\n"), UsageError);
    EXPECT_THROW(Qca3f::parse("[Q]\n"), UsageError);
    EXPECT_THROW(Qca3f(SympMatrix::identity(2, 6)), UsageError);
    EXPECT_THROW(Qca3f(SympMatrix::identity(4, 12)), UsageError);
}
