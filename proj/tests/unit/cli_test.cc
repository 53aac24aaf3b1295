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

#include <json.hpp>
#include <sstream>

#include "cli.h"
#include "wwqca/automorphism.h"
#include "wwqca/serialize.h"

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = wwqca::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SpinPrintsExactRoot) {
    CliRun r = run({"spin", "--model", "h1", "--n", "1", "--boundary", "U"});
    EXPECT_EQ(r.code, wwqca::cli::kOk) << r.err;
    EXPECT_NE(r.out.find("i"), std::string::npos);
    CliRun l = run({"spin", "--model", "cond", "--n", "2", "--boundary", "L"});
    EXPECT_EQ(l.code, 0) << l.err;
    EXPECT_NE(l.out.find("exp(i pi 7/4)"), std::string::npos);
}

TEST(Cli, GsdPrintsCount) {
    CliRun r = run({"gsd", "--model", "cond", "--n", "1", "--slab", "4", "4", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "4\n");
    CliRun h = run({"gsd", "--model", "h1", "--n", "2", "--slab", "4", "4", "1"});
    EXPECT_EQ(h.code, 0) << h.err;
    EXPECT_EQ(h.out, "16\n");
    CliRun t = run({"gsd", "--model", "h1", "--n", "1"});
    EXPECT_EQ(t.code, 0) << t.err;
    EXPECT_EQ(t.out, "1\n");
}

TEST(Cli, VerifyTextLines) {
    CliRun r = run({"verify", "--model", "hww", "--n", "1", "--torus", "3", "3", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("PASS ", 0), 0u);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, JsonOutputHasSchema) {
    CliRun r = run({"qca3f", "--check", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("command"), "qca3f");
    EXPECT_EQ(j.at("status"), "pass");
    ASSERT_TRUE(j.at("checks").is_array());
    for (const auto &c : j.at("checks")) {
        EXPECT_TRUE(c.contains("check_id"));
        EXPECT_TRUE(c.contains("location"));
        EXPECT_EQ(c.at("status"), "pass");
    }
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({"--bogus"}).code, wwqca::cli::kUsage);
    EXPECT_EQ(run({"spin"}).code, wwqca::cli::kUsage);
    EXPECT_EQ(run({"gsd", "--n", "9"}).code, wwqca::cli::kUsage);
    EXPECT_EQ(run({"spin", "--model", "h1", "--boundary", "Q"}).code, wwqca::cli::kUsage);
    EXPECT_EQ(run({"verify", "--model", "h1", "--format", "xml"}).code, wwqca::cli::kUsage);
}

TEST(Cli, MissingApplyFileFails) {
    CliRun r = run({"qca3f", "--apply", "/nonexistent/vector.txt"});
    EXPECT_NE(r.code, 0);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, DeriveExportsJson) {
    CliRun r = run({"derive", "--op", "bhat", "--p", "0", "--n", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    // The export is the operator document itself, readable by the library.
    wwqca::PhaseTableOp op = wwqca::phase_table_from_json(r.out);
    wwqca::SplitModel sm(wwqca::Lattice::torus(3, 3, 3), wwqca::ModelParams::make(1));
    EXPECT_EQ(op.components(), sm.bhat(0).components());
    EXPECT_EQ(op.shift(), sm.bhat(0).shift());
}
