// Copyright 2026 The Quopath Authors
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

#include "quopath/cli.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace quopath {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "quopath");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    std::string write(const std::string &name, const std::string &text) {
        auto path = std::filesystem::temp_directory_path() / ("quopath_cli_test_" + name);
        std::ofstream(path) << text;
        paths_.push_back(path);
        return path.string();
    }
    void TearDown() override {
        for (const auto &p : paths_) {
            std::filesystem::remove(p);
        }
    }
    std::vector<std::filesystem::path> paths_;
};

const char *kExample = "p 3\nn 3\nR 0\nF 1\nSUM 0 1\nF 2\nF 0\nSUM 1 2\nF 0\nF 1\nF 2\n";

TEST_F(CliTest, AmpSingleFourier) {
    auto f = write("f.qc", "p 3\nn 1\nF 0\n");
    Result r = run({"amp", "-c", f, "-a", "0", "-b", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3^(-1/2) * i^0 * chi(0)\n0.577350+0.000000i\n");
}

TEST_F(CliTest, ProbAndJson) {
    auto f = write("f5.qc", "p 5\nn 1\nF 0\n");
    Result r = run({"prob", "-c", f, "-a", "2", "-b", "3"});
    EXPECT_EQ(r.out, "1/5\n0.200000\n");
    r = run({"amp", "-c", f, "-a", "2", "-b", "3", "--json"});
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["amplitude"]["k"], -1);
    EXPECT_EQ(j["amplitude"]["c"], 1);
    EXPECT_EQ(j["probability"]["num"], 1);
    EXPECT_EQ(j["probability"]["den"], 5);
    EXPECT_EQ(j["alpha"], 0);
    EXPECT_EQ(j["z_size"], 0);
}

TEST_F(CliTest, TableSumsToOne) {
    auto f = write("example.qc", kExample);
    Result r = run({"table", "-c", f, "-a", "0,1,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# total probability = 1\n"), std::string::npos);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 29);
}

TEST_F(CliTest, Weight) {
    auto f = write("example_w.qc", kExample);
    Result r = run({"weight", "-c", f});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("alpha = 3"), std::string::npos);
    EXPECT_EQ(r.out.rfind("weight = 3^(", 0), 0u);
}

TEST_F(CliTest, CheckIsDeterministic) {
    auto f = write("example_c.qc", kExample);
    Result first = run({"check", "-c", f, "--trials", "20", "--seed", "7"});
    Result second = run({"check", "-c", f, "--trials", "20", "--seed", "7"});
    EXPECT_EQ(first.code, 0);
    EXPECT_EQ(first.out, second.out);
    EXPECT_NE(first.out.find("max |closed_form - dense| = "), std::string::npos);
    EXPECT_NE(first.out.find("< 1e-9"), std::string::npos);
}

TEST_F(CliTest, ExplainSections) {
    auto f = write("example_e.qc", kExample);
    Result r = run({"amp", "-c", f, "-a", "1,1,1", "-b", "1,1,1", "--explain"});
    EXPECT_EQ(r.code, 0);
    for (const char *section : {"symbolic labels:", "S(x) = ", "Theta =", "L =", "eta = ", "diagonal = ", "X = "}) {
        EXPECT_NE(r.out.find(section), std::string::npos) << section;
    }
}

TEST_F(CliTest, Normalize) {
    auto f = write("r.qc", "p 3\nn 1\nR 0\n");
    Result r = run({"normalize", "-c", f});
    EXPECT_EQ(r.out, "p 3\nn 1\nR 0\nF 0\nF 0\nF 0\nF 0\n");
}

TEST_F(CliTest, Errors) {
    auto bad = write("bad.qc", "p 4\nn 1\nF 0\n");
    Result r = run({"amp", "-c", bad, "-a", "0", "-b", "0"});
    EXPECT_EQ(r.code, kExitInvalid);
    EXPECT_NE(r.err.find("line 1"), std::string::npos);
    auto f = write("ok.qc", "p 3\nn 2\nF 0\nF 1\n");
    EXPECT_EQ(run({"amp", "-c", f, "-a", "0", "-b", "0,0"}).code, kExitInvalid);
    EXPECT_EQ(run({"amp", "-c", f, "-a", "0,3", "-b", "0,0"}).code, kExitInvalid);
    EXPECT_EQ(run({"amp", "-c", "/nonexistent.qc", "-a", "0", "-b", "0"}).code, kExitInvalid);
    EXPECT_EQ(run({"bogus"}).code, kExitInvalid);
    auto big = write("big.qc", "p 3\nn 12\nF 0\n");
    EXPECT_EQ(run({"table", "-c", big, "-a", "0,0,0,0,0,0,0,0,0,0,0,0"}).code, kExitCapExceeded);
    EXPECT_EQ(run({"check", "-c", big}).code, kExitCapExceeded);
}

TEST(ParseTuple, Forms) {
    OddPrime p(5);
    EXPECT_EQ(parse_tuple("0,2, 4", p, 3), (std::vector<uint32_t>{0, 2, 4}));
    EXPECT_THROW(parse_tuple("0,,1", p, 3), std::invalid_argument);
    EXPECT_THROW(parse_tuple("0,5", p, 2), std::invalid_argument);
    EXPECT_THROW(parse_tuple("-1", p, 1), std::invalid_argument);
}

TEST(Format, Decimal) {
    EXPECT_EQ(format_decimal(-0.0), "0.000000");
    EXPECT_EQ(format_decimal(-1e-12), "0.000000");
    EXPECT_EQ(format_complex({0.5, -0.25}), "0.500000-0.250000i");
    EXPECT_EQ(format_complex({-1.0, -1e-17}), "-1.000000+0.000000i");
}

}  // namespace
}  // namespace quopath
