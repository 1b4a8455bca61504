// Copyright 2026 The djpart Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "djpart/errors.hpp"

using djpart::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(DJPART_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, MachineShow) {
    const Result r = invoke({"machine", "show", "--qr", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("MAIN MEMORY"), std::string::npos);
    EXPECT_NE(r.out.find("V8 : "), std::string::npos);
    EXPECT_EQ(r.out.find("V9 : "), std::string::npos);
}

TEST(Cli, QrOutOfRangeIsUsageError) {
    EXPECT_EQ(invoke({"machine", "show", "--qr", "9"}).code, 1);
    EXPECT_EQ(invoke({"machine", "show", "--qr", "0"}).code, 1);
    EXPECT_EQ(invoke({"bogus"}).code, 1);
}

TEST(Cli, DjConstantAndBalanced) {
    EXPECT_EQ(invoke({"dj", "--n", "3", "--oracle", "constant1"}).out, "constant\n");
    EXPECT_EQ(invoke({"dj", "--n", "3", "--oracle", "constant0"}).out, "constant\n");
    EXPECT_EQ(invoke({"dj", "--n", "3", "--oracle", "mask:4"}).out, "balanced, states: 100\n");
    EXPECT_EQ(invoke({"dj", "--n", "2", "--oracle", "table:1010"}).out, "balanced, states: 01\n");
}

TEST(Cli, DjPromiseViolationIsLabelled) {
    const Result r = invoke({"dj", "--n", "2", "--oracle", "table:1000"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(promise violated)"), std::string::npos);
}

TEST(Cli, DjMatrixRows) {
    const Result r = invoke({"dj", "--n", "2", "--oracle", "constant1", "--show-matrix"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(Cli, DjMalformedOracle) {
    EXPECT_EQ(invoke({"dj", "--n", "2", "--oracle", "table:10"}).code, 1);
    EXPECT_EQ(invoke({"dj", "--n", "2", "--oracle", "mask:x"}).code, 1);
    EXPECT_EQ(invoke({"dj", "--n", "2", "--oracle", "nope"}).code, 1);
}

TEST(Cli, PartitionWorkedExample) {
    const Result r = invoke({"partition", "--input", data("worked_example.txt")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1 0 0 0 1 0 0 1 0 0\nparts: 3\n");
}

TEST(Cli, ReduceWorkedExample) {
    const Result r = invoke({"reduce", "--input", data("worked_example.txt"), "--op", "sum"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "620 530 300\n");
    EXPECT_EQ(invoke({"reduce", "--input", data("single_row.txt"), "--op", "max"}).out, "7\n");
}

TEST(Cli, ReduceWithExplicitVector) {
    const Result r =
        invoke({"reduce", "--input", data("values_only.txt"), "--op", "product", "--pv", "1 0 0 0 1 0 1 1 0 0"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "12 2 7 10\n");
}

TEST(Cli, DataErrors) {
    EXPECT_EQ(invoke({"reduce", "--input", data("values_only.txt"), "--op", "sum"}).code, 2);
    EXPECT_EQ(invoke({"reduce", "--input", data("values_only.txt"), "--op", "sum", "--pv", "0 1"}).code, 2);
    EXPECT_EQ(invoke({"reduce", "--input", data("noncontiguous.txt"), "--op", "sum"}).code, 2);
    EXPECT_EQ(invoke({"partition", "--input", data("mixed_bins.txt")}).code, 2);
    EXPECT_EQ(invoke({"partition", "--input", data("does_not_exist.txt")}).code, 2);
    EXPECT_EQ(invoke({"reduce", "--input", data("worked_example.txt"), "--op", "mean"}).code, 1);
}

TEST(Cli, CapacityErrors) {
    EXPECT_EQ(invoke({"partition", "--input", data("too_many_rows.txt")}).code, 3);
    EXPECT_EQ(invoke({"reduce", "--input", data("worked_example.txt"), "--op", "sum", "--qr", "1"}).code, 3);
}

TEST(Cli, FailureWritesNothingToStdout) {
    const Result r = invoke({"partition", "--input", data("too_many_rows.txt")});
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, DemoSelfCheck) {
    const Result r = invoke({"demo"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("self-check: pass"), std::string::npos);
    EXPECT_NE(r.out.find(slurp(DJPART_GOLDEN_DIR "/worked_example_dump.txt")), std::string::npos);
    EXPECT_EQ(r.out.rfind("QUERY REGISTER IN 0 STATE\nQUERY REGISTER IN 0 STATE\nQUERY REGISTER IN 0 STATE\n620 530 300\n", 0),
              0U);
}

TEST(Cli, DemoCorruptedExpectationFails) {
    const Result r = invoke({"demo", "--corrupt-expectation"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("self-check failed"), std::string::npos);
}

TEST(Cli, AsciiMarker) {
    const Result r = invoke({"partition", "--input", data("worked_example.txt"), "--show-machine", "--ascii"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("\xe2\x8a\x97"), std::string::npos);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"reduce", "--input", data("worked_example.txt"), "--op", "sum",
                                        "--show-machine"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(ParseInput, Forms) {
    std::istringstream two("# c\nA 1\nA 2.5\n\nB -3\n");
    const auto in = djpart::cli::parse_input(two);
    EXPECT_EQ(in.bins.size(), 3U);
    EXPECT_EQ(in.values[1].to_string(), "2.5");
    std::istringstream one("4\n5\n");
    EXPECT_FALSE(djpart::cli::parse_input(one).has_bins());
    std::istringstream ragged("A 1\n2\n");
    EXPECT_THROW((void)djpart::cli::parse_input(ragged), djpart::TypeError);
    std::istringstream empty("# nothing\n");
    EXPECT_THROW((void)djpart::cli::parse_input(empty), djpart::DomainError);
}
