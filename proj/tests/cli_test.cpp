// Copyright 2026 The metricdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace metricdim;

namespace
{
struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "metricdim");
    std::vector<const char *> argv;
    for (const auto & a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}
}

TEST(Cli, DimsHcMixed)
{
    auto r = run({"dims", "hc", "--a", "4", "--b", "4", "--c", "4", "--variant", "mixed", "--certify"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["value"], 3);
    EXPECT_EQ(j["certified"], true);
    EXPECT_EQ(j["status"], "found");
    EXPECT_FALSE(j.contains("metadata"));
}

TEST(Cli, DimsJsonIsByteIdentical)
{
    std::vector<std::string> args = {"dims", "sp", "--a", "3", "--b", "3", "--c", "3", "--variant", "edge", "--certify"};
    auto first = run(args);
    auto second = run(args);
    args.push_back("--threads");
    args.push_back("3");
    auto threaded = run(args);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.out, threaded.out);
}

TEST(Cli, VerifyIndependentMixed)
{
    auto r = run({"verify", "hc", "--a", "4", "--b", "4", "--c", "4", "--variant", "mixed", "--set", "p1:1,r1:1,p2:1",
                  "--independent"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("resolving: true"), std::string::npos);
    EXPECT_NE(r.out.find("independent: true"), std::string::npos);
}

TEST(Cli, VerifyReportsViolation)
{
    auto r = run({"verify", "hc", "--variant", "mixed", "--set", "p1:1", "--format", "json"});
    EXPECT_EQ(r.code, 1);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["resolving"], false);
    EXPECT_TRUE(j["violation"].is_object());
}

TEST(Cli, DimsSpMultisetWithTrail)
{
    auto r = run({"dims", "sp", "--a", "3", "--b", "3", "--c", "3", "--variant", "multiset", "--certify", "--cap", "6"});
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["certified"], true);
    EXPECT_FALSE(j["trail"].empty());
}

TEST(Cli, AuditExitCodes)
{
    EXPECT_EQ(run({"audit", "hc"}).code, 1);
    EXPECT_EQ(run({"audit", "hc", "--fixture"}).code, 0);
    auto j = Json::parse(run({"audit", "hc", "--format", "json"}).out);
    EXPECT_TRUE(j.contains("summary"));
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"dims", "hc", "--bogus"}).code, 2);
    EXPECT_EQ(run({"dims", "hc", "--a", "1"}).code, 2);
    EXPECT_EQ(run({"dims", "hc", "--variant", "nope"}).code, 2);
    EXPECT_EQ(run({"verify", "hc", "--set", "z9:1"}).code, 2);
    EXPECT_EQ(run({"verify", "hc", "--set", "p1:99"}).code, 2);
    EXPECT_EQ(run({"dims", "file"}).code, 2);
    EXPECT_EQ(run({"dims", "file", "--input", "/nonexistent/graph.txt"}).code, 2);
    EXPECT_EQ(run({"audit", "hc", "--fixture", "--a", "5"}).code, 2);
}

TEST(Cli, BudgetExceeded)
{
    auto r = run({"dims", "hc", "--variant", "mixed", "--certify", "--budget", "10"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(Json::parse(r.out)["status"], "budget_exceeded");
}

TEST(Cli, GenerateFormats)
{
    auto edges = run({"generate", "sp", "--a", "2", "--b", "2", "--c", "2"});
    EXPECT_EQ(edges.code, 0);
    std::istringstream in(edges.out);
    EXPECT_EQ(read_edge_list(in).size(), build_sp({2, 2, 2}).size());
    EXPECT_EQ(run({"generate", "hc", "--format", "dot"}).out.rfind("graph HC_4_4_4 {", 0), 0u);
    auto j = Json::parse(run({"generate", "hc", "--format", "json"}).out);
    EXPECT_EQ(j["validation"]["passed"], true);
    EXPECT_EQ(j["graph"]["order"], 72);
}

TEST(Cli, FileInputWithRawIds)
{
    auto path = std::filesystem::temp_directory_path() / "metricdim_cli_path5.txt";
    {
        std::ofstream f(path);
        f << "5 4\n0 1\n1 2\n2 3\n3 4\n";
    }
    auto r = run({"dims", "file", "--input", path.string(), "--variant", "multiset", "--certify"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["value"], 1);
    auto v = run({"verify", "file", "--input", path.string(), "--variant", "vertex", "--set", "0"});
    EXPECT_EQ(v.code, 0);
    std::filesystem::remove(path);
}

TEST(Cli, CodesTable)
{
    auto r = run({"codes", "hc", "--set", "p1:1,r1:1,p2:1"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::size_t lines = 0;
    bool found = false;
    while (std::getline(in, line)) {
        ++lines;
        found |= line == "vertex,t2:3,10,14,5";
    }
    EXPECT_EQ(lines, 1u + 72u + 90u);
    EXPECT_TRUE(found);
}

TEST(Cli, OutputFile)
{
    auto path = std::filesystem::temp_directory_path() / "metricdim_cli_out.json";
    auto r = run({"audit", "hc", "--fixture", "--format", "json", "-o", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    EXPECT_EQ(Json::parse(in)["summary"]["rows"], 161);
    std::filesystem::remove(path);
}
