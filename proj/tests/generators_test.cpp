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

#include "support.hpp"

#include <gtest/gtest.h>

using namespace metricdim;

namespace
{
std::size_t count_degree(const LabeledGraph & g, std::size_t d)
{
    std::size_t n = 0;
    for (VertexId v = 0; v < g.order(); ++v)
        n += g.degree(v) == d;
    return n;
}

// Cycle lengths of a graph where every vertex has degree 2.
std::vector<std::size_t> cycle_lengths(std::size_t n, const oracle::EdgeList & edges)
{
    auto d = oracle::floyd_warshall(n, edges);
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (seen[v])
            continue;
        std::size_t size = 0;
        for (std::size_t u = 0; u < n; ++u)
            if (d[v][u] < INT_MAX / 4) {
                seen[u] = 1;
                ++size;
            }
        out.push_back(size);
    }
    std::sort(out.begin(), out.end());
    return out;
}
}

TEST(Hc, Hc444Counts)
{
    auto g = build_hc({4, 4, 4});
    EXPECT_EQ(g.order(), 72u);
    EXPECT_EQ(g.size(), 90u);
    EXPECT_TRUE(g.connected());
}

TEST(Hc, DegreeProfile543)
{
    auto g = build_hc({5, 4, 3});
    EXPECT_EQ(count_degree(g, 2), 36u);
    EXPECT_EQ(count_degree(g, 3), 36u);
}

TEST(Hc, SpokeDeletionLeavesTwoCycles)
{
    auto g = build_hc({4, 4, 4});
    oracle::EdgeList kept;
    for (const auto & e : g.edges())
        if (is_outer_family(g.label(e.u)->family) == is_outer_family(g.label(e.v)->family))
            kept.emplace_back(e.u, e.v);
    std::vector<std::size_t> deg(g.order(), 0);
    for (auto [u, v] : kept)
        ++deg[u], ++deg[v];
    for (auto d : deg)
        EXPECT_EQ(d, 2u);
    EXPECT_EQ(cycle_lengths(g.order(), kept), (std::vector<std::size_t>{30, 42}));
}

TEST(Hc, OuterCycleOrder)
{
    // consecutive outer labels p1, q1, r1, p2 (reversed), r2 (reversed), q2 (reversed)
    auto g = build_hc({4, 4, 4});
    auto adj = [&](const char * x, const char * y) {
        return g.adjacent(g.require(*parse_label(x)), g.require(*parse_label(y)));
    };
    EXPECT_TRUE(adj("p1:7", "q1:1"));
    EXPECT_TRUE(adj("q1:7", "r1:1"));
    EXPECT_TRUE(adj("r1:7", "p2:7"));
    EXPECT_TRUE(adj("p2:1", "r2:7"));
    EXPECT_TRUE(adj("r2:1", "q2:7"));
    EXPECT_TRUE(adj("q2:1", "p1:1"));
    EXPECT_TRUE(adj("p1:2", "s1:1"));
    EXPECT_FALSE(adj("p1:1", "s1:1"));
}

TEST(Hc, ValidationPassesForRange)
{
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b)
            for (int c = 2; c <= 6; ++c) {
                HcParams p{a, b, c};
                auto report = validate_structure(build_hc(p), hc_profile(p));
                EXPECT_TRUE(report.passed()) << a << "," << b << "," << c;
            }
}

TEST(Hc, RejectsSmallParameters)
{
    EXPECT_THROW(build_hc({1, 4, 4}), std::invalid_argument);
    EXPECT_THROW(build_hc({4, 4, 0}), std::invalid_argument);
}

TEST(Sp, Sp111IsHexagon)
{
    auto g = build_sp({1, 1, 1});
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(g.size(), 6u);
    EXPECT_EQ(count_degree(g, 2), 6u);
    EXPECT_EQ(cycle_lengths(6, oracle::edges_of(g)), (std::vector<std::size_t>{6}));
}

TEST(Sp, Sp333Counts)
{
    auto g = build_sp({3, 3, 3});
    EXPECT_EQ(g.order(), 30u);
    EXPECT_EQ(g.size(), 36u);
    EXPECT_EQ(count_degree(g, 2), 18u);
    EXPECT_EQ(count_degree(g, 3), 12u);
}

TEST(Sp, ValidationPassesForRange)
{
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            for (int c = 1; c <= 6; ++c) {
                SpParams p{a, b, c};
                auto report = validate_structure(build_sp(p), sp_profile(p));
                EXPECT_TRUE(report.passed()) << a << "," << b << "," << c;
            }
}

TEST(Sp, RejectsZero) { EXPECT_THROW(build_sp({0, 1, 1}), std::invalid_argument); }

TEST(Validation, CycleFailsHcProfile)
{
    auto report = validate_structure(oracle::cycle(6), hc_profile({4, 4, 4}));
    EXPECT_FALSE(report.passed());
    for (const auto & c : report.checks) {
        if (c.name == "vertex_count" || c.name == "edge_count") {
            EXPECT_FALSE(c.passed);
        }
    }
}
