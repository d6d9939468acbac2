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
std::optional<std::size_t> certified(const LabeledGraph & g, Variant v)
{
    auto r = min_dimension(g, v);
    if (r.status == SearchStatus::Found && r.certified)
        return r.value;
    return std::nullopt;
}

LabeledGraph permuted(const LabeledGraph & g, std::mt19937 & rng)
{
    std::vector<VertexId> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto & e : g.edges())
        edges.emplace_back(perm[e.u], perm[e.v]);
    return graph_from_edges(g.order(), edges);
}

std::vector<LabeledGraph> sample_graphs()
{
    std::vector<LabeledGraph> out;
    std::mt19937 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 3 + trial % 9;
        out.push_back(oracle::to_graph(n, oracle::random_connected(n, trial % 4, rng)));
    }
    out.push_back(build_sp({1, 1, 1}));
    out.push_back(build_sp({2, 1, 2}));
    out.push_back(build_hc({2, 2, 2}));
    return out;
}
}

TEST(Properties, MixedDominatesVertexAndEdge)
{
    for (const auto & g : sample_graphs()) {
        auto dim = certified(g, Variant::VertexMetric);
        auto edim = certified(g, Variant::EdgeMetric);
        auto mdim = certified(g, Variant::MixedMetric);
        ASSERT_TRUE(dim && edim && mdim);
        EXPECT_GE(*mdim, std::max(*dim, *edim));
        EXPECT_GE(*mdim, 2u);
        EXPECT_LE(*mdim, g.order());
    }
}

TEST(Properties, MultisetNeverTwo)
{
    for (const auto & g : sample_graphs()) {
        SearchOptions opt;
        opt.certify = false;
        opt.start_size = 1;
        auto r = min_dimension(g, Variant::Multiset, opt);
        if (r.value) {
            EXPECT_NE(*r.value, 2u);
        }
        if (r.value == 1u) {
            EXPECT_TRUE(is_path_graph(g));
        }
    }
}

TEST(Properties, PathsHaveMultisetDimensionOne)
{
    for (std::size_t n : {2u, 5u, 9u}) {
        auto g = oracle::path(n);
        auto r = min_dimension(g, Variant::Multiset);
        EXPECT_EQ(r.value, 1u) << n;
        EXPECT_TRUE(r.certified);
    }
}

TEST(Properties, SortedCodeEqualsMultisetRep)
{
    std::mt19937 rng(99);
    auto hc = build_hc({4, 3, 5});
    auto dm = all_pairs_distances(hc);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(hc.order() - 1));
    for (int sample = 0; sample < 1000; ++sample) {
        std::vector<VertexId> s;
        std::size_t k = 1 + sample % 5;
        while (s.size() < k) {
            auto v = pick(rng);
            if (std::find(s.begin(), s.end(), v) == s.end())
                s.push_back(v);
        }
        VertexId v = pick(rng);
        auto c = code(hc, dm, Element::vertex(v), s);
        std::sort(c.begin(), c.end());
        ASSERT_EQ(MultisetCode(c), multiset_rep(hc, dm, v, s));
        ASSERT_EQ(c, multiset_rep(hc, dm, v, s).values());
    }
}

TEST(Properties, RelabelInvariance)
{
    std::mt19937 rng(17);
    for (const auto & g : sample_graphs()) {
        auto h = permuted(g, rng);
        for (auto v : {Variant::VertexMetric, Variant::EdgeMetric, Variant::MixedMetric, Variant::Multiset}) {
            auto x = min_dimension(g, v);
            auto y = min_dimension(h, v);
            EXPECT_EQ(x.status, y.status);
            EXPECT_EQ(x.value, y.value);
            EXPECT_EQ(x.certified, y.certified);
        }
    }
}

TEST(Properties, ThreadCountDoesNotChangeResults)
{
    for (const auto & g : {build_hc({4, 4, 4}), build_sp({3, 3, 3}), build_hc({2, 3, 2})}) {
        for (auto v : {Variant::VertexMetric, Variant::EdgeMetric, Variant::MixedMetric, Variant::Multiset}) {
            SearchOptions one, many;
            many.threads = 4;
            auto a = min_dimension(g, v, one);
            auto b = min_dimension(g, v, many);
            EXPECT_EQ(a.value, b.value);
            EXPECT_EQ(a.witness, b.witness);
            EXPECT_EQ(a.subsets_examined, b.subsets_examined);
            EXPECT_EQ(to_json(g, a).dump(), to_json(g, b).dump());
        }
    }
}
