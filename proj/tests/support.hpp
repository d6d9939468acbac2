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

#ifndef METRICDIM_TESTS_SUPPORT_HPP
#define METRICDIM_TESTS_SUPPORT_HPP

// Reference implementations that share no code with the library: Floyd-
// Warshall distances and a naive set-of-codes resolvability check.

#include <metricdim/metricdim.hpp>

#include <algorithm>
#include <climits>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle
{

using Matrix = std::vector<std::vector<int>>;
using EdgeList = std::vector<std::pair<unsigned, unsigned>>;

inline Matrix floyd_warshall(std::size_t n, const EdgeList & edges)
{
    const int inf = INT_MAX / 4;
    Matrix d(n, std::vector<int>(n, inf));
    for (std::size_t i = 0; i < n; ++i)
        d[i][i] = 0;
    for (auto [u, v] : edges)
        d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline EdgeList edges_of(const metricdim::LabeledGraph & g)
{
    EdgeList out;
    for (const auto & e : g.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

// Codes of every compared element: vertices (unless edge-only), then edges
// (unless vertex/multiset).
inline std::vector<std::vector<int>> all_codes(const Matrix & d, const EdgeList & edges, const std::vector<unsigned> & s,
                                               metricdim::Variant variant)
{
    using metricdim::Variant;
    std::vector<std::vector<int>> out;
    if (variant != Variant::EdgeMetric)
        for (std::size_t v = 0; v < d.size(); ++v) {
            std::vector<int> c;
            for (auto z : s)
                c.push_back(d[z][v]);
            if (variant == Variant::Multiset)
                std::sort(c.begin(), c.end());
            out.push_back(c);
        }
    if (variant == Variant::EdgeMetric || variant == Variant::MixedMetric)
        for (auto [u, v] : edges) {
            std::vector<int> c;
            for (auto z : s)
                c.push_back(std::min(d[z][u], d[z][v]));
            out.push_back(c);
        }
    return out;
}

inline bool resolves(const Matrix & d, const EdgeList & edges, const std::vector<unsigned> & s, metricdim::Variant variant)
{
    auto codes = all_codes(d, edges, s, variant);
    std::set<std::vector<int>> seen(codes.begin(), codes.end());
    return seen.size() == codes.size();
}

// Smallest resolving size by bitmask enumeration; 0 when none exists.
inline std::size_t min_size(const Matrix & d, const EdgeList & edges, metricdim::Variant variant)
{
    const std::size_t n = d.size();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<char> mask(n, 0);
        std::fill(mask.begin(), mask.begin() + static_cast<long>(k), 1);
        do {
            std::vector<unsigned> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask[i])
                    s.push_back(static_cast<unsigned>(i));
            if (resolves(d, edges, s, variant))
                return k;
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return 0;
}

// Random connected graph: a random spanning tree plus extra edges.
inline EdgeList random_connected(std::size_t n, std::size_t extra, std::mt19937 & rng)
{
    std::set<std::pair<unsigned, unsigned>> edges;
    for (unsigned v = 1; v < n; ++v) {
        unsigned u = std::uniform_int_distribution<unsigned>(0, v - 1)(rng);
        edges.insert({u, v});
    }
    std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(n - 1));
    for (std::size_t tries = 0; tries < 20 * extra && edges.size() < n - 1 + extra; ++tries) {
        unsigned u = pick(rng), v = pick(rng);
        if (u == v)
            continue;
        edges.insert({std::min(u, v), std::max(u, v)});
    }
    return {edges.begin(), edges.end()};
}

inline metricdim::LabeledGraph to_graph(std::size_t n, const EdgeList & edges)
{
    std::vector<std::pair<metricdim::VertexId, metricdim::VertexId>> e(edges.begin(), edges.end());
    return metricdim::graph_from_edges(n, e);
}

inline metricdim::LabeledGraph path(std::size_t n)
{
    EdgeList e;
    for (unsigned i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return to_graph(n, e);
}

inline metricdim::LabeledGraph cycle(std::size_t n)
{
    EdgeList e;
    for (unsigned i = 0; i < n; ++i)
        e.emplace_back(i, static_cast<unsigned>((i + 1) % n));
    return to_graph(n, e);
}

} // namespace oracle

#endif
