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

#ifndef METRICDIM_GRAPH_HPP
#define METRICDIM_GRAPH_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metricdim
{

using VertexId = std::uint32_t;

class GraphError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Vertex families of the hollow coronoid and starphene constructions. The
// starphene only uses the p, q and r families.
enum class Family : std::uint8_t { P1, P2, Q1, Q2, R1, R2, S1, S2, T1, T2, U1, U2 };

inline constexpr std::array<Family, 12> all_families = {Family::P1, Family::P2, Family::Q1, Family::Q2,
                                                        Family::R1, Family::R2, Family::S1, Family::S2,
                                                        Family::T1, Family::T2, Family::U1, Family::U2};

inline constexpr std::string_view to_string(Family f)
{
    constexpr std::array<std::string_view, 12> names = {"p1", "p2", "q1", "q2", "r1", "r2",
                                                        "s1", "s2", "t1", "t2", "u1", "u2"};
    return names[static_cast<std::size_t>(f)];
}

inline std::optional<Family> parse_family(std::string_view text)
{
    if (text.size() != 2)
        return std::nullopt;
    char letter = text[0];
    if (letter >= 'A' && letter <= 'Z')
        letter = static_cast<char>(letter - 'A' + 'a');
    for (Family f : all_families) {
        auto name = to_string(f);
        if (name[0] == letter && name[1] == text[1])
            return f;
    }
    return std::nullopt;
}

struct VertexLabel
{
    Family family;
    int index;

    friend constexpr auto operator<=>(const VertexLabel &, const VertexLabel &) = default;
};

// "p1:3"
inline std::string to_string(const VertexLabel & label)
{
    return std::string(to_string(label.family)) + ":" + std::to_string(label.index);
}

inline std::optional<VertexLabel> parse_label(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        return std::nullopt;
    auto family = parse_family(text.substr(0, colon));
    auto digits = text.substr(colon + 1);
    if (! family || digits.empty() || digits.size() > 9)
        return std::nullopt;
    int index = 0;
    for (char ch : digits) {
        if (ch < '0' || ch > '9')
            return std::nullopt;
        index = index * 10 + (ch - '0');
    }
    if (index < 1)
        return std::nullopt;
    return VertexLabel{*family, index};
}

// Undirected edge in canonical (smaller id first) form.
struct Edge
{
    VertexId u;
    VertexId v;

    static constexpr Edge make(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

// Simple undirected graph on dense ids 0..n-1 with an optional bijection to
// structured vertex labels. Immutable once built.
class LabeledGraph
{
public:
    LabeledGraph() = default;

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edges_.size(); }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

    bool adjacent(VertexId a, VertexId b) const
    {
        if (a >= order() || b >= order())
            return false;
        const auto & nbrs = adjacency_[a];
        return std::binary_search(nbrs.begin(), nbrs.end(), b);
    }

    // Edges in lexicographic order of their canonical form.
    const std::vector<Edge> & edges() const { return edges_; }

    std::optional<std::size_t> edge_index(VertexId a, VertexId b) const
    {
        auto e = Edge::make(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    bool has_labels() const { return ! labels_.empty(); }

    std::optional<VertexLabel> label(VertexId v) const
    {
        if (labels_.empty() || v >= labels_.size())
            return std::nullopt;
        return labels_[v];
    }

    std::optional<VertexId> find(const VertexLabel & label) const
    {
        auto it = by_label_.find(label);
        if (it == by_label_.end())
            return std::nullopt;
        return it->second;
    }

    VertexId require(const VertexLabel & label) const
    {
        auto v = find(label);
        if (! v)
            throw GraphError("no vertex labelled " + to_string(label));
        return *v;
    }

    std::string vertex_name(VertexId v) const
    {
        if (auto l = label(v))
            return to_string(*l);
        return std::to_string(v);
    }

    std::string edge_name(const Edge & e) const { return vertex_name(e.u) + "-" + vertex_name(e.v); }

    bool connected() const
    {
        if (order() == 0)
            return true;
        std::vector<char> seen(order(), 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adjacency_[v])
                if (! seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == order();
    }

    friend LabeledGraph graph_from_edges(std::size_t, std::span<const std::pair<VertexId, VertexId>>,
                                         std::span<const VertexLabel>, bool);

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<VertexLabel> labels_;
    std::map<VertexLabel, VertexId> by_label_;
};

// Builds a graph from an edge list. Labels are either empty or one per vertex.
// Throws GraphError on loops, duplicate edges, out-of-range ids, duplicate
// labels, and (when require_connected is set) disconnected input.
inline LabeledGraph graph_from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list,
                                     std::span<const VertexLabel> labels = {}, bool require_connected = false)
{
    LabeledGraph g;
    g.adjacency_.resize(n);
    g.edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a >= n || b >= n)
            throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") has an id out of range [0," +
                             std::to_string(n) + ")");
        if (a == b)
            throw GraphError("loop edge at vertex " + std::to_string(a));
        g.edges_.push_back(Edge::make(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
        throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    for (auto e : g.edges_) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto & nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());

    if (! labels.empty()) {
        if (labels.size() != n)
            throw GraphError("label count " + std::to_string(labels.size()) + " does not match vertex count " +
                             std::to_string(n));
        g.labels_.assign(labels.begin(), labels.end());
        for (VertexId v = 0; v < n; ++v) {
            if (labels[v].index < 1)
                throw GraphError("label index must be positive: " + to_string(labels[v]));
            if (! g.by_label_.emplace(labels[v], v).second)
                throw GraphError("duplicate label " + to_string(labels[v]));
        }
    }

    if (require_connected && ! g.connected())
        throw GraphError("graph is not connected");
    return g;
}

inline LabeledGraph graph_from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>> & edge_list,
                                     const std::vector<VertexLabel> & labels = {}, bool require_connected = false)
{
    return graph_from_edges(n, std::span<const std::pair<VertexId, VertexId>>(edge_list),
                            std::span<const VertexLabel>(labels), require_connected);
}

// Dense all-pairs hop distances.
class DistanceMatrix
{
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

    std::size_t order() const { return n_; }

    int operator()(VertexId a, VertexId b) const { return data_[static_cast<std::size_t>(a) * n_ + b]; }
    int & operator()(VertexId a, VertexId b) { return data_[static_cast<std::size_t>(a) * n_ + b]; }

    int at(VertexId a, VertexId b) const
    {
        if (a >= n_ || b >= n_)
            throw GraphError("vertex id out of range in distance lookup");
        return (*this)(a, b);
    }

    std::span<const int> row(VertexId a) const { return {data_.data() + static_cast<std::size_t>(a) * n_, n_}; }

    int diameter() const { return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end()); }

    friend bool operator==(const DistanceMatrix &, const DistanceMatrix &) = default;

private:
    std::size_t n_ = 0;
    std::vector<int> data_;
};

// One breadth-first traversal per source.
inline DistanceMatrix all_pairs_distances(const LabeledGraph & g)
{
    const auto n = g.order();
    DistanceMatrix dm(n);
    std::vector<int> dist(n);
    std::vector<VertexId> queue(n);
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            auto v = queue[head++];
            for (auto w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
        }
        if (tail != n)
            throw GraphError("graph is not connected: vertex " + g.vertex_name(s) + " reaches only " +
                             std::to_string(tail) + " of " + std::to_string(n) + " vertices");
        for (VertexId t = 0; t < n; ++t)
            dm(s, t) = dist[t];
    }
    return dm;
}

inline int distance_vertex_edge(const DistanceMatrix & dm, VertexId v, const Edge & e)
{
    return std::min(dm.at(v, e.u), dm.at(v, e.v));
}

} // namespace metricdim

#endif
