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

#ifndef METRICDIM_RESOLVABILITY_HPP
#define METRICDIM_RESOLVABILITY_HPP

#include <metricdim/graph.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metricdim
{

enum class Variant { VertexMetric, EdgeMetric, MixedMetric, Multiset };

inline constexpr std::string_view to_string(Variant v)
{
    switch (v) {
        case Variant::VertexMetric: return "vertex";
        case Variant::EdgeMetric: return "edge";
        case Variant::MixedMetric: return "mixed";
        case Variant::Multiset: return "multiset";
    }
    return "?";
}

inline std::optional<Variant> parse_variant(std::string_view text)
{
    if (text == "vertex" || text == "dim")
        return Variant::VertexMetric;
    if (text == "edge" || text == "edim")
        return Variant::EdgeMetric;
    if (text == "mixed" || text == "mdim")
        return Variant::MixedMetric;
    if (text == "multiset" || text == "msdim")
        return Variant::Multiset;
    return std::nullopt;
}

// A vertex or an edge. Edge ids index LabeledGraph::edges().
struct Element
{
    enum class Kind : std::uint8_t { Vertex, Edge };

    Kind kind;
    std::size_t id;

    static Element vertex(VertexId v) { return {Kind::Vertex, v}; }
    static Element edge(std::size_t e) { return {Kind::Edge, e}; }

    friend constexpr auto operator<=>(const Element &, const Element &) = default;
};

inline std::string element_name(const LabeledGraph & g, const Element & x)
{
    return x.kind == Element::Kind::Vertex ? g.vertex_name(static_cast<VertexId>(x.id)) : g.edge_name(g.edges().at(x.id));
}

// Ordered distances from each landmark to an element.
using Code = std::vector<int>;

// Distances to the landmarks as a multiset, kept sorted ascending.
class MultisetCode
{
public:
    MultisetCode() = default;
    explicit MultisetCode(Code values) : values_(std::move(values)) { std::sort(values_.begin(), values_.end()); }

    const std::vector<int> & values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool contains(int d) const { return std::binary_search(values_.begin(), values_.end(), d); }

    friend auto operator<=>(const MultisetCode &, const MultisetCode &) = default;

private:
    std::vector<int> values_;
};

inline int element_distance(const LabeledGraph & g, const DistanceMatrix & dm, VertexId from, const Element & x)
{
    if (x.kind == Element::Kind::Vertex)
        return dm.at(from, static_cast<VertexId>(x.id));
    if (x.id >= g.size())
        throw GraphError("edge id " + std::to_string(x.id) + " out of range");
    return distance_vertex_edge(dm, from, g.edges()[x.id]);
}

namespace detail
{
    inline void check_landmarks(const LabeledGraph & g, std::span<const VertexId> landmarks, bool allow_empty = false)
    {
        if (landmarks.empty() && ! allow_empty)
            throw GraphError("landmark list is empty");
        std::vector<VertexId> sorted(landmarks.begin(), landmarks.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw GraphError("landmark list contains a repeated vertex");
        if (! sorted.empty() && sorted.back() >= g.order())
            throw GraphError("landmark id " + std::to_string(sorted.back()) + " out of range");
    }
}

inline Code code(const LabeledGraph & g, const DistanceMatrix & dm, const Element & x,
                 std::span<const VertexId> landmarks)
{
    detail::check_landmarks(g, landmarks);
    if (x.kind == Element::Kind::Vertex && x.id >= g.order())
        throw GraphError("vertex id " + std::to_string(x.id) + " out of range");
    Code out;
    out.reserve(landmarks.size());
    for (auto l : landmarks)
        out.push_back(element_distance(g, dm, l, x));
    return out;
}

inline MultisetCode multiset_rep(const LabeledGraph & g, const DistanceMatrix & dm, VertexId v,
                                 std::span<const VertexId> landmarks)
{
    return MultisetCode(code(g, dm, Element::vertex(v), landmarks));
}

// Elements whose codes must be pairwise distinct under a variant, in
// canonical order: vertices by id, then edges by edge id.
inline std::vector<Element> compared_elements(const LabeledGraph & g, Variant variant)
{
    std::vector<Element> out;
    if (variant != Variant::EdgeMetric)
        for (VertexId v = 0; v < g.order(); ++v)
            out.push_back(Element::vertex(v));
    if (variant == Variant::EdgeMetric || variant == Variant::MixedMetric)
        for (std::size_t e = 0; e < g.size(); ++e)
            out.push_back(Element::edge(e));
    return out;
}

struct ResolveVerdict
{
    bool resolving = false;
    // Lexicographically first pair of elements with equal codes.
    std::optional<std::pair<Element, Element>> violation;
    Code shared_code;

    explicit operator bool() const { return resolving; }
};

// Groups the compared elements by code (sorted codes for Multiset) and reports
// the first collision in element order.
inline ResolveVerdict is_resolving(const LabeledGraph & g, const DistanceMatrix & dm, std::span<const VertexId> landmarks,
                                   Variant variant)
{
    detail::check_landmarks(g, landmarks, true);
    auto elements = compared_elements(g, variant);
    std::vector<Code> codes;
    codes.reserve(elements.size());
    for (const auto & x : elements) {
        Code c;
        c.reserve(landmarks.size());
        for (auto l : landmarks)
            c.push_back(element_distance(g, dm, l, x));
        if (variant == Variant::Multiset)
            std::sort(c.begin(), c.end());
        codes.push_back(std::move(c));
    }
    std::vector<std::size_t> order(elements.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return codes[i] < codes[j]; });

    ResolveVerdict verdict;
    verdict.resolving = true;
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        // stable sort keeps each group in element order, so the group head and
        // its successor form the group's first pair
        if (codes[order[i]] != codes[order[i + 1]])
            continue;
        if (i > 0 && codes[order[i - 1]] == codes[order[i]])
            continue;
        std::pair<std::size_t, std::size_t> candidate{order[i], order[i + 1]};
        if (! best || candidate < *best)
            best = candidate;
    }
    if (best) {
        verdict.resolving = false;
        verdict.violation = std::pair{elements[best->first], elements[best->second]};
        verdict.shared_code = codes[best->first];
    }
    return verdict;
}

inline bool is_independent(const LabeledGraph & g, std::span<const VertexId> s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                return false;
    return true;
}

// True when the graph is a path P_n (n >= 1).
inline bool is_path_graph(const LabeledGraph & g)
{
    if (g.order() == 0 || g.size() + 1 != g.order() || ! g.connected())
        return false;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2)
            return false;
    return true;
}

} // namespace metricdim

#endif
