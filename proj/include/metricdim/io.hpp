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

#ifndef METRICDIM_IO_HPP
#define METRICDIM_IO_HPP

#include <metricdim/graph.hpp>

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace metricdim
{

// Edge-list text format:
//
//     n m
//     u v          (m lines)
//     # label u FAMILY g
//
// Label lines may appear anywhere; other lines starting with '#' are comments.
// Either every vertex is labelled or none is.
inline void write_edge_list(std::ostream & out, const LabeledGraph & g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto & e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    if (g.has_labels())
        for (VertexId v = 0; v < g.order(); ++v) {
            auto l = *g.label(v);
            out << "# label " << v << ' ' << to_string(l.family) << ' ' << l.index << '\n';
        }
}

inline LabeledGraph read_edge_list(std::istream & in, bool require_connected = true)
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::pair<VertexId, VertexLabel>> label_lines;

    auto fail = [&](const std::string & what) -> GraphError {
        return GraphError("edge list line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        std::istringstream fields(line);
        if (line[first] == '#') {
            std::string hash, keyword;
            fields >> hash >> keyword;
            if (hash != "#" || keyword != "label")
                continue;
            long long v = -1, index = 0;
            std::string family;
            if (! (fields >> v >> family >> index) || v < 0)
                throw fail("malformed label line");
            auto f = parse_family(family);
            if (! f)
                throw fail("unknown family '" + family + "'");
            if (index < 1)
                throw fail("label index must be positive");
            label_lines.emplace_back(static_cast<VertexId>(v), VertexLabel{*f, static_cast<int>(index)});
            continue;
        }
        long long a = -1, b = -1;
        if (! (fields >> a >> b) || a < 0 || b < 0)
            throw fail("expected two non-negative integers");
        std::string rest;
        if (fields >> rest)
            throw fail("trailing text '" + rest + "'");
        if (! header)
            header.emplace(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        else
            edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    if (! header)
        throw GraphError("edge list is empty");
    auto [n, m] = *header;
    if (edges.size() != m)
        throw GraphError("edge list header declares " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " were given");

    std::vector<VertexLabel> labels;
    if (! label_lines.empty()) {
        std::vector<std::optional<VertexLabel>> slots(n);
        for (auto & [v, l] : label_lines) {
            if (v >= n)
                throw GraphError("label for vertex " + std::to_string(v) + " out of range");
            if (slots[v])
                throw GraphError("vertex " + std::to_string(v) + " labelled twice");
            slots[v] = l;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (! slots[v])
                throw GraphError("vertex " + std::to_string(v) + " has no label while others do");
            labels.push_back(*slots[v]);
        }
    }
    return graph_from_edges(n, edges, labels, require_connected);
}

inline void write_dot(std::ostream & out, const LabeledGraph & g, std::string_view name = "G")
{
    out << "graph " << name << " {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (VertexId v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (auto l = g.label(v))
            out << " [label=\"" << to_string(l->family) << "," << l->index << "\"]";
        out << ";\n";
    }
    for (const auto & e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

} // namespace metricdim

#endif
