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

#ifndef METRICDIM_FIXTURES_HPP
#define METRICDIM_FIXTURES_HPP

// Published code tables for HC(4,4,4) relative to (p1:1, r1:1, p2:1). The
// embedded text is a byte-for-byte copy of data/hc444_vertices.csv and
// data/hc444_edges.csv (a test keeps them in sync).
//
// Layout, one row per element:
//
//     element_kind,family,index,index2,c1,c2,c3,note
//
// element_kind is "vertex" or "edge". Vertex rows leave index2 empty. Edge
// rows name the printed endpoints family:index and family:index2, with
// family written "x-y" when the endpoints belong to different families.
// note is free text (no commas). Lines starting with '#' are comments.

#include <metricdim/graph.hpp>
#include <metricdim/resolvability.hpp>

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace metricdim
{

struct FixtureRow
{
    Element::Kind kind = Element::Kind::Vertex;
    VertexLabel first{};
    std::optional<VertexLabel> second;
    Code code;
    std::string note;

    std::string descriptor() const
    {
        return second ? to_string(first) + "-" + to_string(*second) : to_string(first);
    }
};

namespace detail
{
    // Splits on commas; the field at position `max_fields - 1` keeps the rest
    // of the line, commas included.
    inline std::vector<std::string> split_csv_line(const std::string & line, std::size_t max_fields = 8)
    {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (out.size() + 1 < max_fields) {
            auto comma = line.find(',', start);
            if (comma == std::string::npos)
                break;
            out.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        out.push_back(line.substr(start));
        return out;
    }

    inline int parse_int_field(const std::string & text, std::size_t line_no)
    {
        try {
            std::size_t used = 0;
            int v = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return v;
        }
        catch (const std::exception &) {
            throw std::runtime_error("fixture line " + std::to_string(line_no) + ": bad integer '" + text + "'");
        }
    }
}

inline std::vector<FixtureRow> parse_fixture_csv(std::string_view text)
{
    std::vector<FixtureRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (! header_seen) {
            if (line.rfind("element_kind,", 0) != 0)
                throw std::runtime_error("fixture line " + std::to_string(line_no) + ": missing header");
            header_seen = true;
            continue;
        }
        auto f = detail::split_csv_line(line);
        if (f.size() < 7 || f.size() > 8)
            throw std::runtime_error("fixture line " + std::to_string(line_no) + ": expected 7 or 8 fields");
        FixtureRow row;
        if (f[0] == "vertex")
            row.kind = Element::Kind::Vertex;
        else if (f[0] == "edge")
            row.kind = Element::Kind::Edge;
        else
            throw std::runtime_error("fixture line " + std::to_string(line_no) + ": unknown kind '" + f[0] + "'");

        std::string fam1 = f[1], fam2 = f[1];
        if (auto dash = f[1].find('-'); dash != std::string::npos) {
            fam1 = f[1].substr(0, dash);
            fam2 = f[1].substr(dash + 1);
        }
        auto family1 = parse_family(fam1), family2 = parse_family(fam2);
        if (! family1 || ! family2)
            throw std::runtime_error("fixture line " + std::to_string(line_no) + ": unknown family '" + f[1] + "'");
        row.first = {*family1, detail::parse_int_field(f[2], line_no)};
        if (row.kind == Element::Kind::Edge)
            row.second = VertexLabel{*family2, detail::parse_int_field(f[3], line_no)};
        else if (! f[3].empty())
            throw std::runtime_error("fixture line " + std::to_string(line_no) + ": vertex row with index2");
        for (int i = 4; i < 7; ++i)
            row.code.push_back(detail::parse_int_field(f[i], line_no));
        if (f.size() == 8)
            row.note = f[7];
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void write_fixture_csv(std::ostream & out, const std::vector<FixtureRow> & rows)
{
    out << "element_kind,family,index,index2,c1,c2,c3,note\n";
    for (const auto & r : rows) {
        out << (r.kind == Element::Kind::Vertex ? "vertex" : "edge") << ',';
        if (r.second && r.second->family != r.first.family)
            out << to_string(r.first.family) << '-' << to_string(r.second->family);
        else
            out << to_string(r.first.family);
        out << ',' << r.first.index << ',';
        if (r.second)
            out << r.second->index;
        out << ',' << r.code.at(0) << ',' << r.code.at(1) << ',' << r.code.at(2) << ',' << r.note << '\n';
    }
}

inline constexpr std::string_view hc444_vertices_csv = R"csv(# HC(4,4,4) vertex codes relative to (p1:1, r1:1, p2:1); fixture layout v1
element_kind,family,index,index2,c1,c2,c3,note
vertex,p1,1,,0,14,15,
vertex,p1,2,,1,13,14,
vertex,p1,3,,2,12,15,
vertex,p1,4,,3,11,16,
vertex,p1,5,,4,10,17,
vertex,p1,6,,5,9,18,
vertex,p1,7,,6,8,19,
vertex,p2,1,,15,13,0,
vertex,p2,2,,14,12,1,
vertex,p2,3,,15,11,2,
vertex,p2,4,,16,10,3,
vertex,p2,5,,17,9,4,
vertex,p2,6,,18,8,5,
vertex,p2,7,,19,7,6,
vertex,q1,1,,7,7,18,
vertex,q1,2,,8,6,17,
vertex,q1,3,,9,5,16,
vertex,q1,4,,10,4,15,
vertex,q1,5,,11,3,14,
vertex,q1,6,,12,2,13,
vertex,q1,7,,13,1,14,
vertex,q2,1,,1,15,14,
vertex,q2,2,,2,14,13,
vertex,q2,3,,3,15,12,
vertex,q2,4,,4,16,11,
vertex,q2,5,,5,17,10,
vertex,q2,6,,6,18,9,
vertex,q2,7,,7,19,8,
vertex,r1,1,,14,0,13,
vertex,r1,2,,13,1,12,
vertex,r1,3,,14,2,11,
vertex,r1,4,,15,3,10,
vertex,r1,5,,16,4,9,
vertex,r1,6,,17,5,8,
vertex,r1,7,,18,6,7,
vertex,r2,1,,8,18,7,
vertex,r2,2,,9,17,6,
vertex,r2,3,,10,16,5,
vertex,r2,4,,11,15,4,
vertex,r2,5,,12,14,3,
vertex,r2,6,,13,13,2,
vertex,r2,7,,14,14,1,
vertex,s1,1,,2,12,13,
vertex,s1,2,,3,11,14,
vertex,s1,3,,4,10,15,
vertex,s1,4,,5,9,16,
vertex,s1,5,,6,8,17,
vertex,s2,1,,13,11,2,
vertex,s2,2,,14,10,3,
vertex,s2,3,,15,9,4,
vertex,s2,4,,16,8,5,
vertex,s2,5,,17,7,6,
vertex,t1,1,,7,7,16,
vertex,t1,2,,8,6,15,
vertex,t1,3,,9,5,14,
vertex,t1,4,,10,4,13,
vertex,t1,5,,11,3,12,
vertex,t2,1,,8,16,7,
vertex,t2,2,,9,15,6,
vertex,t2,3,,10,14,5,
vertex,t2,4,,11,13,4,
vertex,t2,5,,12,12,3,
vertex,u1,1,,12,2,11,
vertex,u1,2,,13,3,10,
vertex,u1,3,,14,4,9,
vertex,u1,4,,15,5,8,
vertex,u1,5,,16,6,7,
vertex,u2,1,,3,13,12,
vertex,u2,2,,4,14,11,
vertex,u2,3,,5,15,10,
vertex,u2,4,,6,16,9,
vertex,u2,5,,7,17,8,
)csv";

inline constexpr std::string_view hc444_edges_csv = R"csv(# HC(4,4,4) edge codes relative to (p1:1, r1:1, p2:1); fixture layout v1
# edges use family 'x-y' when the printed endpoints lie in different families
element_kind,family,index,index2,c1,c2,c3,note
edge,p1,1,2,0,13,14,
edge,p1,2,3,1,12,14,
edge,p1,3,4,2,11,15,
edge,p1,4,5,3,10,16,
edge,p1,5,6,4,9,17,
edge,p1,6,7,5,8,18,
edge,p1-q1,7,1,6,7,18,
edge,p2,1,2,14,12,0,
edge,p2,2,3,14,11,1,
edge,p2,3,4,15,10,2,
edge,p2,4,5,16,9,3,
edge,p2,5,6,17,8,4,
edge,p2,6,7,18,7,5,
edge,q1,1,2,7,6,17,
edge,q1,2,3,8,5,16,
edge,q1,3,4,9,4,15,
edge,q1,4,5,10,3,14,
edge,q1,5,6,11,2,13,
edge,p1-s1,4,3,3,10,15,
edge,t1-q1,5,6,11,2,12,
edge,s2-p2,5,6,17,7,5,
edge,t2-r2,3,4,10,14,4,
edge,u2-q2,1,2,2,13,12,
edge,q1,6,7,12,1,13,
edge,q1-r1,7,1,13,0,13,
edge,q2,1,2,1,14,13,
edge,q2,2,3,2,14,12,
edge,q2,3,4,3,15,11,
edge,q2,4,5,4,16,10,
edge,q2,5,6,5,17,9,
edge,q2,6,7,6,18,8,
edge,q2-r2,7,1,7,18,7,
edge,r1,1,2,13,0,12,
edge,r1,2,3,13,1,11,
edge,r1,3,4,14,2,10,
edge,r1,4,5,15,3,9,
edge,r1,5,6,16,4,8,
edge,r1,6,7,17,5,7,printed r_{1,6}p_{1,7} names no edge; stored as r1:6-r1:7
edge,r1-p2,7,7,18,6,6,
edge,r2,1,2,8,17,6,
edge,r2,2,3,9,16,5,
edge,p1-s1,6,5,5,8,17,
edge,u1-r1,1,2,12,1,11,
edge,s2-p2,3,4,15,9,3,
edge,t2-r2,1,2,8,16,6,
edge,r2,3,4,10,15,4,
edge,r2,4,5,11,14,3,
edge,r2,5,6,12,13,2,
edge,r2,6,7,13,13,1,
edge,r2-p2,7,1,14,13,0,
edge,s1,1,2,2,11,13,
edge,s1,2,3,3,10,14,
edge,s1,3,4,4,9,15,
edge,s1,4,5,5,8,16,
edge,s1-t1,5,1,6,7,16,
edge,s2,1,2,13,10,2,
edge,s2,2,3,14,9,3,
edge,s2,3,4,15,8,4,
edge,s2,4,5,16,7,5,
edge,t1,1,2,7,6,15,
edge,t1,2,3,8,5,14,
edge,t1,3,4,9,4,13,
edge,t1,4,5,10,3,12,
edge,q1-t1,2,1,7,6,16,
edge,u1-r1,3,4,14,3,9,
edge,s2-p2,1,2,13,11,1,
edge,u2-q2,5,6,6,17,8,
edge,t1-u1,5,1,11,2,11,printed t_{1,5}r_{1,1} names no edge; stored as t1:5-u1:1
edge,t2,1,2,8,15,6,
edge,t2,2,3,9,14,5,
edge,t2,3,4,10,13,4,
edge,t2,4,5,11,12,3,
edge,t2-s2,5,1,12,11,2,
edge,u1,1,2,12,2,10,
edge,u1,2,3,13,3,9,
edge,u1,3,4,14,4,8,
edge,u1,4,5,15,5,7,
edge,u1-s2,5,5,16,6,6,
edge,u2,1,2,3,13,11,
edge,u2,2,3,4,14,10,
edge,u2,3,4,5,15,9,
edge,u2,4,5,6,16,8,
edge,u2-t2,5,1,7,16,7,
edge,u2-s1,1,1,2,12,12,
edge,p1-s1,2,1,1,12,13,
edge,t1-q1,3,4,9,4,14,
edge,r1-u1,6,5,16,5,7,
edge,t2-r2,5,6,12,12,2,
edge,u2-q2,3,4,4,15,10,
)csv";

// 72 vertex rows.
inline const std::vector<FixtureRow> & hc444_vertex_fixture()
{
    static const std::vector<FixtureRow> rows = parse_fixture_csv(hc444_vertices_csv);
    return rows;
}

// 89 edge rows; the table has no row for the edge p1:1-q2:1.
inline const std::vector<FixtureRow> & hc444_edge_fixture()
{
    static const std::vector<FixtureRow> rows = parse_fixture_csv(hc444_edges_csv);
    return rows;
}

} // namespace metricdim

#endif
