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

#ifndef METRICDIM_GENERATORS_HPP
#define METRICDIM_GENERATORS_HPP

#include <metricdim/graph.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metricdim
{

// Hollow (zigzag-edge) coronoid HC(a,b,c): six linear polyacene segments of
// a, b, c, a, b, c rings fused into a closed loop.
struct HcParams
{
    int a = 4, b = 4, c = 4;
};

// Starphene SP(a,b,c): three polyacene arms of a, b, c rings around a central
// hexagon.
struct SpParams
{
    int a = 1, b = 1, c = 1;
};

inline void check_params(const HcParams & p)
{
    if (p.a < 2 || p.b < 2 || p.c < 2)
        throw std::invalid_argument("HC parameters must satisfy a, b, c >= 2 (got " + std::to_string(p.a) + "," +
                                    std::to_string(p.b) + "," + std::to_string(p.c) + ")");
}

inline void check_params(const SpParams & p)
{
    if (p.a < 1 || p.b < 1 || p.c < 1)
        throw std::invalid_argument("SP parameters must satisfy a, b, c >= 1 (got " + std::to_string(p.a) + "," +
                                    std::to_string(p.b) + "," + std::to_string(p.c) + ")");
}

// Number of vertices in each family of HC(a,b,c).
inline int family_size(const HcParams & p, Family f)
{
    switch (f) {
        case Family::P1: case Family::P2: return 2 * p.a - 1;
        case Family::Q1: case Family::Q2: return 2 * p.c - 1;
        case Family::R1: case Family::R2: return 2 * p.b - 1;
        case Family::S1: case Family::S2: return 2 * p.a - 3;
        case Family::U1: case Family::T2: return 2 * p.b - 3;
        case Family::T1: case Family::U2: return 2 * p.c - 3;
    }
    return 0;
}

// Number of vertices in each family of SP(a,b,c); s, t, u are absent.
inline int family_size(const SpParams & p, Family f)
{
    switch (f) {
        case Family::P1: case Family::P2: return 2 * p.b - 1;
        case Family::Q1: case Family::Q2: return 2 * p.c - 1;
        case Family::R1: case Family::R2: return 2 * p.a - 1;
        default: return 0;
    }
}

using LabelPair = std::pair<VertexLabel, VertexLabel>;

// The twelve connector edges closing the outer and inner cycles, in the order
// eta_1 .. eta_12. The u1 -> s2 connector lands on the last s2 vertex.
inline std::array<LabelPair, 12> hc_connectors(const HcParams & p)
{
    const int i = 2 * p.a - 1, j = 2 * p.c - 1, k = 2 * p.b - 1;
    using F = Family;
    return {{
        {{F::P1, 1}, {F::Q2, 1}},
        {{F::S1, 1}, {F::U2, 1}},
        {{F::P1, i}, {F::Q1, 1}},
        {{F::S1, i - 2}, {F::T1, 1}},
        {{F::Q1, j}, {F::R1, 1}},
        {{F::T1, j - 2}, {F::U1, 1}},
        {{F::R1, k}, {F::P2, i}},
        {{F::U1, k - 2}, {F::S2, 2 * p.a - 3}},
        {{F::P2, 1}, {F::R2, k}},
        {{F::S2, 1}, {F::T2, k - 2}},
        {{F::R2, 1}, {F::Q2, j}},
        {{F::T2, 1}, {F::U2, j - 2}},
    }};
}

// Spoke edges join an outer family vertex with even index 2g to the inner
// family vertex 2g-1.
struct SpokeFamily
{
    Family outer;
    Family inner;
};

inline constexpr std::array<SpokeFamily, 6> hc_spoke_families = {{
    {Family::P1, Family::S1},
    {Family::Q1, Family::T1},
    {Family::R1, Family::U1},
    {Family::P2, Family::S2},
    {Family::R2, Family::T2},
    {Family::Q2, Family::U2},
}};

inline bool is_outer_family(Family f)
{
    return f == Family::P1 || f == Family::P2 || f == Family::Q1 || f == Family::Q2 || f == Family::R1 ||
           f == Family::R2;
}

namespace detail
{
    class LabeledBuilder
    {
    public:
        VertexId add(Family f, int index)
        {
            VertexId id = static_cast<VertexId>(labels_.size());
            labels_.push_back({f, index});
            ids_.emplace(VertexLabel{f, index}, id);
            return id;
        }

        void add_family(Family f, int count)
        {
            for (int g = 1; g <= count; ++g)
                add(f, g);
        }

        void connect(const VertexLabel & x, const VertexLabel & y)
        {
            auto ix = ids_.find(x), iy = ids_.find(y);
            if (ix == ids_.end() || iy == ids_.end())
                throw std::logic_error("generator references missing vertex " +
                                       to_string(ix == ids_.end() ? x : y));
            edges_.emplace_back(ix->second, iy->second);
        }

        void path(Family f, int count)
        {
            for (int g = 1; g < count; ++g)
                connect({f, g}, {f, g + 1});
        }

        LabeledGraph build() const { return graph_from_edges(labels_.size(), edges_, labels_, true); }

    private:
        std::vector<VertexLabel> labels_;
        std::map<VertexLabel, VertexId> ids_;
        std::vector<std::pair<VertexId, VertexId>> edges_;
    };
}

// Vertex ids follow family order p1, p2, q1, q2, r1, r2, s1, s2, t1, t2, u1,
// u2 and then index.
inline LabeledGraph build_hc(const HcParams & p)
{
    check_params(p);
    detail::LabeledBuilder b;
    for (Family f : all_families)
        b.add_family(f, family_size(p, f));
    for (Family f : all_families)
        b.path(f, family_size(p, f));
    for (auto s : hc_spoke_families) {
        int spokes = (family_size(p, s.outer) - 1) / 2;
        for (int g = 1; g <= spokes; ++g)
            b.connect({s.outer, 2 * g}, {s.inner, 2 * g - 1});
    }
    for (auto & [x, y] : hc_connectors(p))
        b.connect(x, y);
    return b.build();
}

inline LabeledGraph build_sp(const SpParams & p)
{
    check_params(p);
    detail::LabeledBuilder b;
    const std::array<Family, 6> families = {Family::P1, Family::P2, Family::Q1, Family::Q2, Family::R1, Family::R2};
    for (Family f : families)
        b.add_family(f, family_size(p, f));
    for (Family f : families)
        b.path(f, family_size(p, f));
    for (auto [side1, side2] : {std::pair{Family::P1, Family::P2}, std::pair{Family::Q1, Family::Q2},
                                std::pair{Family::R1, Family::R2}})
        for (int g = 1; 2 * g - 1 <= family_size(p, side1); ++g)
            b.connect({side1, 2 * g - 1}, {side2, 2 * g - 1});
    b.connect({Family::P1, 1}, {Family::R2, 1});
    b.connect({Family::R1, 1}, {Family::Q2, 1});
    b.connect({Family::Q1, 1}, {Family::P2, 1});
    return b.build();
}

// Closed-form structural counts for a generated instance.
struct StructureProfile
{
    enum class Decomposition { None, HcTwoCycles, SpSixPaths };

    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t degree2 = 0;
    std::size_t degree3 = 0;
    Decomposition decomposition = Decomposition::None;
    // HC: {inner, outer} face-cycle lengths. SP: six arm path lengths (vertex
    // counts). Sorted ascending.
    std::vector<std::size_t> components;
    std::size_t hexagons = 0;
};

inline StructureProfile hc_profile(const HcParams & p)
{
    const std::size_t s = static_cast<std::size_t>(p.a + p.b + p.c);
    StructureProfile prof;
    prof.vertices = 8 * (s - 3);
    prof.edges = 10 * (s - 3);
    prof.degree2 = 4 * s - 12;
    prof.degree3 = 4 * s - 12;
    prof.decomposition = StructureProfile::Decomposition::HcTwoCycles;
    prof.components = {4 * s - 18, 4 * s - 6};
    prof.hexagons = 2 * s - 6;
    return prof;
}

inline StructureProfile sp_profile(const SpParams & p)
{
    const std::size_t s = static_cast<std::size_t>(p.a + p.b + p.c);
    StructureProfile prof;
    prof.vertices = 2 * (2 * s - 3);
    prof.edges = 5 * s - 9;
    prof.degree2 = 2 * s;
    prof.degree3 = 2 * (s - 3);
    prof.decomposition = StructureProfile::Decomposition::SpSixPaths;
    for (Family f : {Family::P1, Family::P2, Family::Q1, Family::Q2, Family::R1, Family::R2})
        prof.components.push_back(static_cast<std::size_t>(family_size(p, f)));
    std::sort(prof.components.begin(), prof.components.end());
    prof.hexagons = s - 2;
    return prof;
}

struct StructureCheck
{
    std::string name;
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct ValidationReport
{
    std::vector<StructureCheck> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const auto & c) { return c.passed; });
    }
};

namespace detail
{
    inline std::string join_sizes(const std::vector<std::size_t> & xs)
    {
        std::string out = "[";
        for (std::size_t i = 0; i < xs.size(); ++i)
            out += (i ? "," : "") + std::to_string(xs[i]);
        return out + "]";
    }

    // Deletes the edges selected by `drop` and describes what remains: the
    // sorted component sizes and whether each component is a cycle (all
    // degrees 2) or a path (two ends of degree <= 1).
    template <typename Drop>
    std::pair<std::vector<std::size_t>, bool> components_after(const LabeledGraph & g, Drop drop, bool want_cycles)
    {
        const auto n = g.order();
        std::vector<std::vector<VertexId>> adj(n);
        for (const auto & e : g.edges())
            if (! drop(e)) {
                adj[e.u].push_back(e.v);
                adj[e.v].push_back(e.u);
            }
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> sizes;
        bool shape_ok = true;
        for (VertexId s = 0; s < n; ++s) {
            if (seen[s])
                continue;
            std::vector<VertexId> stack{s};
            seen[s] = 1;
            std::size_t count = 0, edge_ends = 0, max_deg = 0;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                ++count;
                edge_ends += adj[v].size();
                max_deg = std::max(max_deg, adj[v].size());
                for (auto w : adj[v])
                    if (! seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            std::size_t component_edges = edge_ends / 2;
            if (want_cycles)
                shape_ok = shape_ok && max_deg == 2 && component_edges == count;
            else
                shape_ok = shape_ok && max_deg <= 2 && component_edges + 1 == count;
            sizes.push_back(count);
        }
        std::sort(sizes.begin(), sizes.end());
        return {sizes, shape_ok};
    }
}

// Checks a graph against closed-form counts. Never throws; failures are
// carried in the report.
inline ValidationReport validate_structure(const LabeledGraph & g, const StructureProfile & profile)
{
    ValidationReport report;
    auto add = [&](std::string name, std::size_t expected, std::size_t actual) {
        report.checks.push_back({std::move(name), std::to_string(expected), std::to_string(actual), expected == actual});
    };

    add("vertex_count", profile.vertices, g.order());
    add("edge_count", profile.edges, g.size());

    std::map<std::size_t, std::size_t> histogram;
    for (VertexId v = 0; v < g.order(); ++v)
        ++histogram[g.degree(v)];
    auto count_of = [&](std::size_t d) { return histogram.count(d) ? histogram[d] : 0; };
    add("degree2_count", profile.degree2, count_of(2));
    add("degree3_count", profile.degree3, count_of(3));
    std::size_t other = 0;
    for (auto [d, c] : histogram)
        if (d != 2 && d != 3)
            other += c;
    add("other_degree_count", 0, other);

    report.checks.push_back({"connected", "true", g.connected() ? "true" : "false", g.connected()});

    using D = StructureProfile::Decomposition;
    if (profile.decomposition != D::None) {
        const bool hc = profile.decomposition == D::HcTwoCycles;
        std::string name = hc ? "spoke_deleted_cycles" : "arm_paths";
        if (! g.has_labels()) {
            report.checks.push_back({name, detail::join_sizes(profile.components), "unlabelled graph", false});
        }
        else {
            auto drop = [&](const Edge & e) {
                auto fu = g.label(e.u)->family, fv = g.label(e.v)->family;
                return hc ? is_outer_family(fu) != is_outer_family(fv) : fu != fv;
            };
            auto [sizes, shape_ok] = detail::components_after(g, drop, hc);
            std::string actual = detail::join_sizes(sizes) + (shape_ok ? "" : hc ? " (not all cycles)" : " (not all paths)");
            report.checks.push_back({name, detail::join_sizes(profile.components), actual,
                                     shape_ok && sizes == profile.components});
        }
    }
    return report;
}

} // namespace metricdim

#endif
