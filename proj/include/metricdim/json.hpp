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

#ifndef METRICDIM_JSON_HPP
#define METRICDIM_JSON_HPP

// JSON serialization. Key order is fixed, so identical inputs give identical
// bytes. Wall-clock timing lives only under "metadata", which callers may
// omit.

#include <metricdim/audit.hpp>
#include <metricdim/generators.hpp>
#include <metricdim/graph.hpp>
#include <metricdim/search.hpp>

#include <json.hpp>

namespace metricdim
{

using Json = nlohmann::ordered_json;

namespace detail
{
    inline Json optional_code(const std::optional<Code> & c) { return c ? Json(*c) : Json(nullptr); }

    inline Json names(const LabeledGraph & g, const std::vector<VertexId> & vs)
    {
        Json out = Json::array();
        for (auto v : vs)
            out.push_back(g.vertex_name(v));
        return out;
    }
}

inline Json to_json(const LabeledGraph & g, const DimensionResult & r, bool include_metadata = false)
{
    Json j;
    j["variant"] = std::string(to_string(r.variant));
    j["status"] = std::string(to_string(r.status));
    j["value"] = r.value ? Json(*r.value) : Json(nullptr);
    j["certified"] = r.certified;
    j["witness"] = detail::names(g, r.witness);
    j["witness_ids"] = r.witness;
    j["require_independent"] = r.require_independent;
    j["lower_bound"] = r.lower_bound;
    j["start_size"] = r.start_size;
    j["cap"] = r.cap;
    j["smallest_resolving_size"] = r.smallest_resolving_size ? Json(*r.smallest_resolving_size) : Json(nullptr);
    Json trail = Json::array();
    for (const auto & s : r.trail)
        trail.push_back({{"size", s.size},
                         {"basis", s.basis},
                         {"subsets", s.subsets},
                         {"exhaustive", s.exhaustive},
                         {"resolving_found", s.resolving_found},
                         {"independent_found", s.independent_found}});
    j["trail"] = std::move(trail);
    j["subsets_examined"] = r.subsets_examined;
    j["message"] = r.message;
    if (include_metadata)
        j["metadata"] = {{"elapsed_ms", r.elapsed_ms}};
    return j;
}

inline Json to_json(const ValidationReport & report)
{
    Json checks = Json::array();
    for (const auto & c : report.checks)
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
    return {{"passed", report.passed()}, {"checks", std::move(checks)}};
}

inline Json to_json(const StructureProfile & p)
{
    Json j;
    j["vertices"] = p.vertices;
    j["edges"] = p.edges;
    j["degree2"] = p.degree2;
    j["degree3"] = p.degree3;
    j["components"] = p.components;
    j["hexagons"] = p.hexagons;
    return j;
}

inline Json to_json(const LabeledGraph & g)
{
    Json vertices = Json::array();
    for (VertexId v = 0; v < g.order(); ++v)
        vertices.push_back({{"id", v}, {"label", g.vertex_name(v)}, {"degree", g.degree(v)}});
    Json edges = Json::array();
    for (const auto & e : g.edges())
        edges.push_back(Json::array({e.u, e.v}));
    return {{"order", g.order()}, {"size", g.size()}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

inline Json to_json(const AuditReport & r)
{
    Json j;
    j["instance"] = {{"kind", r.kind}, {"a", r.a}, {"b", r.b}, {"c", r.c}, {"landmarks", r.landmarks}};

    Json rows = Json::array();
    for (const auto & row : r.rows) {
        Json x;
        if (! row.group.empty())
            x["group"] = row.group;
        x["element"] = row.element;
        x["kind"] = row.kind == Element::Kind::Vertex ? "vertex" : "edge";
        x["family"] = row.family;
        x["index"] = row.index;
        x["expected"] = detail::optional_code(row.expected);
        x["oracle"] = detail::optional_code(row.oracle);
        x["match"] = row.match;
        if (! row.note.empty())
            x["note"] = row.note;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);

    Json summary;
    summary["rows"] = r.rows.size();
    summary["matched"] = r.matched;
    summary["mismatched"] = r.mismatched;
    Json families = Json::array();
    for (const auto & f : r.families) {
        Json x;
        if (! f.group.empty())
            x["group"] = f.group;
        x["family"] = f.family;
        x["rows"] = f.rows;
        x["matched"] = f.matched;
        x["mismatched"] = f.mismatched;
        families.push_back(std::move(x));
    }
    summary["families"] = std::move(families);

    if (r.bookkeeping) {
        const auto & bk = *r.bookkeeping;
        Json classes = Json::array();
        for (const auto & c : bk.classes)
            classes.push_back({{"name", c.name},
                               {"printed", c.printed},
                               {"stated", c.stated},
                               {"generated", c.generated},
                               {"agrees", c.agrees}});
        summary["bookkeeping"] = {{"formula", bk.expected_formula},
                                  {"expected_total", bk.expected_total},
                                  {"element_count", bk.element_count},
                                  {"stated_sum", bk.stated_sum},
                                  {"holds", bk.holds()},
                                  {"classes", std::move(classes)}};
    }
    if (r.collisions) {
        Json ex = Json::array();
        for (const auto & [x, y] : r.collisions->examples)
            ex.push_back(Json::array({x, y}));
        summary["oracle_collisions"] = {{"vertex_vertex", r.collisions->vertex_vertex},
                                        {"edge_edge", r.collisions->edge_edge},
                                        {"vertex_edge", r.collisions->vertex_edge},
                                        {"examples", std::move(ex)}};
    }
    {
        Json fc = Json::array();
        for (const auto & [x, y] : r.formula_collisions)
            fc.push_back(Json::array({x, y}));
        summary["printed_code_collisions"] = std::move(fc);
    }
    if (! r.hypotheses.empty()) {
        Json hs = Json::array();
        for (const auto & h : r.hypotheses)
            hs.push_back({{"name", h.name},
                          {"landmarks", h.landmarks},
                          {"rep_length", h.rep_length},
                          {"multiset_resolving", h.multiset_resolving},
                          {"matched", h.matched},
                          {"rows", h.rows}});
        summary["hypotheses"] = std::move(hs);
    }
    Json diags = Json::array();
    for (const auto & d : r.diagnostics) {
        Json boundary = Json::array();
        for (const auto & b : d.boundary)
            boundary.push_back({{"index", b.index},
                                {"claimed_by", b.claimed_by},
                                {"other_case", b.other_case},
                                {"claimed_value", b.claimed_value},
                                {"other_value", b.other_value},
                                {"agree", b.agree}});
        diags.push_back({{"family", d.family},
                         {"uncovered", d.coverage.uncovered},
                         {"overlapping", d.coverage.overlapping},
                         {"boundary", std::move(boundary)}});
    }
    summary["formula_diagnostics"] = std::move(diags);
    if (r.kind == "hc444-fixture")
        summary["unlisted_elements"] = r.unlisted;
    summary["notes"] = r.notes;
    j["summary"] = std::move(summary);
    return j;
}

} // namespace metricdim

#endif
