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

#ifndef METRICDIM_AUDIT_HPP
#define METRICDIM_AUDIT_HPP

// Cross-checks published closed forms and tables against breadth-first
// distances on the generated graphs. Discrepancies are reported, never
// corrected.

#include <metricdim/detail/parallel.hpp>
#include <metricdim/fixtures.hpp>
#include <metricdim/formulas.hpp>
#include <metricdim/generators.hpp>
#include <metricdim/graph.hpp>
#include <metricdim/resolvability.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace metricdim
{

struct AuditRow
{
    // Hypothesis name for SP audits, empty otherwise.
    std::string group;
    std::string element;
    Element::Kind kind = Element::Kind::Vertex;
    std::string family;
    int index = 0;
    std::optional<Code> expected;
    std::optional<Code> oracle;
    bool match = false;
    std::string note;
};

struct FamilySummary
{
    std::string group;
    std::string family;
    std::size_t rows = 0;
    std::size_t matched = 0;
    std::size_t mismatched = 0;
};

// One class of the proof's disjoint-class argument: its printed size against
// the number of elements the construction produces.
struct ClassSize
{
    std::string name;
    std::string printed;
    int stated = 0;
    int generated = 0;
    bool agrees = false;
};

struct Bookkeeping
{
    std::vector<ClassSize> classes;
    int stated_sum = 0;
    int expected_total = 0;
    int element_count = 0;
    std::string expected_formula;

    bool holds() const
    {
        return stated_sum == expected_total && element_count == expected_total &&
               std::all_of(classes.begin(), classes.end(), [](const auto & c) { return c.agrees; });
    }
};

// Pairs of audited elements whose oracle codes coincide, split by kind.
struct CollisionReport
{
    std::size_t vertex_vertex = 0;
    std::size_t edge_edge = 0;
    std::size_t vertex_edge = 0;
    std::vector<std::pair<std::string, std::string>> examples;
};

struct HypothesisResult
{
    std::string name;
    std::vector<std::string> landmarks;
    std::size_t rep_length = 0;
    bool multiset_resolving = false;
    std::size_t matched = 0;
    std::size_t rows = 0;

    double match_fraction() const { return rows ? static_cast<double>(matched) / static_cast<double>(rows) : 0.0; }
};

struct FormulaDiagnostics
{
    std::string family;
    CaseCoverage coverage;
    std::vector<BoundaryComparison> boundary;
};

struct AuditReport
{
    std::string kind;
    int a = 0, b = 0, c = 0;
    std::vector<std::string> landmarks;
    std::vector<AuditRow> rows;
    std::vector<FamilySummary> families;
    std::size_t matched = 0;
    std::size_t mismatched = 0;

    std::optional<Bookkeeping> bookkeeping;
    std::optional<CollisionReport> collisions;
    // Pairs of distinct elements whose printed codes coincide.
    std::vector<std::pair<std::string, std::string>> formula_collisions;
    std::vector<FormulaDiagnostics> diagnostics;
    std::vector<HypothesisResult> hypotheses;
    // Graph elements with no fixture row.
    std::vector<std::string> unlisted;
    std::vector<std::string> notes;

    bool clean() const { return mismatched == 0; }

    std::vector<const AuditRow *> mismatches() const
    {
        std::vector<const AuditRow *> out;
        for (const auto & r : rows)
            if (! r.match)
                out.push_back(&r);
        return out;
    }

    const FamilySummary * family(std::string_view name, std::string_view group = "") const
    {
        for (const auto & f : families)
            if (f.family == name && f.group == group)
                return &f;
        return nullptr;
    }
};

namespace detail
{
    inline void summarize(AuditReport & report)
    {
        report.families.clear();
        report.matched = report.mismatched = 0;
        std::map<std::pair<std::string, std::string>, std::size_t> slot;
        for (const auto & r : report.rows) {
            auto key = std::pair{r.group, r.family};
            auto it = slot.find(key);
            if (it == slot.end()) {
                it = slot.emplace(key, report.families.size()).first;
                report.families.push_back({r.group, r.family, 0, 0, 0});
            }
            auto & f = report.families[it->second];
            ++f.rows;
            if (r.match) {
                ++f.matched;
                ++report.matched;
            }
            else {
                ++f.mismatched;
                ++report.mismatched;
            }
        }
    }

    inline std::optional<HcFamily> vertex_formula_family(Family f)
    {
        switch (f) {
            case Family::P1: return HcFamily::P1;
            case Family::Q1: return HcFamily::Q1;
            case Family::R1: return HcFamily::R1;
            case Family::P2: return HcFamily::P2;
            case Family::Q2: return HcFamily::Q2;
            case Family::R2: return HcFamily::R2;
            case Family::S1: return HcFamily::S1;
            case Family::T1: return HcFamily::T1;
            case Family::U1: return HcFamily::U1;
            case Family::S2: return HcFamily::S2;
            case Family::U2: return HcFamily::U2;
            case Family::T2: return HcFamily::T2;
        }
        return std::nullopt;
    }

    inline HcFamily path_formula_family(Family f)
    {
        switch (f) {
            case Family::P1: return HcFamily::P1P1;
            case Family::Q1: return HcFamily::Q1Q1;
            case Family::R1: return HcFamily::R1R1;
            case Family::S1: return HcFamily::S1S1;
            case Family::T1: return HcFamily::T1T1;
            case Family::U1: return HcFamily::U1U1;
            case Family::P2: return HcFamily::P2P2;
            case Family::Q2: return HcFamily::Q2Q2;
            case Family::R2: return HcFamily::R2R2;
            case Family::S2: return HcFamily::S2S2;
            case Family::T2: return HcFamily::T2T2;
            case Family::U2: return HcFamily::U2U2;
        }
        return HcFamily::P1P1;
    }

    inline HcFamily spoke_formula_family(Family outer)
    {
        switch (outer) {
            case Family::P1: return HcFamily::P1S1;
            case Family::Q1: return HcFamily::Q1T1;
            case Family::R1: return HcFamily::R1U1;
            case Family::P2: return HcFamily::P2S2;
            case Family::R2: return HcFamily::R2T2;
            default: return HcFamily::Q2U2;
        }
    }
}

// Formula family and index of an element of HC(a,b,c).
inline std::pair<HcFamily, int> classify_hc_element(const LabeledGraph & g, const HcParams & p, const Element & x)
{
    if (! g.has_labels())
        throw GraphError("HC classification needs a labelled graph");
    if (x.kind == Element::Kind::Vertex) {
        auto l = *g.label(static_cast<VertexId>(x.id));
        return {*detail::vertex_formula_family(l.family), l.index};
    }
    const auto & e = g.edges().at(x.id);
    auto lu = *g.label(e.u), lv = *g.label(e.v);
    if (lu.family == lv.family && std::abs(lu.index - lv.index) == 1)
        return {detail::path_formula_family(lu.family), std::min(lu.index, lv.index)};
    auto connectors = hc_connectors(p);
    for (std::size_t i = 0; i < connectors.size(); ++i) {
        auto [x1, y1] = connectors[i];
        if ((x1 == lu && y1 == lv) || (x1 == lv && y1 == lu))
            return {static_cast<HcFamily>(static_cast<int>(HcFamily::Eta1) + static_cast<int>(i)), 1};
    }
    for (auto s : hc_spoke_families) {
        const VertexLabel * outer = lu.family == s.outer ? &lu : lv.family == s.outer ? &lv : nullptr;
        const VertexLabel * inner = lu.family == s.inner ? &lu : lv.family == s.inner ? &lv : nullptr;
        if (outer && inner && outer->index % 2 == 0 && inner->index == outer->index - 1)
            return {detail::spoke_formula_family(s.outer), outer->index / 2};
    }
    throw GraphError("edge " + g.edge_name(e) + " matches no HC edge family");
}

inline std::vector<VertexLabel> hc_default_landmarks()
{
    return {{Family::P1, 1}, {Family::R1, 1}, {Family::P2, 1}};
}

namespace detail
{
    inline Bookkeeping hc_bookkeeping(const HcParams & p, const std::map<HcFamily, int> & generated, int element_count)
    {
        using namespace expr;
        using F = HcFamily;
        struct Entry
        {
            const char * name;
            Affine size;
            const char * printed;
            std::vector<F> members;
        };
        const std::vector<Entry> entries = {
            {"V1", 2 * A - 1, "2a-1", {F::P1}},       {"V4", 2 * A - 1, "2a-1", {F::P2}},
            {"V2", 2 * C - 1, "2c-1", {F::Q1}},       {"V5", 2 * C - 1, "2c-1", {F::Q2}},
            {"V3", 2 * B - 1, "2b-1", {F::R1}},       {"V6", 2 * B - 1, "2b-1", {F::R2}},
            {"W1", 2 * A - 3, "2a-3", {F::S1}},       {"W4", 2 * A - 3, "2a-3", {F::S2}},
            {"W2", 2 * C - 3, "2c-3", {F::T1}},       {"W5", 2 * C - 3, "2c-3", {F::U2}},
            {"W3", 2 * B - 3, "2b-3", {F::U1}},       {"W6", 2 * B - 3, "2b-3", {F::T2}},
            {"P1", 2 * A - 2, "2a-2", {F::P1P1}},     {"P2", 2 * A - 2, "2a-2", {F::P2P2}},
            {"Q1", 2 * C - 2, "2c-2", {F::Q1Q1}},     {"Q2", 2 * C - 2, "2c-2", {F::Q2Q2}},
            {"R1", 2 * B - 2, "2b-2", {F::R1R1}},     {"R2", 2 * B - 2, "2b-2", {F::R2R2}},
            {"S1", 2 * A - 4, "2a-4", {F::S1S1}},     {"S2", 2 * A - 4, "2a-4", {F::S2S2}},
            {"T1", 2 * C - 4, "2c-4", {F::T1T1}},     {"U2", 2 * C - 4, "2c-4", {F::U2U2}},
            {"T2", 2 * B - 4, "2b-4", {F::T2T2}},     {"U1", 2 * B - 4, "2b-4", {F::U1U1}},
            {"PS1", A - 1, "a-1", {F::P1S1}},         {"PS2", A - 1, "a-1", {F::P2S2}},
            {"RU1", B - 1, "b-1", {F::R1U1}},         {"RT2", B - 1, "b-1", {F::R2T2}},
            {"QT1", C - 1, "c-1", {F::Q1T1}},         {"QU2", C - 1, "c-1", {F::Q2U2}},
            {"V7", lit(12), "12",
             {F::Eta1, F::Eta2, F::Eta3, F::Eta4, F::Eta5, F::Eta6, F::Eta7, F::Eta8, F::Eta9, F::Eta10, F::Eta11,
              F::Eta12}},
        };
        Bookkeeping bk;
        for (const auto & e : entries) {
            int stated = e.size(p.a, p.b, p.c, 0);
            int gen = 0;
            for (auto f : e.members)
                if (auto it = generated.find(f); it != generated.end())
                    gen += it->second;
            bk.classes.push_back({e.name, e.printed, stated, gen, stated == gen});
            bk.stated_sum += stated;
        }
        bk.expected_total = 18 * (p.a + p.b + p.c - 3);
        bk.expected_formula = "18(a+b+c-3)";
        bk.element_count = element_count;
        return bk;
    }

    template <typename Name>
    CollisionReport oracle_collisions(const std::vector<Element> & elements, const std::vector<Code> & codes, Name name)
    {
        CollisionReport out;
        std::map<Code, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < elements.size(); ++i)
            groups[codes[i]].push_back(i);
        for (const auto & [code, members] : groups)
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    const auto & x = elements[members[i]];
                    const auto & y = elements[members[j]];
                    if (x.kind != y.kind)
                        ++out.vertex_edge;
                    else if (x.kind == Element::Kind::Vertex)
                        ++out.vertex_vertex;
                    else
                        ++out.edge_edge;
                    if (out.examples.size() < 20)
                        out.examples.emplace_back(name(x), name(y));
                }
        return out;
    }
}

// Compares every vertex and edge code of HC(a,b,c) from the printed formulas
// with breadth-first distances. Rows are ordered by formula family, then
// index.
inline AuditReport audit_hc(const HcParams & p, const std::vector<VertexLabel> & landmark_labels = hc_default_landmarks(),
                            unsigned threads = 1)
{
    const auto g = build_hc(p);
    const auto dm = all_pairs_distances(g);
    std::vector<VertexId> landmarks;
    for (const auto & l : landmark_labels)
        landmarks.push_back(g.require(l));

    AuditReport report;
    report.kind = "hc";
    report.a = p.a;
    report.b = p.b;
    report.c = p.c;
    for (const auto & l : landmark_labels)
        report.landmarks.push_back(to_string(l));
    if (landmark_labels != hc_default_landmarks())
        report.notes.push_back("printed formulas assume landmarks (p1:1, r1:1, p2:1)");

    const auto elements = compared_elements(g, Variant::MixedMetric);
    std::vector<Code> oracle(elements.size());
    std::vector<std::pair<HcFamily, int>> where(elements.size());
    std::vector<std::optional<Code>> printed(elements.size());
    std::vector<std::string> notes(elements.size());
    detail::parallel_for(elements.size(), threads, [&](std::size_t i) {
        oracle[i] = code(g, dm, elements[i], landmarks);
        where[i] = classify_hc_element(g, p, elements[i]);
        try {
            printed[i] = hc_formula_code(where[i].first, where[i].second, p);
        }
        catch (const std::out_of_range & e) {
            notes[i] = e.what();
        }
    });

    std::vector<std::size_t> order(elements.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return where[x] < where[y]; });

    std::map<HcFamily, int> generated;
    for (auto i : order) {
        AuditRow row;
        row.element = element_name(g, elements[i]);
        row.kind = elements[i].kind;
        row.family = std::string(to_string(where[i].first));
        row.index = where[i].second;
        row.expected = printed[i];
        row.oracle = oracle[i];
        row.match = printed[i] && *printed[i] == oracle[i];
        row.note = notes[i];
        report.rows.push_back(std::move(row));
        ++generated[where[i].first];
    }
    detail::summarize(report);

    report.bookkeeping =
        detail::hc_bookkeeping(p, generated, static_cast<int>(g.order() + g.size()));
    report.collisions = detail::oracle_collisions(elements, oracle, [&](const Element & x) { return element_name(g, x); });

    std::map<Code, std::vector<std::string>> by_printed;
    for (const auto & r : report.rows)
        if (r.expected)
            by_printed[*r.expected].push_back(r.element);
    for (const auto & [code, names] : by_printed)
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                report.formula_collisions.emplace_back(names[i], names[j]);

    for (int f = 0; f < hc_family_count; ++f) {
        const auto & fam = info(static_cast<HcFamily>(f));
        FormulaDiagnostics d{std::string(fam.name), case_coverage(fam, p.a, p.b, p.c),
                             boundary_consistency(fam, p.a, p.b, p.c)};
        if (! d.coverage.partitions() ||
            std::any_of(d.boundary.begin(), d.boundary.end(), [](const auto & x) { return ! x.agree; }))
            report.diagnostics.push_back(std::move(d));
    }
    return report;
}

// Landmark hypotheses for the starphene multiset audit: the printed four-set
// {p1:2b-1, r1:2a-1, q2:1, q2:3} followed by its four 3-subsets.
struct SpHypothesis
{
    std::string name;
    std::vector<VertexLabel> landmarks;
};

inline std::vector<SpHypothesis> sp_default_hypotheses(const SpParams & p)
{
    const std::vector<VertexLabel> stated = {
        {Family::P1, 2 * p.b - 1}, {Family::R1, 2 * p.a - 1}, {Family::Q2, 1}, {Family::Q2, 3}};
    std::vector<SpHypothesis> out{{"stated", stated}};
    for (std::size_t drop = 0; drop < stated.size(); ++drop) {
        SpHypothesis h;
        h.name = "without_" + to_string(stated[drop]);
        for (std::size_t i = 0; i < stated.size(); ++i)
            if (i != drop)
                h.landmarks.push_back(stated[i]);
        out.push_back(std::move(h));
    }
    return out;
}

// Compares printed multirepresentation triples with oracle multisets for each
// landmark hypothesis. Triples are compared as multisets.
inline AuditReport audit_sp(const SpParams & p, std::vector<SpHypothesis> hypotheses = {})
{
    if (hypotheses.empty())
        hypotheses = sp_default_hypotheses(p);
    const auto g = build_sp(p);
    const auto dm = all_pairs_distances(g);

    AuditReport report;
    report.kind = "sp";
    report.a = p.a;
    report.b = p.b;
    report.c = p.c;
    for (const auto & l : hypotheses.front().landmarks)
        report.landmarks.push_back(to_string(l));

    std::vector<std::pair<SpFamily, int>> where(g.order());
    std::vector<Code> printed(g.order());
    for (VertexId v = 0; v < g.order(); ++v) {
        auto l = *g.label(v);
        where[v] = {*sp_family_of(l.family), l.index};
        printed[v] = sp_formula_multirep(where[v].first, l.index, p);
    }
    std::vector<VertexId> order(g.order());
    for (VertexId v = 0; v < g.order(); ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return where[x] < where[y]; });

    for (const auto & h : hypotheses) {
        HypothesisResult hr;
        hr.name = h.name;
        std::vector<VertexId> landmarks;
        bool valid = true;
        for (const auto & l : h.landmarks) {
            hr.landmarks.push_back(to_string(l));
            if (auto v = g.find(l))
                landmarks.push_back(*v);
            else
                valid = false;
        }
        if (! valid) {
            report.notes.push_back("hypothesis " + h.name + " names a vertex absent from SP(" + std::to_string(p.a) +
                                   "," + std::to_string(p.b) + "," + std::to_string(p.c) + ")");
            report.hypotheses.push_back(hr);
            continue;
        }
        hr.rep_length = landmarks.size();
        hr.multiset_resolving = is_resolving(g, dm, landmarks, Variant::Multiset).resolving;
        for (auto v : order) {
            auto rep = multiset_rep(g, dm, v, landmarks);
            MultisetCode expected(printed[v]);
            AuditRow row;
            row.group = h.name;
            row.element = g.vertex_name(v);
            row.kind = Element::Kind::Vertex;
            row.family = std::string(to_string(where[v].first));
            row.index = where[v].second;
            row.expected = printed[v];
            row.oracle = rep.values();
            row.match = rep == expected;
            if (rep.size() != expected.size())
                row.note = "representation length " + std::to_string(rep.size()) + " vs printed " +
                           std::to_string(expected.size());
            ++hr.rows;
            if (row.match)
                ++hr.matched;
            report.rows.push_back(std::move(row));
        }
        report.hypotheses.push_back(hr);
    }
    detail::summarize(report);

    // class sizes M1..M6 as printed; the last printed identity names M2 again
    Bookkeeping bk;
    auto count = [&](SpFamily f) {
        return static_cast<int>(std::count_if(where.begin(), where.end(), [&](auto & w) { return w.first == f; }));
    };
    const struct
    {
        const char * name;
        const char * printed;
        int stated;
        SpFamily family;
    } classes[] = {
        {"M1", "2b-1", 2 * p.b - 1, SpFamily::P1}, {"M2", "2b-1", 2 * p.b - 1, SpFamily::P2},
        {"M3", "2c-1", 2 * p.c - 1, SpFamily::Q1}, {"M4", "2c-1", 2 * p.c - 1, SpFamily::Q2},
        {"M5", "2a-1", 2 * p.a - 1, SpFamily::R1}, {"M2 (printed second time)", "2a-1", 2 * p.a - 1, SpFamily::P2},
        {"M6 (not printed)", "-", 2 * p.a - 1, SpFamily::R2},
    };
    for (const auto & cl : classes) {
        int gen = count(cl.family);
        bk.classes.push_back({cl.name, cl.printed, cl.stated, gen, cl.stated == gen});
    }
    for (auto f : {SpFamily::P1, SpFamily::P2, SpFamily::Q1, SpFamily::Q2, SpFamily::R1, SpFamily::R2})
        bk.stated_sum += count(f);
    bk.expected_total = 4 * (p.a + p.b + p.c) - 6;
    bk.expected_formula = "4a+4b+4c-6";
    bk.element_count = static_cast<int>(g.order());
    report.bookkeeping = bk;

    std::map<std::vector<int>, std::vector<std::string>> by_printed;
    for (VertexId v : order)
        by_printed[MultisetCode(printed[v]).values()].push_back(g.vertex_name(v));
    for (const auto & [rep, names] : by_printed)
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                report.formula_collisions.emplace_back(names[i], names[j]);

    for (auto f : {SpFamily::P1, SpFamily::P2, SpFamily::Q1, SpFamily::Q2, SpFamily::R1, SpFamily::R2}) {
        const auto & fam = info(f);
        FormulaDiagnostics d{std::string(fam.name), case_coverage(fam, p.a, p.b, p.c),
                             boundary_consistency(fam, p.a, p.b, p.c)};
        if (! d.coverage.partitions() ||
            std::any_of(d.boundary.begin(), d.boundary.end(), [](const auto & x) { return ! x.agree; }))
            report.diagnostics.push_back(std::move(d));
    }
    report.notes.push_back("printed statement gives msdim = 4, the proof concludes msdim = 3, and the printed "
                           "landmark set has four vertices while the printed representations are triples");
    return report;
}

// Compares every row of the HC(4,4,4) code tables with breadth-first codes.
inline AuditReport fixture_check_hc444(unsigned threads = 1)
{
    const HcParams p{4, 4, 4};
    const auto g = build_hc(p);
    const auto dm = all_pairs_distances(g);
    std::vector<VertexId> landmarks;
    for (const auto & l : hc_default_landmarks())
        landmarks.push_back(g.require(l));

    AuditReport report;
    report.kind = "hc444-fixture";
    report.a = report.b = report.c = 4;
    for (const auto & l : hc_default_landmarks())
        report.landmarks.push_back(to_string(l));

    std::vector<const FixtureRow *> fixture;
    for (const auto & r : hc444_vertex_fixture())
        fixture.push_back(&r);
    for (const auto & r : hc444_edge_fixture())
        fixture.push_back(&r);

    std::vector<AuditRow> rows(fixture.size());
    std::vector<std::optional<Element>> matched_element(fixture.size());
    detail::parallel_for(fixture.size(), threads, [&](std::size_t i) {
        const auto & fx = *fixture[i];
        AuditRow & row = rows[i];
        row.group = fx.kind == Element::Kind::Vertex ? "table2" : "table3";
        row.element = fx.descriptor();
        row.kind = fx.kind;
        row.expected = fx.code;
        row.note = fx.note;
        std::optional<Element> x;
        auto u = g.find(fx.first);
        if (fx.kind == Element::Kind::Vertex) {
            if (u)
                x = Element::vertex(*u);
        }
        else if (auto v = fx.second ? g.find(*fx.second) : std::nullopt; u && v) {
            if (auto e = g.edge_index(*u, *v))
                x = Element::edge(*e);
        }
        if (! x) {
            row.family = "unknown";
            row.note += (row.note.empty() ? "" : "; ") + std::string("no such element in the generated graph");
            return;
        }
        auto [fam, index] = classify_hc_element(g, p, *x);
        row.family = std::string(to_string(fam));
        row.index = index;
        row.oracle = code(g, dm, *x, landmarks);
        row.match = *row.oracle == fx.code;
        matched_element[i] = x;
    });
    report.rows = std::move(rows);
    detail::summarize(report);

    std::vector<char> listed(g.order() + g.size(), 0);
    for (const auto & x : matched_element)
        if (x)
            listed[x->kind == Element::Kind::Vertex ? x->id : g.order() + x->id] = 1;
    for (std::size_t i = 0; i < listed.size(); ++i)
        if (! listed[i])
            report.unlisted.push_back(i < g.order() ? g.vertex_name(static_cast<VertexId>(i))
                                                    : g.edge_name(g.edges()[i - g.order()]));
    return report;
}

namespace detail
{
    inline std::string code_text(const std::optional<Code> & c)
    {
        if (! c)
            return "-";
        std::string out = "(";
        for (std::size_t i = 0; i < c->size(); ++i)
            out += (i ? "," : "") + std::to_string((*c)[i]);
        return out + ")";
    }
}

// Human-readable table: mismatching rows in full, then per-family totals.
inline void write_text(std::ostream & out, const AuditReport & report, bool all_rows = false)
{
    out << "audit " << report.kind << " a=" << report.a << " b=" << report.b << " c=" << report.c << " landmarks=(";
    for (std::size_t i = 0; i < report.landmarks.size(); ++i)
        out << (i ? ", " : "") << report.landmarks[i];
    out << ")\n";
    out << "rows " << report.rows.size() << ", matched " << report.matched << ", mismatched " << report.mismatched
        << "\n\n";

    out << std::left << std::setw(14) << "group" << std::setw(18) << "element" << std::setw(8) << "family"
        << std::setw(16) << "expected" << std::setw(16) << "oracle" << "note\n";
    for (const auto & r : report.rows) {
        if (r.match && ! all_rows)
            continue;
        out << std::setw(14) << (r.group.empty() ? "-" : r.group) << std::setw(18) << r.element << std::setw(8)
            << r.family << std::setw(16) << detail::code_text(r.expected) << std::setw(16)
            << detail::code_text(r.oracle) << (r.match ? "ok" : "MISMATCH") << (r.note.empty() ? "" : " " + r.note)
            << '\n';
    }
    out << "\nper family:\n";
    for (const auto & f : report.families)
        out << "  " << std::setw(28) << (f.group.empty() ? f.family : f.group + "/" + f.family) << f.matched << "/"
            << f.rows << " match\n";

    if (report.bookkeeping) {
        const auto & bk = *report.bookkeeping;
        out << "\nclass sizes (" << bk.expected_formula << " = " << bk.expected_total << ", counted "
            << bk.element_count << ", stated sum " << bk.stated_sum << "): " << (bk.holds() ? "consistent" : "INCONSISTENT")
            << '\n';
        for (const auto & cl : bk.classes)
            if (! cl.agrees)
                out << "  " << cl.name << " printed " << cl.printed << " = " << cl.stated << ", generated "
                    << cl.generated << '\n';
    }
    if (report.collisions)
        out << "oracle code collisions: vertex-vertex " << report.collisions->vertex_vertex << ", edge-edge "
            << report.collisions->edge_edge << ", vertex-edge " << report.collisions->vertex_edge << '\n';
    if (! report.formula_collisions.empty())
        out << "printed code collisions: " << report.formula_collisions.size() << '\n';
    for (const auto & h : report.hypotheses)
        out << "hypothesis " << h.name << ": length " << h.rep_length << ", multiset-resolving "
            << (h.multiset_resolving ? "yes" : "no") << ", printed triples matched " << h.matched << "/" << h.rows
            << '\n';
    for (const auto & d : report.diagnostics) {
        out << "formula " << d.family << ":";
        if (! d.coverage.overlapping.empty())
            out << " overlapping cases at " << d.coverage.overlapping.size() << " indices;";
        if (! d.coverage.uncovered.empty())
            out << " uncovered indices " << d.coverage.uncovered.size() << ";";
        std::size_t disagree = std::count_if(d.boundary.begin(), d.boundary.end(), [](auto & x) { return ! x.agree; });
        out << " " << disagree << "/" << d.boundary.size() << " boundary comparisons disagree\n";
    }
    if (! report.unlisted.empty()) {
        out << "elements without a table row:";
        for (const auto & u : report.unlisted)
            out << ' ' << u;
        out << '\n';
    }
    for (const auto & n : report.notes)
        out << "note: " << n << '\n';
}

} // namespace metricdim

#endif
