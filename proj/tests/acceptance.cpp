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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace metricdim;

namespace
{

struct Check
{
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string & what)
    {
        if (! cond) {
            if (ok)
                detail << what;
            ok = false;
        }
    }
};

std::vector<VertexId> ids(const LabeledGraph & g, const std::vector<VertexLabel> & labels)
{
    std::vector<VertexId> out;
    for (const auto & l : labels)
        out.push_back(g.require(l));
    return out;
}

bool certified_value(const DimensionResult & r, std::size_t value)
{
    return r.status == SearchStatus::Found && r.certified && r.value == value;
}

std::string describe(const DimensionResult & r)
{
    std::string out = std::string(to_string(r.variant)) + " " + std::string(to_string(r.status));
    if (r.value)
        out += " value " + std::to_string(*r.value) + (r.certified ? " (certified)" : " (uncertified)");
    return out;
}

Check structural_counts()
{
    Check c;
    for (int a = 3; a <= 6; ++a)
        for (int b = 3; b <= 6; ++b)
            for (int cc = 3; cc <= 6; ++cc) {
                const HcParams p{a, b, cc};
                auto g = build_hc(p);
                const int s = a + b + cc;
                std::size_t deg2 = 0, deg3 = 0;
                for (VertexId v = 0; v < g.order(); ++v) {
                    deg2 += g.degree(v) == 2;
                    deg3 += g.degree(v) == 3;
                }
                auto report = validate_structure(g, hc_profile(p));
                std::string at = " at HC(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cc) + ")";
                c.expect(g.order() == static_cast<std::size_t>(8 * (s - 3)), "|V|" + at);
                c.expect(g.size() == static_cast<std::size_t>(10 * (s - 3)), "|E|" + at);
                c.expect(deg2 == static_cast<std::size_t>(4 * s - 12) && deg3 == deg2, "degree profile" + at);
                c.expect(report.passed(), "structure report" + at);
            }
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            for (int cc = 1; cc <= 6; ++cc) {
                const SpParams p{a, b, cc};
                auto g = build_sp(p);
                const int s = a + b + cc;
                std::string at = " at SP(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cc) + ")";
                c.expect(g.order() == static_cast<std::size_t>(4 * s - 6), "|V|" + at);
                c.expect(g.size() == static_cast<std::size_t>(5 * s - 9), "|E|" + at);
                c.expect(validate_structure(g, sp_profile(p)).passed(), "structure report" + at);
            }
    if (c.ok)
        c.detail << "64 HC and 216 SP instances";
    return c;
}

Check fixture_agreement()
{
    Check c;
    auto r = fixture_check_hc444();
    c.expect(r.rows.size() == 161, "row count " + std::to_string(r.rows.size()));
    c.expect(r.matched * 100 >= r.rows.size() * 95, "match rate below 95%");
    for (const auto * row : r.mismatches())
        c.expect(row->expected && (row->oracle || ! row->note.empty()), "unitemized mismatch " + row->element);
    if (c.ok)
        c.detail << r.matched << "/" << r.rows.size() << " rows match";
    return c;
}

Check hc_mixed()
{
    Check c;
    for (auto p : {HcParams{4, 4, 4}, HcParams{5, 4, 4}, HcParams{4, 5, 6}}) {
        const auto started = std::chrono::steady_clock::now();
        auto g = build_hc(p);
        auto dm = all_pairs_distances(g);
        auto r = min_dimension(g, dm, Variant::MixedMetric);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        std::string at = " at HC(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + ")";
        c.expect(certified_value(r, 3), describe(r) + at + ", expected 3");
        const SizeRecord * two = nullptr;
        for (const auto & s : r.trail)
            if (s.size == 2)
                two = &s;
        c.expect(two && two->exhaustive && two->subsets == detail::binomial(g.order(), 2),
                 "size 2 not exhaustively refuted" + at);
        c.expect(is_resolving(g, dm, r.witness, Variant::MixedMetric).resolving, "witness fails" + at);
        c.expect(secs < 60.0, "over 60 s" + at);
        if (p.a == 4 && p.b == 4 && p.c == 4)
            c.expect(two && two->subsets == 2556, "expected 2556 two-subsets");
    }
    if (c.ok)
        c.detail << "mdim = 3 certified on HC(4,4,4), HC(5,4,4), HC(4,5,6)";
    return c;
}

Check hc_vertex_edge()
{
    Check c;
    auto g = build_hc({4, 4, 4});
    for (auto v : {Variant::VertexMetric, Variant::EdgeMetric}) {
        auto r = min_dimension(g, v);
        c.expect(certified_value(r, 3), describe(r) + ", expected 3");
    }
    if (c.ok)
        c.detail << "dim = edim = 3 certified on HC(4,4,4)";
    return c;
}

Check independence()
{
    Check c;
    auto g = build_hc({4, 4, 4});
    auto dm = all_pairs_distances(g);
    auto s = ids(g, hc_default_landmarks());
    c.expect(is_independent(g, s), "printed set not independent");
    c.expect(is_resolving(g, dm, s, Variant::MixedMetric).resolving, "printed set not mixed resolving");
    if (c.ok)
        c.detail << "{p1:1, r1:1, p2:1} is an independent mixed generator";
    return c;
}

Check sp_dimensions()
{
    Check c;
    auto g = build_sp({3, 3, 3});
    for (auto [v, expected] : {std::pair{Variant::VertexMetric, 2u}, std::pair{Variant::EdgeMetric, 3u},
                               std::pair{Variant::MixedMetric, 3u}}) {
        auto r = min_dimension(g, v);
        c.expect(certified_value(r, expected), describe(r) + ", expected " + std::to_string(expected));
    }
    if (c.ok)
        c.detail << "dim = 2, edim = 3, mdim = 3 certified on SP(3,3,3)";
    return c;
}

Check sp_multiset()
{
    Check c;
    const SpParams p{3, 3, 3};
    auto g = build_sp(p);
    SearchOptions opt;
    opt.cap = 6;
    auto r = min_dimension(g, Variant::Multiset, opt);
    c.expect(r.status == SearchStatus::Found && r.certified && r.value && *r.value >= 3 && *r.value <= 5,
             "multiset value not certified in {3,4,5}");
    auto audit = audit_sp(p);
    c.expect(audit.hypotheses.size() == 5, "expected 5 landmark hypotheses");
    bool conflict_noted = false;
    for (const auto & n : audit.notes)
        conflict_noted |= n.find("msdim = 4") != std::string::npos && n.find("msdim = 3") != std::string::npos;
    c.expect(conflict_noted, "statement/proof conflict not reported");
    if (c.ok) {
        c.detail << "msdim(SP(3,3,3)) = " << *r.value << " certified; multiset-resolving hypotheses:";
        for (const auto & h : audit.hypotheses)
            c.detail << ' ' << h.name << '=' << (h.multiset_resolving ? "yes" : "no");
    }
    return c;
}

Check property_suite()
{
    Check c;
    std::mt19937 rng(2026);
    std::vector<LabeledGraph> graphs = {build_hc({4, 4, 4}), build_sp({3, 3, 3}), build_sp({2, 1, 3})};
    for (int i = 0; i < 12; ++i) {
        std::size_t n = 4 + i % 8;
        graphs.push_back(oracle::to_graph(n, oracle::random_connected(n, i % 4, rng)));
    }
    for (const auto & g : graphs) {
        auto dim = min_dimension(g, Variant::VertexMetric);
        auto edim = min_dimension(g, Variant::EdgeMetric);
        auto mdim = min_dimension(g, Variant::MixedMetric);
        if (dim.certified && edim.certified && mdim.certified) {
            c.expect(*mdim.value >= std::max(*dim.value, *edim.value), "mdim < max(dim, edim)");
            c.expect(*mdim.value >= 2 && *mdim.value <= g.order(), "mdim outside [2, n]");
        }
        SearchOptions raw;
        raw.certify = false;
        raw.start_size = 1;
        raw.cap = 4;
        auto ms = min_dimension(g, Variant::Multiset, raw);
        c.expect(ms.value != 2u, "multiset search returned 2");

        std::vector<VertexId> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const auto & e : g.edges())
            edges.emplace_back(perm[e.u], perm[e.v]);
        auto h = graph_from_edges(g.order(), edges);
        for (auto [v, ref] : {std::pair{Variant::VertexMetric, &dim}, std::pair{Variant::EdgeMetric, &edim},
                              std::pair{Variant::MixedMetric, &mdim}}) {
            auto other = min_dimension(h, v);
            c.expect(other.value == ref->value && other.certified == ref->certified, "relabelling changed a value");
        }
    }
    for (std::size_t n : {2u, 5u, 9u})
        c.expect(certified_value(min_dimension(oracle::path(n), Variant::Multiset), 1),
                 "msdim(P_" + std::to_string(n) + ") != 1");

    auto g = build_hc({4, 4, 4});
    auto dm = all_pairs_distances(g);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.order() - 1));
    for (int sample = 0; sample < 1000; ++sample) {
        std::vector<VertexId> s;
        while (s.size() < static_cast<std::size_t>(1 + sample % 4)) {
            auto v = pick(rng);
            if (std::find(s.begin(), s.end(), v) == s.end())
                s.push_back(v);
        }
        VertexId v = pick(rng);
        auto sorted = code(g, dm, Element::vertex(v), s);
        std::sort(sorted.begin(), sorted.end());
        c.expect(sorted == multiset_rep(g, dm, v, s).values(), "sorted code differs from multiset rep");
    }
    if (c.ok)
        c.detail << graphs.size() << " graphs, 3 paths, 1000 code samples";
    return c;
}

Check audit_findings()
{
    Check c;
    auto first = audit_hc({4, 4, 4}, hc_default_landmarks(), 1);
    auto again = audit_hc({4, 4, 4}, hc_default_landmarks(), 1);
    auto threaded = audit_hc({4, 4, 4}, hc_default_landmarks(), 4);
    auto text = to_json(first).dump();
    c.expect(text == to_json(again).dump(), "JSON differs across runs");
    c.expect(text == to_json(threaded).dump(), "JSON differs across thread counts");
    std::size_t flagged = 0;
    for (const char * name : {"p1s1", "q1t1", "r1u1", "p2s2", "r2t2", "q2u2"})
        if (auto * f = first.family(name); f && f->mismatched > 0)
            ++flagged;
    c.expect(flagged == 6, "only " + std::to_string(flagged) + " of 6 spoke families flagged");
    c.expect(first.bookkeeping && first.bookkeeping->holds() && first.bookkeeping->expected_total == 162,
             "bookkeeping 18(a+b+c-3) not satisfied");
    if (c.ok)
        c.detail << "6 spoke families flagged; " << first.mismatched << "/" << first.rows.size()
                 << " rows mismatch; bookkeeping 162 = |V|+|E|";
    return c;
}

} // namespace

int main()
{
    struct Criterion
    {
        int id;
        const char * name;
        double limit_s;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "structural counts", 1.0, structural_counts},
        {2, "fixture agreement", 1.0, fixture_agreement},
        {3, "mixed dimension of HC", 180.0, hc_mixed},
        {4, "vertex/edge dimensions of HC", 60.0, hc_vertex_edge},
        {5, "independence", 1.0, independence},
        {6, "SP dimensions", 30.0, sp_dimensions},
        {7, "multiset oracle", 30.0, sp_multiset},
        {8, "property suite", 120.0, property_suite},
        {9, "audit determinism and findings", 5.0, audit_findings},
    };
    int failed = 0;
    for (const auto & cr : criteria) {
        const auto started = std::chrono::steady_clock::now();
        Check c;
        try {
            c = cr.run();
        }
        catch (const std::exception & e) {
            c.ok = false;
            c.detail << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (secs > cr.limit_s) {
            c.ok = false;
            c.detail << " (took " << secs << " s, limit " << cr.limit_s << " s)";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", secs);
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << cr.id << " [" << cr.name << "] " << timing << ": "
                  << c.detail.str() << '\n';
        failed += ! c.ok;
    }
    return failed == 0 ? 0 : 1;
}
