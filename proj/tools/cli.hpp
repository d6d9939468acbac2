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

#ifndef METRICDIM_TOOLS_CLI_HPP
#define METRICDIM_TOOLS_CLI_HPP

#include <metricdim/metricdim.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace metricdim::cli
{

enum ExitCode : int { Ok = 0, Negative = 1, Usage = 2, OverBudget = 3 };

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct CommandSpec
{
    std::string subcommand;
    std::string family;
    std::optional<int> a, b, c;
    std::string input;
    std::string variant = "mixed";
    std::string set;
    std::string format;
    bool certify = false;
    bool independent = false;
    bool fixture = false;
    bool metadata = false;
    bool all_rows = false;
    std::size_t cap = 0;
    std::uint64_t budget = 100'000'000;
    std::optional<std::size_t> start;
    unsigned threads = 1;
    std::string output;
};

struct Instance
{
    LabeledGraph graph;
    std::string name;
    std::optional<StructureProfile> profile;
    int a = 0, b = 0, c = 0;
};

inline Instance load_instance(const CommandSpec & spec)
{
    Instance inst;
    if (spec.family == "hc") {
        HcParams p;
        p.a = spec.a.value_or(p.a);
        p.b = spec.b.value_or(p.b);
        p.c = spec.c.value_or(p.c);
        check_params(p);
        inst.graph = build_hc(p);
        inst.profile = hc_profile(p);
        inst.a = p.a, inst.b = p.b, inst.c = p.c;
        inst.name = "HC_" + std::to_string(p.a) + "_" + std::to_string(p.b) + "_" + std::to_string(p.c);
    }
    else if (spec.family == "sp") {
        SpParams p;
        p.a = spec.a.value_or(p.a);
        p.b = spec.b.value_or(p.b);
        p.c = spec.c.value_or(p.c);
        check_params(p);
        inst.graph = build_sp(p);
        inst.profile = sp_profile(p);
        inst.a = p.a, inst.b = p.b, inst.c = p.c;
        inst.name = "SP_" + std::to_string(p.a) + "_" + std::to_string(p.b) + "_" + std::to_string(p.c);
    }
    else {
        if (spec.input.empty())
            throw UsageError("family 'file' needs --input");
        if (spec.a || spec.b || spec.c)
            throw UsageError("--a/--b/--c do not apply to family 'file'");
        std::ifstream in(spec.input);
        if (! in)
            throw std::runtime_error("cannot read " + spec.input);
        inst.graph = read_edge_list(in);
        inst.name = "G";
    }
    return inst;
}

// Parses "p1:1,r1:1" or, on unlabelled graphs, raw ids "0,5,9".
inline std::vector<VertexId> parse_set(const LabeledGraph & g, const std::string & text)
{
    std::vector<VertexId> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty())
            continue;
        if (auto label = parse_label(item)) {
            if (! g.has_labels())
                throw UsageError("graph has no vertex labels; use vertex ids");
            auto v = g.find(*label);
            if (! v)
                throw UsageError("unknown vertex " + item);
            out.push_back(*v);
            continue;
        }
        std::size_t used = 0;
        unsigned long id = 0;
        try {
            id = std::stoul(item, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size() || used == 0)
            throw UsageError("cannot parse vertex '" + item + "'");
        if (id >= g.order())
            throw UsageError("vertex id " + item + " out of range");
        out.push_back(static_cast<VertexId>(id));
    }
    if (out.empty())
        throw UsageError("--set is empty");
    return out;
}

inline Variant variant_of(const CommandSpec & spec)
{
    auto v = parse_variant(spec.variant);
    if (! v)
        throw UsageError("unknown variant " + spec.variant);
    return *v;
}

inline std::string set_text(const LabeledGraph & g, const std::vector<VertexId> & vs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += (i ? ", " : "") + g.vertex_name(vs[i]);
    return out + "}";
}

inline void require_format(const std::string & format, std::initializer_list<const char *> allowed)
{
    for (auto f : allowed)
        if (format == f)
            return;
    std::string list;
    for (auto f : allowed)
        list += (list.empty() ? "" : ", ") + std::string(f);
    throw UsageError("format " + format + " is not available here (choose " + list + ")");
}

inline int cmd_generate(const CommandSpec & spec, std::ostream & out)
{
    auto inst = load_instance(spec);
    const auto & g = inst.graph;
    const std::string format = spec.format.empty() ? "edgelist" : spec.format;
    std::optional<ValidationReport> report;
    if (inst.profile)
        report = validate_structure(g, *inst.profile);

    if (format == "edgelist")
        write_edge_list(out, g);
    else if (format == "dot")
        write_dot(out, g, inst.name);
    else if (format == "csv") {
        out << "u,v,u_label,v_label\n";
        for (const auto & e : g.edges())
            out << e.u << ',' << e.v << ',' << g.vertex_name(e.u) << ',' << g.vertex_name(e.v) << '\n';
    }
    else if (format == "json") {
        Json j;
        j["instance"] = {{"family", spec.family}, {"a", inst.a}, {"b", inst.b}, {"c", inst.c}};
        j["graph"] = to_json(g);
        if (inst.profile)
            j["profile"] = to_json(*inst.profile);
        if (report)
            j["validation"] = to_json(*report);
        out << j.dump(2) << '\n';
    }
    else {
        out << inst.name << ": " << g.order() << " vertices, " << g.size() << " edges\n";
        if (report)
            for (const auto & c : report->checks)
                out << "  " << c.name << ": expected " << c.expected << ", got " << c.actual << " -> "
                    << (c.passed ? "ok" : "FAIL") << '\n';
    }
    return report && ! report->passed() ? Negative : Ok;
}

inline int cmd_dims(const CommandSpec & spec, std::ostream & out)
{
    require_format(spec.format.empty() ? "json" : spec.format, {"json", "text"});
    auto inst = load_instance(spec);
    SearchOptions opt;
    opt.certify = spec.certify;
    opt.start_size = spec.start;
    opt.cap = spec.cap;
    opt.budget = spec.budget;
    opt.threads = spec.threads;
    opt.require_independent = spec.independent;
    if (spec.certify && spec.start)
        throw UsageError("--start cannot be combined with --certify");
    auto r = min_dimension(inst.graph, variant_of(spec), opt);

    if (spec.format == "text") {
        out << inst.name << " " << to_string(r.variant) << ": " << to_string(r.status);
        if (r.value)
            out << ", value " << *r.value << (r.certified ? " (certified)" : " (not certified)") << ", witness "
                << set_text(inst.graph, r.witness);
        out << '\n';
        for (const auto & s : r.trail)
            out << "  size " << s.size << ": " << s.basis << ", " << s.subsets << " subsets"
                << (s.exhaustive ? ", exhaustive" : "") << (s.resolving_found ? ", resolving set found" : "") << '\n';
        if (! r.message.empty())
            out << "  " << r.message << '\n';
    }
    else
        out << to_json(inst.graph, r, spec.metadata).dump(2) << '\n';

    switch (r.status) {
        case SearchStatus::Found: return Ok;
        case SearchStatus::BudgetExceeded: return OverBudget;
        default: return Negative;
    }
}

inline int cmd_verify(const CommandSpec & spec, std::ostream & out)
{
    require_format(spec.format.empty() ? "text" : spec.format, {"json", "text"});
    if (spec.set.empty())
        throw UsageError("verify needs --set");
    auto inst = load_instance(spec);
    const auto & g = inst.graph;
    auto set = parse_set(g, spec.set);
    const auto variant = variant_of(spec);
    const auto dm = all_pairs_distances(g);
    auto verdict = is_resolving(g, dm, set, variant);
    std::optional<bool> independent;
    if (spec.independent)
        independent = is_independent(g, set);
    const bool ok = verdict.resolving && independent.value_or(true);

    if (spec.format == "json") {
        Json j;
        j["variant"] = std::string(to_string(variant));
        Json names = Json::array();
        for (auto v : set)
            names.push_back(g.vertex_name(v));
        j["set"] = std::move(names);
        j["resolving"] = verdict.resolving;
        if (verdict.violation)
            j["violation"] = {{"first", element_name(g, verdict.violation->first)},
                              {"second", element_name(g, verdict.violation->second)},
                              {"code", verdict.shared_code}};
        else
            j["violation"] = nullptr;
        j["independent"] = independent ? Json(*independent) : Json(nullptr);
        out << j.dump(2) << '\n';
    }
    else {
        out << "resolving: " << (verdict.resolving ? "true" : "false") << '\n';
        if (verdict.violation) {
            out << "violation: " << element_name(g, verdict.violation->first) << " and "
                << element_name(g, verdict.violation->second) << " share (";
            for (std::size_t i = 0; i < verdict.shared_code.size(); ++i)
                out << (i ? "," : "") << verdict.shared_code[i];
            out << ")\n";
        }
        if (independent)
            out << "independent: " << (*independent ? "true" : "false") << '\n';
    }
    return ok ? Ok : Negative;
}

inline int cmd_audit(const CommandSpec & spec, std::ostream & out)
{
    const std::string format = spec.format.empty() ? "text" : spec.format;
    require_format(format, {"json", "text"});
    AuditReport report;
    if (spec.fixture) {
        if (spec.family != "hc" || (spec.a && *spec.a != 4) || (spec.b && *spec.b != 4) || (spec.c && *spec.c != 4))
            throw UsageError("--fixture applies to hc with a=b=c=4 only");
        report = fixture_check_hc444(spec.threads);
    }
    else if (spec.family == "hc") {
        HcParams p;
        p.a = spec.a.value_or(p.a);
        p.b = spec.b.value_or(p.b);
        p.c = spec.c.value_or(p.c);
        check_params(p);
        auto landmarks = hc_default_landmarks();
        if (! spec.set.empty()) {
            auto g = build_hc(p);
            landmarks.clear();
            for (auto v : parse_set(g, spec.set))
                landmarks.push_back(*g.label(v));
        }
        report = audit_hc(p, landmarks, spec.threads);
    }
    else if (spec.family == "sp") {
        SpParams p;
        p.a = spec.a.value_or(p.a);
        p.b = spec.b.value_or(p.b);
        p.c = spec.c.value_or(p.c);
        check_params(p);
        std::vector<SpHypothesis> hypotheses;
        if (! spec.set.empty()) {
            auto g = build_sp(p);
            SpHypothesis h{"custom", {}};
            for (auto v : parse_set(g, spec.set))
                h.landmarks.push_back(*g.label(v));
            hypotheses.push_back(std::move(h));
        }
        report = audit_sp(p, hypotheses);
    }
    else
        throw UsageError("audit applies to hc or sp");

    if (format == "json")
        out << to_json(report).dump(2) << '\n';
    else
        write_text(out, report, spec.all_rows);
    return report.clean() ? Ok : Negative;
}

inline int cmd_codes(const CommandSpec & spec, std::ostream & out)
{
    require_format(spec.format.empty() ? "csv" : spec.format, {"csv"});
    if (spec.set.empty())
        throw UsageError("codes needs --set");
    auto inst = load_instance(spec);
    const auto & g = inst.graph;
    auto set = parse_set(g, spec.set);
    const auto variant = variant_of(spec);
    const auto dm = all_pairs_distances(g);

    out << "element_kind,element";
    for (auto v : set)
        out << ",d_" << g.vertex_name(v);
    out << '\n';
    for (const auto & x : compared_elements(g, variant)) {
        Code cd = code(g, dm, x, set);
        if (variant == Variant::Multiset)
            cd = MultisetCode(std::move(cd)).values();
        out << (x.kind == Element::Kind::Vertex ? "vertex" : "edge") << ',' << element_name(g, x);
        for (int d : cd)
            out << ',' << d;
        out << '\n';
    }
    return Ok;
}

inline int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Metric, edge, mixed and multiset dimension tool for hollow coronoids and starphenes", "metricdim"};
    app.require_subcommand(1);
    CommandSpec spec;

    auto add_common = [&](CLI::App * sub) {
        sub->add_option("family", spec.family, "hc, sp or file")->required()->check(CLI::IsMember({"hc", "sp", "file"}));
        sub->add_option("--a", spec.a, "first parameter");
        sub->add_option("--b", spec.b, "second parameter");
        sub->add_option("--c", spec.c, "third parameter");
        sub->add_option("--input", spec.input, "edge-list file for family 'file'");
        sub->add_option("-o,--output", spec.output, "write to this file instead of stdout");
        sub->add_option("--threads", spec.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    };
    auto add_format = [&](CLI::App * sub, std::vector<std::string> formats) {
        sub->add_option("--format", spec.format, "output format")->check(CLI::IsMember(formats));
    };

    auto * generate = app.add_subcommand("generate", "write the graph");
    add_common(generate);
    add_format(generate, {"edgelist", "dot", "csv", "json", "text"});

    auto * dims = app.add_subcommand("dims", "exhaustive minimum resolving set search");
    add_common(dims);
    add_format(dims, {"json", "text"});
    dims->add_option("--variant", spec.variant, "vertex, edge, mixed or multiset");
    dims->add_flag("--certify", spec.certify, "refute every size below the result");
    dims->add_flag("--independent", spec.independent, "require an independent witness");
    dims->add_option("--cap", spec.cap, "largest size to try");
    dims->add_option("--budget", spec.budget, "maximum number of subset tests");
    dims->add_option("--start", spec.start, "first size to try (without --certify)");
    dims->add_flag("--metadata", spec.metadata, "include wall-clock timing");

    auto * verify = app.add_subcommand("verify", "check a landmark set");
    add_common(verify);
    add_format(verify, {"json", "text"});
    verify->add_option("--variant", spec.variant, "vertex, edge, mixed or multiset");
    verify->add_option("--set", spec.set, "landmarks, e.g. p1:1,r1:1,p2:1");
    verify->add_flag("--independent", spec.independent, "also check independence");

    auto * audit = app.add_subcommand("audit", "compare printed codes with breadth-first codes");
    add_common(audit);
    add_format(audit, {"json", "text"});
    audit->add_option("--set", spec.set, "landmarks (default: the printed set)");
    audit->add_flag("--fixture", spec.fixture, "check the HC(4,4,4) code tables");
    audit->add_flag("--all", spec.all_rows, "list matching rows too (text)");

    auto * codes = app.add_subcommand("codes", "code table for a landmark set");
    add_common(codes);
    add_format(codes, {"csv"});
    codes->add_option("--variant", spec.variant, "element set: vertex, edge, mixed or multiset");
    codes->add_option("--set", spec.set, "landmarks");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    for (auto * sub : {generate, dims, verify, audit, codes})
        if (sub->parsed())
            spec.subcommand = sub->get_name();

    std::ofstream file;
    std::ostream * sink = &out;
    if (! spec.output.empty()) {
        file.open(spec.output);
        if (! file) {
            err << "error: cannot write " << spec.output << '\n';
            return Usage;
        }
        sink = &file;
    }

    try {
        if (spec.subcommand == "generate")
            return cmd_generate(spec, *sink);
        if (spec.subcommand == "dims")
            return cmd_dims(spec, *sink);
        if (spec.subcommand == "verify")
            return cmd_verify(spec, *sink);
        if (spec.subcommand == "audit")
            return cmd_audit(spec, *sink);
        return cmd_codes(spec, *sink);
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    }
}

} // namespace metricdim::cli

#endif
