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

#ifndef METRICDIM_FORMULAS_HPP
#define METRICDIM_FORMULAS_HPP

// Published closed-form codes for HC(a,b,c) relative to the landmarks
// (p1:1, r1:1, p2:1), and multirepresentations for SP(a,b,c). The
// expressions and case ranges are transcribed as printed, errors included;
// comparing them against computed distances is the job of audit.hpp.

#include <metricdim/generators.hpp>
#include <metricdim/graph.hpp>
#include <metricdim/resolvability.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace metricdim
{

// Integer affine expression in (a, b, c, g).
struct Affine
{
    int ca = 0, cb = 0, cc = 0, cg = 0, k = 0;

    constexpr int operator()(int a, int b, int c, int g) const { return ca * a + cb * b + cc * c + cg * g + k; }

    friend constexpr Affine operator+(Affine x, Affine y)
    {
        return {x.ca + y.ca, x.cb + y.cb, x.cc + y.cc, x.cg + y.cg, x.k + y.k};
    }
    friend constexpr Affine operator-(Affine x, Affine y)
    {
        return {x.ca - y.ca, x.cb - y.cb, x.cc - y.cc, x.cg - y.cg, x.k - y.k};
    }
    friend constexpr Affine operator+(Affine x, int v) { return x + Affine{0, 0, 0, 0, v}; }
    friend constexpr Affine operator-(Affine x, int v) { return x - Affine{0, 0, 0, 0, v}; }
    friend constexpr Affine operator*(int m, Affine x) { return {m * x.ca, m * x.cb, m * x.cc, m * x.cg, m * x.k}; }
};

namespace expr
{
    inline constexpr Affine A{1, 0, 0, 0, 0};
    inline constexpr Affine B{0, 1, 0, 0, 0};
    inline constexpr Affine C{0, 0, 1, 0, 0};
    inline constexpr Affine G{0, 0, 0, 1, 0};
    constexpr Affine lit(int v) { return {0, 0, 0, 0, v}; }
}

struct FormulaCase
{
    Affine lo, hi;
    std::array<Affine, 3> code;
    std::string_view printed;
};

struct FormulaFamilyInfo
{
    std::string_view name;
    Element::Kind kind;
    // Index range of the family in the construction.
    Affine lo, hi;
    std::vector<FormulaCase> cases;
};

enum class HcFamily : int {
    // vertices
    P1, Q1, R1, P2, Q2, R2, S1, T1, U1, S2, U2, T2,
    // path edges x_g x_{g+1}
    P1P1, Q1Q1, R1R1, S1S1, T1T1, U1U1, P2P2, Q2Q2, R2R2, S2S2, T2T2, U2U2,
    // outer and inner cycle connectors
    Eta1, Eta2, Eta3, Eta4, Eta5, Eta6, Eta7, Eta8, Eta9, Eta10, Eta11, Eta12,
    // spokes x_{2g} y_{2g-1}
    P1S1, Q1T1, R1U1, P2S2, R2T2, Q2U2,
};

inline constexpr int hc_family_count = 42;

inline const std::vector<FormulaFamilyInfo> & hc_family_table()
{
    using namespace expr;
    using K = Element::Kind;
    const Affine one = lit(1);
    static const std::vector<FormulaFamilyInfo> table = [&] {
        std::vector<FormulaFamilyInfo> t;
        auto single = [](Affine at, std::array<Affine, 3> code, std::string_view printed) {
            return FormulaCase{at, at, code, printed};
        };
        auto span = [](Affine lo, Affine hi, std::array<Affine, 3> code, std::string_view printed) {
            return FormulaCase{lo, hi, code, printed};
        };

        // vertex families
        t.push_back({"p1", K::Vertex, one, 2 * A - 1,
                     {single(one, {G - 1, 2 * A + 2 * C - G - 1, 2 * B + 2 * C - 1}, "(g-1,2a+2c-g-1,2b+2c-1), g=1"),
                      span(lit(2), 2 * A - 1, {G - 1, 2 * A + 2 * C - G - 1, 2 * B + 2 * C + G - 4},
                           "(g-1,2a+2c-g-1,2b+2c+g-4), 2<=g<=2a-1")}});
        t.push_back({"q1", K::Vertex, one, 2 * C - 1,
                     {span(one, 2 * C - 2, {2 * A + G - 2, 2 * C - G, 2 * A + 2 * B + 2 * C - G - 5},
                           "(2a+g-2,2c-g,2a+2b+2c-g-5), 1<=g<=2c-2"),
                      single(2 * C - 1, {2 * A + G - 2, 2 * C - G, 2 * A + 2 * B - 2}, "(2a+g-2,2c-g,2a+2b-2), g=2c-1")}});
        t.push_back({"r1", K::Vertex, one, 2 * B - 1,
                     {single(one, {2 * A + 2 * C - 2, G - 1, 2 * A + 2 * B - G - 2}, "(2a+2c-2,g-1,2a+2b-g-2), g=1"),
                      span(lit(2), 2 * B - 1, {2 * A + 2 * C + G - 5, G - 1, 2 * A + 2 * B - G - 2},
                           "(2a+2c+g-5,g-1,2a+2b-g-2), 2<=g<=2b-1")}});
        t.push_back({"p2", K::Vertex, one, 2 * A - 1,
                     {single(one, {2 * B + 2 * C - 1, 2 * A + 2 * B - G - 2, G - 1}, "(2b+2c-1,2a+2b-g-2,g-1), g=1"),
                      span(lit(2), 2 * A - 1, {2 * B + 2 * C + G - 4, 2 * A + 2 * B - G - 2, G - 1},
                           "(2b+2c+g-4,2a+2b-g-2,g-1), 2<=g<=2a-1")}});
        t.push_back({"q2", K::Vertex, one, 2 * C - 1,
                     {single(one, {G, 2 * B + 2 * C - G - 1, 2 * A + 2 * C - 1}, "(g,2b+2c-g-1,2a+2c-1), g=1"),
                      span(lit(2), 2 * C - 1, {G, 2 * B + 2 * C - G - 1, 2 * A + 2 * C + G - 4},
                           "(g,2b+2c-g-1,2a+2c+g-4), 2<=g<=2c-1")}});
        t.push_back({"r2", K::Vertex, one, 2 * B - 1,
                     {span(one, 2 * B - 2, {2 * C + G - 1, 2 * B - G, 2 * A + 4 * B - G - 5},
                           "(2c+g-1,2b-g,2a+4b-g-5), 1<=g<=2b-2"),
                      single(2 * B - 1, {2 * C + G - 1, 2 * B - G, 2 * A + 2 * B - 2}, "(2c+g-1,2b-g,2a+2b-2), g=2b-1")}});
        t.push_back({"s1", K::Vertex, one, 2 * A - 3,
                     {span(one, 2 * A - 3, {G + 1, 2 * A + 2 * C - G - 3, 2 * B + 2 * C + G - 4},
                           "(g+1,2a+2c-g-3,2b+2c+g-4), 1<=g<=2a-3")}});
        t.push_back({"t1", K::Vertex, one, 2 * C - 3,
                     {span(one, 2 * C - 3, {2 * A + G - 2, 2 * C - G, 2 * A + 2 * B + 2 * C - G - 7},
                           "(2a+g-2,2c-g,2a+2b+2c-g-7), 1<=g<=2c-3")}});
        t.push_back({"u1", K::Vertex, one, 2 * B - 3,
                     {span(one, 2 * B - 3, {2 * A + 2 * C + G - 5, G + 1, 2 * A + 2 * B - G - 4},
                           "(2a+2c+g-5,g+1,2a+2b-g-4), 1<=g<=2b-3")}});
        t.push_back({"s2", K::Vertex, one, 2 * A - 3,
                     {span(one, 2 * A - 3, {2 * A + 2 * C + G - 6, 2 * A + 2 * B - G - 4, G + 1},
                           "(2a+2c+g-6,2a+2b-g-4,g+1), 1<=g<=2a-3")}});
        t.push_back({"u2", K::Vertex, one, 2 * C - 3,
                     {span(one, 2 * C - 3, {G + 2, 2 * A + 2 * C + G - 4, 2 * B + 2 * C - G - 3},
                           "(g+2,2a+2c+g-4,2b+2c-g-3), 1<=g<=2c-3")}});
        t.push_back({"t2", K::Vertex, one, 2 * B - 3,
                     {span(one, 2 * B - 3, {2 * C + G - 1, 2 * A + 4 * B - G - 7, 2 * B - G},
                           "(2c+g-1,2a+4b-g-7,2b-g), 1<=g<=2b-3")}});

        // path edges
        t.push_back({"p1p1", K::Edge, one, 2 * A - 2,
                     {single(one, {G - 1, 2 * A + 2 * C - G - 2, 2 * B + 2 * C - 2}, "(g-1,2a+2c-g-2,2b+2c-2), g=1"),
                      span(lit(2), 2 * A - 2, {G - 1, 2 * A + 2 * C - G - 2, 2 * B + 2 * C + G - 4},
                           "(g-1,2a+2c-g-2,2b+2c+g-4), 2<=g<=2a-2")}});
        // The second range overlaps the first as printed; the first matching
        // case is used.
        t.push_back({"q1q1", K::Edge, one, 2 * C - 2,
                     {span(one, 2 * C - 3, {2 * A + G - 2, 2 * C - G - 1, 2 * A + 2 * B + 2 * C - G - 6},
                           "(2a+g-2,2c-g-1,2a+2b+2c-g-6), 1<=g<=2c-3"),
                      span(lit(2), 2 * C - 2, {2 * A + G - 2, 2 * C - G - 1, 2 * A + 2 * B - 3},
                           "(2a+g-2,2c-g-1,2a+2b-3), 2<=g<=2c-2")}});
        t.push_back({"r1r1", K::Edge, one, 2 * B - 2,
                     {single(one, {2 * A + 2 * C - 3, G - 1, 2 * A + 2 * B - G - 3}, "(2a+2c-3,g-1,2a+2b-g-3), g=1"),
                      span(lit(2), 2 * B - 2, {2 * A + 2 * C + G - 5, G - 1, 2 * A + 2 * B - G - 3},
                           "(2a+2c+g-5,g-1,2a+2b-g-3), 2<=g<=2b-2")}});
        t.push_back({"s1s1", K::Edge, one, 2 * A - 4,
                     {span(one, 2 * A - 4, {G + 1, 2 * A + 2 * C - G - 4, 2 * B + 2 * C + G - 4},
                           "(g+1,2a+2c-g-4,2b+2c+g-4), 1<=g<=2a-4")}});
        t.push_back({"t1t1", K::Edge, one, 2 * C - 4,
                     {span(one, 2 * C - 4, {2 * A + G - 2, 2 * C - G - 1, 2 * A + 2 * B + 2 * C - G - 8},
                           "(2a+g-2,2c-g-1,2a+2b+2c-g-8), 1<=g<=2c-4")}});
        t.push_back({"u1u1", K::Edge, one, 2 * B - 4,
                     {span(one, 2 * B - 4, {2 * A + 2 * C + G - 5, G + 1, 2 * A + 2 * B - G - 5},
                           "(2a+2c+g-5,g+1,2a+2b-g-5), 1<=g<=2b-4")}});
        t.push_back({"p2p2", K::Edge, one, 2 * A - 2,
                     {single(one, {2 * B + 2 * C - 2, 2 * A + 2 * B - G - 3, G - 1}, "(2b+2c-2,2a+2b-g-3,g-1), g=1"),
                      span(lit(2), 2 * A - 2, {2 * B + 2 * C + G - 4, 2 * A + 2 * B - G - 3, G - 1},
                           "(2b+2c+g-4,2a+2b-g-3,g-1), 2<=g<=2a-2")}});
        t.push_back({"q2q2", K::Edge, one, 2 * C - 2,
                     {single(one, {G, 2 * A + 2 * C - 2, 2 * B + 2 * C - G - 2}, "(g,2a+2c-2,2b+2c-g-2), g=1"),
                      span(lit(2), 2 * C - 2, {G, 2 * A + 2 * C + G - 4, 2 * B + 2 * C - G - 2},
                           "(g,2a+2c+g-4,2b+2c-g-2), 2<=g<=2c-2")}});
        t.push_back({"r2r2", K::Edge, one, 2 * B - 2,
                     {span(one, 2 * B - 3, {2 * C + G - 1, 2 * A + 4 * B - G - 6, 2 * B - G - 1},
                           "(2c+g-1,2a+4b-g-6,2b-g-1), 1<=g<=2b-3"),
                      single(2 * B - 2, {2 * C + G - 1, 2 * A + 2 * B - 3, 2 * B - G - 1},
                             "(2c+g-1,2a+2b-3,2b-g-1), g=2b-2")}});
        t.push_back({"s2s2", K::Edge, one, 2 * A - 4,
                     {span(one, 2 * A - 4, {2 * B + 2 * C + G - 4, 2 * A + 2 * B - G - 5, G + 1},
                           "(2b+2c+g-4,2a+2b-g-5,g+1), 1<=g<=2a-4")}});
        t.push_back({"t2t2", K::Edge, one, 2 * B - 4,
                     {span(one, 2 * B - 4, {2 * C + G - 1, 2 * A + 4 * B - G - 8, 2 * B - G - 1},
                           "(2c+g-1,2a+4b-g-8,2b-g-1), 1<=g<=2b-4")}});
        t.push_back({"u2u2", K::Edge, one, 2 * C - 4,
                     {span(one, 2 * C - 4, {G + 2, 2 * A + 2 * C + G - 4, 2 * B + 2 * C - G - 4},
                           "(g+2,2a+2c+g-4,2b+2c-g-4), 1<=g<=2c-4")}});

        // connectors (single elements, index 1)
        auto eta = [&](std::string_view name, std::array<Affine, 3> code, std::string_view printed) {
            t.push_back({name, K::Edge, one, one, {single(one, code, printed)}});
        };
        eta("eta1", {lit(0), 2 * A + 2 * C - 2, 2 * B + 2 * C - 4}, "(0,2a+2c-2,2b+2c-4)");
        eta("eta2", {lit(2), 2 * A + 2 * C - 4, 2 * B + 2 * C - 6}, "(2,2a+2c-4,2b+2c-6)");
        eta("eta3", {2 * A - 2, 2 * C - 1, 2 * A + 2 * B + 2 * C - 6}, "(2a-2,2c-1,2a+2b+2c-6)");
        eta("eta4", {2 * A - 2, 2 * C - 1, 2 * A + 2 * B + 2 * C - 8}, "(2a-2,2c-1,2a+2b+2c-8)");
        eta("eta5", {2 * A + 2 * C - 3, lit(0), 2 * A + 2 * B - 3}, "(2a+2c-3,0,2a+2b-3)");
        eta("eta6", {2 * A + 2 * C - 5, lit(2), 2 * A + 2 * B - 5}, "(2a+2c-5,2,2a+2b-5)");
        eta("eta7", {2 * A + 2 * B + 2 * C - 6, 2 * B - 2, 2 * A - 2}, "(2a+2b+2c-6,2b-2,2a-2)");
        eta("eta8", {2 * A + 2 * B + 2 * C - 8, 2 * B - 2, 2 * A - 2}, "(2a+2b+2c-8,2b-2,2a-2)");
        eta("eta9", {2 * B + 2 * C - 2, 2 * A + 2 * B - 3, lit(0)}, "(2b+2c-2,2a+2b-3,0)");
        eta("eta10", {2 * B + 2 * C - 4, 2 * A + 2 * B - 5, lit(2)}, "(2b+2c-4,2a+2b-5,2)");
        eta("eta11", {2 * C - 1, 2 * A + 4 * B - 6, 2 * B - 1}, "(2c-1,2a+4b-6,2b-1)");
        eta("eta12", {2 * C - 1, 2 * A + 4 * B - 8, 2 * B - 1}, "(2c-1,2a+4b-8,2b-1)");

        // spokes
        t.push_back({"p1s1", K::Edge, one, A - 1,
                     {span(one, A - 1, {2 * G - 1, 4 * A + 2 * C - 2 * G - 12, 4 * B + 2 * C + 2 * G - 13},
                           "(2g-1,4a+2c-2g-12,4b+2c+2g-13), 1<=g<=a-1")}});
        t.push_back({"q1t1", K::Edge, one, C - 1,
                     {span(one, C - 1, {4 * A + 2 * G - 13, 4 * C - 2 * G - 8, 4 * A + 2 * B + 2 * C - 2 * G - 16},
                           "(4a+2g-13,4c-2g-8,4a+2b+2c-2g-16), 1<=g<=c-1")}});
        t.push_back({"r1u1", K::Edge, one, B - 1,
                     {span(one, B - 1, {4 * A + 2 * C + 2 * G - 16, 2 * G - 1, 4 * A + 2 * B - 2 * G - 13},
                           "(4a+2c+2g-16,2g-1,4a+2b-2g-13), 1<=g<=b-1")}});
        t.push_back({"p2s2", K::Edge, one, A - 1,
                     {span(one, A - 1, {4 * C + 2 * B + 2 * G - 13, 4 * A + 2 * B - 2 * G - 13, 2 * G - 1},
                           "(4c+2b+2g-13,4a+2b-2g-13,2g-1), 1<=g<=a-1")}});
        t.push_back({"r2t2", K::Edge, one, B - 1,
                     {span(one, B - 1, {4 * C + 2 * G - 10, 4 * A + 4 * B - 2 * G - 16, 4 * B - 2 * G - 8},
                           "(4c+2g-10,4a+4b-2g-16,4b-2g-8), 1<=g<=b-1")}});
        t.push_back({"q2u2", K::Edge, one, C - 1,
                     {span(one, C - 1, {2 * G, 4 * A + 2 * C + 2 * G - 15, 4 * B + 2 * C - 2 * G - 10},
                           "(2g,4a+2c+2g-15,4b+2c-2g-10), 1<=g<=c-1")}});
        return t;
    }();
    return table;
}

inline const FormulaFamilyInfo & info(HcFamily f) { return hc_family_table().at(static_cast<std::size_t>(f)); }

inline std::string_view to_string(HcFamily f) { return info(f).name; }

inline std::optional<HcFamily> parse_hc_family(std::string_view name)
{
    const auto & t = hc_family_table();
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i].name == name)
            return static_cast<HcFamily>(i);
    return std::nullopt;
}

namespace detail
{
    inline Code evaluate_family(const FormulaFamilyInfo & fam, int g, int a, int b, int c)
    {
        const int lo = fam.lo(a, b, c, 0), hi = fam.hi(a, b, c, 0);
        if (g < lo || g > hi)
            throw std::out_of_range("index " + std::to_string(g) + " outside " + std::string(fam.name) + " range [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");
        for (const auto & cs : fam.cases)
            if (g >= cs.lo(a, b, c, 0) && g <= cs.hi(a, b, c, 0))
                return {cs.code[0](a, b, c, g), cs.code[1](a, b, c, g), cs.code[2](a, b, c, g)};
        throw std::out_of_range("no printed case of " + std::string(fam.name) + " covers index " + std::to_string(g));
    }

    inline const FormulaCase * matching_case(const FormulaFamilyInfo & fam, int g, int a, int b, int c)
    {
        for (const auto & cs : fam.cases)
            if (g >= cs.lo(a, b, c, 0) && g <= cs.hi(a, b, c, 0))
                return &cs;
        return nullptr;
    }
}

// Printed code of element g of a family at HC(a,b,c), landmarks
// (p1:1, r1:1, p2:1). Throws std::out_of_range outside the family's range.
inline Code hc_formula_code(HcFamily family, int g, const HcParams & p)
{
    return detail::evaluate_family(info(family), g, p.a, p.b, p.c);
}

// Index range of a family at the given parameters.
inline std::pair<int, int> family_range(HcFamily family, const HcParams & p)
{
    const auto & fam = info(family);
    return {fam.lo(p.a, p.b, p.c, 0), fam.hi(p.a, p.b, p.c, 0)};
}

enum class SpFamily : int { P1, P2, Q1, Q2, R1, R2 };

inline const std::vector<FormulaFamilyInfo> & sp_family_table()
{
    using namespace expr;
    using K = Element::Kind;
    const Affine one = lit(1);
    static const std::vector<FormulaFamilyInfo> table = [&] {
        std::vector<FormulaFamilyInfo> t;
        t.push_back({"p1", K::Vertex, one, 2 * B - 1,
                     {{one, 2 * B - 3, {2 * B - G - 1, 2 * B - G - 2, G + 1}, "(2b-g-1,2b-g-2,g+1), 1<=g<=2b-3"},
                      {2 * B - 2, 2 * B - 2, {lit(1), lit(2), 2 * B - 1}, "(1,2,2b-1), g=2b-2"},
                      {2 * B - 1, 2 * B - 1, {lit(0), lit(3), 2 * B}, "(0,3,2b), g=2b-1"}}});
        t.push_back({"p2", K::Vertex, one, 2 * B - 1,
                     {{one, 2 * B - 3, {2 * B - G, 2 * B - G - 3, G + 2}, "(2b-g,2b-g-3,g+2), 1<=g<=2b-3"},
                      {2 * B - 2, 2 * B - 2, {lit(2), lit(1), 2 * B}, "(2,1,2b), g=2b-2"},
                      {2 * B - 1, 2 * B - 1, {lit(1), lit(2), 2 * B + 1}, "(1,2,2b+1), g=2b-1"}}});
        t.push_back({"q1", K::Vertex, one, 2 * C - 1,
                     {{one, 2 * C - 1, {2 * B + G - 1, 2 * B + G - 4, G + 1}, "(2b+g-1,2b+g-4,g+1), 1<=g<=2c-1"}}});
        t.push_back({"q2", K::Vertex, one, 2 * C - 1,
                     {{one, 2 * C - 1, {2 * B + G, 2 * B + G - 3, G}, "(2b+g,2b+g-3,g), 1<=g<=2c-1"}}});
        t.push_back({"r1", K::Vertex, one, 2 * A - 1,
                     {{one, 2 * A - 1, {2 * B + G - 1, 2 * A + G - 2, G - 1}, "(2b+g-1,2a+g-2,g-1), 1<=g<=2a-1"}}});
        t.push_back({"r2", K::Vertex, one, 2 * A - 1,
                     {{one, 2 * A - 1, {2 * B + G - 2, 2 * B + G - 3, G}, "(2b+g-2,2b+g-3,g), 1<=g<=2a-1"}}});
        return t;
    }();
    return table;
}

inline const FormulaFamilyInfo & info(SpFamily f) { return sp_family_table().at(static_cast<std::size_t>(f)); }

inline std::string_view to_string(SpFamily f) { return info(f).name; }

inline std::optional<SpFamily> sp_family_of(Family f)
{
    switch (f) {
        case Family::P1: return SpFamily::P1;
        case Family::P2: return SpFamily::P2;
        case Family::Q1: return SpFamily::Q1;
        case Family::Q2: return SpFamily::Q2;
        case Family::R1: return SpFamily::R1;
        case Family::R2: return SpFamily::R2;
        default: return std::nullopt;
    }
}

// Printed multirepresentation triple (in printed order) of vertex g of an SP
// family.
inline Code sp_formula_multirep(SpFamily family, int g, const SpParams & p)
{
    return detail::evaluate_family(info(family), g, p.a, p.b, p.c);
}

// Gaps and overlaps between the printed case ranges of a family.
struct CaseCoverage
{
    std::vector<int> uncovered;
    std::vector<int> overlapping;

    bool partitions() const { return uncovered.empty() && overlapping.empty(); }
};

inline CaseCoverage case_coverage(const FormulaFamilyInfo & fam, int a, int b, int c)
{
    CaseCoverage cov;
    for (int g = fam.lo(a, b, c, 0); g <= fam.hi(a, b, c, 0); ++g) {
        int hits = 0;
        for (const auto & cs : fam.cases)
            if (g >= cs.lo(a, b, c, 0) && g <= cs.hi(a, b, c, 0))
                ++hits;
        if (hits == 0)
            cov.uncovered.push_back(g);
        else if (hits > 1)
            cov.overlapping.push_back(g);
    }
    return cov;
}

// Where a family has several cases, evaluates every case at each index
// another case claims and records whether the expressions agree there. A
// boundary case such as "g=1" agrees with the general expression only when the
// general expression already produces it.
struct BoundaryComparison
{
    int index = 0;
    std::string_view claimed_by;
    std::string_view other_case;
    Code claimed_value;
    Code other_value;
    bool agree = false;
};

inline std::vector<BoundaryComparison> boundary_consistency(const FormulaFamilyInfo & fam, int a, int b, int c)
{
    std::vector<BoundaryComparison> out;
    if (fam.cases.size() < 2)
        return out;
    auto eval = [&](const FormulaCase & cs, int g) {
        return Code{cs.code[0](a, b, c, g), cs.code[1](a, b, c, g), cs.code[2](a, b, c, g)};
    };
    for (int g = fam.lo(a, b, c, 0); g <= fam.hi(a, b, c, 0); ++g) {
        const auto * claimed = detail::matching_case(fam, g, a, b, c);
        if (! claimed)
            continue;
        for (const auto & other : fam.cases) {
            if (&other == claimed)
                continue;
            // only compare against a case whose range touches g (shared index
            // or immediate neighbour of its range)
            const int lo = other.lo(a, b, c, 0), hi = other.hi(a, b, c, 0);
            if (g < lo - 1 || g > hi + 1)
                continue;
            auto cv = eval(*claimed, g), ov = eval(other, g);
            out.push_back({g, claimed->printed, other.printed, cv, ov, cv == ov});
        }
    }
    return out;
}

} // namespace metricdim

#endif
