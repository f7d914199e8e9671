#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "pmb/realize.hpp"

using namespace pmb;

TEST_CASE("bigon removal empties the trivial handle loop") {
    auto w = CurveWord::parse("(1 H1 1 D)");
    CHECK(minimize(w).empty());
    CHECK(!is_essential(w));
}

TEST_CASE("core loops are already minimal") {
    auto h2 = CurveWord::parse("(3 H2 4 D)");
    CHECK(minimize(h2) == h2);
    CHECK(is_minimal(h2));
    CHECK(scc_type(h2) == CurveType{0, 1});
    auto h1 = CurveWord::parse("(1 H1 2 D)");
    CHECK(scc_type(h1) == CurveType{1, 0});
    auto two = CurveWord::parse("(1 H1 2 D 1 H1 2 D)");
    CHECK(is_minimal(two));
    CHECK(scc_type(two) == CurveType{2, 0});
}

TEST_CASE("nested bigons reduce stepwise") {
    auto w = CurveWord::parse("(1 H1 1 D 3 H2 3 D)");
    CHECK(minimize(w).empty());
    auto v = CurveWord::parse("(3 H2 4 D 1 H1 1 D 4 H2 3 D)");
    auto mv = minimize(v);
    CHECK(mv.empty());
}

TEST_CASE("the double handle pass word is unrealizable") {
    // both pass counts through H2 equal to two cannot be embedded
    auto w = CurveWord::parse("(3 H2 4 D 3 H2 4 D)");
    CHECK(!is_realizable(w));
    CHECK(!is_minimal(w));
}

TEST_CASE("realization finds the full type list and nothing else") {
    std::set<CurveType> seen;
    for (const auto& w : enumerate_minimal_closed(8)) {
        auto t = scc_type(w);  // throws if outside the admissible list
        seen.insert(t);
    }
    CHECK(seen.size() == 6);  // every admissible type occurs
}

TEST_CASE("trans-boundary arc reduces to a segment position") {
    auto w = ArcWord::parse("T2 | 3 H2 4 D 1 H1 2 | T1");
    CHECK(is_realizable(w));
    auto m = minimize(w);
    CHECK(m.size() == 0);
    // lands in the [2,3] position (a segment between T2 and T3 or T4)
    auto t = classify_arc(m);
    CHECK(t == bracket_type(2, 3));
    CHECK(is_essential(w));
}

TEST_CASE("minimize is idempotent on every small well-formed word") {
    for (const auto& w : enumerate_wellformed_closed(6, false)) {
        auto m = minimize(w);
        CHECK(minimize(m) == m);
        CHECK(m.size() <= w.size());
    }
    for (const auto& w : enumerate_wellformed_arcs(4, false)) {
        auto m = minimize(w);
        CHECK(minimize(m) == m);
        CHECK(m.size() <= w.size());
    }
}

TEST_CASE("classify_arc on the canonical representatives") {
    CHECK(classify_arc(ArcWord::parse("T1 | | T2")) == bracket_type(1, 2));
    CHECK(classify_arc(ArcWord::parse("T2 | | T3")) == bracket_type(2, 3));
    CHECK(classify_arc(ArcWord::parse("T2 | | T4")) == bracket_type(2, 3));
    CHECK(classify_arc(ArcWord::parse("T1 | | T3")) == bracket_type(1, 3));
    CHECK(classify_arc(ArcWord::parse("T1 | | T4")) == bracket_type(1, 3));
    CHECK(classify_arc(ArcWord::parse("T3 | | T4")) == bracket_type(3, 4));
    CHECK(classify_arc(ArcWord::parse("H1A | | H1B")) == bracket_type(1, 3));
    CHECK(classify_arc(ArcWord::parse("H2A | | H2B")) == bracket_type(2, 3));
    CHECK(classify_arc(ArcWord::parse("T1 | 3 H2 4 | T1")) == brace_type(0, 1));
    CHECK(classify_arc(ArcWord::parse("T2 | 1 H1 2 | T2")) == brace_type(1, 0));
    CHECK(classify_arc(ArcWord::parse("T2 | 1 H1 2 D 1 H1 2 | T2")) == brace_type(2, 0));
}

TEST_CASE("inessential arcs are rejected by classify and detected") {
    auto w = ArcWord::parse("T1 | | T1");
    CHECK(!is_essential(w));
    CHECK_THROWS_AS(classify_arc(w), CurveError);
    CHECK(is_essential(ArcWord::parse("T1 | | T2")));
    // a one-crossing spur slides away entirely
    auto spur = ArcWord::parse("H1A | 1 | T1");
    auto m = minimize(spur);
    CHECK(m.size() == 0);
    CHECK(!is_essential(spur));
}

TEST_CASE("arc enumeration respects the endpoint partition of types") {
    const SurfaceModel& m = build_surface();
    std::map<std::string, std::set<ArcType>> part;
    for (const auto& w : enumerate_minimal_arcs(6)) {
        if (!is_essential(w)) continue;
        BdComp b1 = m.segment_component(w.end1), b2 = m.segment_component(w.end2);
        std::string key = b1 == b2 ? (b1 == BdComp::C1 ? "C1C1" : "C2C2") : "cross";
        part[key].insert(classify_arc(w));
    }
    CHECK(part["cross"] == std::set<ArcType>({bracket_type(1, 2), bracket_type(2, 3)}));
    CHECK(part["C2C2"] ==
          std::set<ArcType>({brace_type(1, 0), brace_type(2, 0), brace_type(2, 1)}));
    CHECK(part["C1C1"] ==
          std::set<ArcType>({bracket_type(1, 3), bracket_type(3, 4), brace_type(0, 1)}));
}

TEST_CASE("boundary chord closure keeps arc words minimal") {
    // minimal arcs with both endpoints on T2, closed up through D along the
    // boundary, stay minimal: no crossings are lost
    int checked = 0;
    for (const auto& w : enumerate_minimal_arcs(6)) {
        if (w.end1 != Edge::T2 || w.end2 != Edge::T2 || w.size() == 0) continue;
        CurveWord closed;
        closed.crossings = w.crossings;
        closed.regions = w.regions;
        closed.regions.push_back(Region::D);  // the chord W lies in D
        closed.check_valid();
        CHECK(minimize(closed).size() == closed.size());
        ++checked;
    }
    CHECK(checked > 0);
}
