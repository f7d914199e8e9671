#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pmb/words.hpp"

using namespace pmb;

TEST_CASE("closed word round trip") {
    auto w = CurveWord::parse("(1 H1 2 D)");
    CHECK(w.size() == 2);
    CHECK(w.str() == "(1 H1 2 D)");
    CHECK(CurveWord::parse(w.str()) == w);
    auto h2 = CurveWord::parse("(3 H2 4 D)");
    CHECK(h2.crossings == std::vector<int>({3, 4}));
}

TEST_CASE("closed word validity") {
    CHECK_THROWS_AS(CurveWord::parse("(1 H2 2 D)"), WordError);  // H2 does not border A1
    CHECK_THROWS_AS(CurveWord::parse("(1 D 2 D)"), WordError);   // crossing must separate
    CHECK_THROWS_AS(CurveWord::parse("(5 D 1 H1)"), WordError);
    CHECK_THROWS_AS(CurveWord::parse("(1 H1)"), WordError);      // single crossing cannot close
}

TEST_CASE("closed word canonical form merges rotations and reversals") {
    auto a = CurveWord::parse("(1 H1 2 D 3 H2 4 D)");
    auto b = CurveWord::parse("(3 H2 4 D 1 H1 2 D)");
    CHECK(a.canonical() == b.canonical());
    auto c = CurveWord::parse("(4 H2 3 D 2 H1 1 D)");  // reversal
    CHECK(a.canonical() == c.canonical());
}

TEST_CASE("arc word round trip") {
    auto w = ArcWord::parse("T1 | 3 H2 4 | T1");
    CHECK(w.end1 == Edge::T1);
    CHECK(w.size() == 2);
    CHECK(w.str() == "T1 | 3 H2 4 | T1");
    CHECK(ArcWord::parse(w.str()) == w);
    auto z = ArcWord::parse("T1 | | T3");
    CHECK(z.size() == 0);
    CHECK(z.str() == "T1 | | T3");
    auto s = ArcWord::parse("H1A | | H1B");
    CHECK(segment_region(s.end1) == Region::H1);
}

TEST_CASE("arc word validity") {
    CHECK_THROWS_AS(ArcWord::parse("T1 | | H2B"), WordError);  // regions differ, no crossing
    CHECK_THROWS_AS(ArcWord::parse("T1 | 1 | T3"), WordError); // both sides in D
    CHECK_THROWS_AS(ArcWord::parse("A1 | | A2"), WordError);   // attaching arc as endpoint
    CHECK_NOTHROW(ArcWord::parse("T1 | 1 | H1A"));
}

TEST_CASE("arc reversal canonicalization") {
    auto w = ArcWord::parse("T2 | 3 H2 4 D 1 H1 2 | T1");
    CHECK(w.reversed().str() == "T1 | 2 H1 1 D 4 H2 3 | T2");
    CHECK(w.canonical() == w.reversed().canonical());
}

TEST_CASE("type formatting") {
    CHECK(CurveType{0, 1}.str() == "(0,1)");
    CHECK(bracket_type(1, 3).str() == "[1,3]");
    CHECK(brace_type(2, 1).str() == "{2,1}");
    CHECK(ArcType::parse("[1,3]") == bracket_type(1, 3));
    CHECK(ArcType::parse("{0,1}") == brace_type(0, 1));
    CHECK(admissible_arc_types().size() == 8);
    CHECK(admissible_curve_types().size() == 6);
}
