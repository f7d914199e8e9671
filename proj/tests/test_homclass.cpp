#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pmb/homclass.hpp"

using namespace pmb;

TEST_CASE("inessential circle has the zero class") {
    CurveWord empty;
    auto z = relative_class(empty);
    auto bigon = relative_class(CurveWord::parse("(1 H1 1 D)"));
    CHECK(z == bigon);
    auto h2 = relative_class(CurveWord::parse("(3 H2 4 D)"));
    CHECK(h2 != z);
}

TEST_CASE("core loops generate independent classes") {
    auto h1 = relative_class(CurveWord::parse("(1 H1 2 D)"));
    auto h2 = relative_class(CurveWord::parse("(3 H2 4 D)"));
    CHECK(h1 != h2);
    CHECK(h1.coords.size() == 2);
    // the (2,0) loop doubles the twisted core
    auto two = relative_class(CurveWord::parse("(1 H1 2 D 1 H1 2 D)"));
    CHECK(two != h1);
}

TEST_CASE("the three C1-to-C1 arc classes are pairwise distinct") {
    auto a = relative_class(ArcWord::parse("T1 | | T3"));
    auto b = relative_class(ArcWord::parse("T3 | | T4"));
    auto c = relative_class(ArcWord::parse("T1 | 3 H2 4 | T1"));
    CHECK(a != b);
    CHECK(a != c);
    CHECK(b != c);
}

TEST_CASE("classes are invariant under the minimization moves") {
    for (const auto& w : enumerate_wellformed_closed(6, false)) {
        if (!is_realizable(w)) continue;
        auto m = minimize(w);
        if (!is_realizable(m)) continue;
        CHECK(relative_class(w) == relative_class(m));
    }
    for (const auto& w : enumerate_wellformed_arcs(4, false)) {
        if (!is_realizable(w)) continue;
        auto m = minimize(w);
        CHECK(relative_class(w) == relative_class(m));
    }
}

TEST_CASE("classes agree across all embeddings of one word") {
    for (const auto& w : enumerate_minimal_arcs(5)) {
        Realization skel = system_skeleton({SystemComponent::open_arc(w)});
        static const HomologyPresentation h = homology(build_surface(), true);
        std::set<IVec> classes;
        for_each_realization(skel, {}, [&](const Realization& r) {
            IVec full = skeleton_chain(r);
            classes.insert(h.rel.coords(IVec(full.begin(), full.begin() + 4)));
            return false;
        });
        CHECK(classes.size() == 1);
    }
}

TEST_CASE("equal-position arcs share a class") {
    CHECK(relative_class(ArcWord::parse("T1 | | T3")) ==
          relative_class(ArcWord::parse("T1 | | T4")));
    CHECK(relative_class(ArcWord::parse("T1 | | T3")) ==
          relative_class(ArcWord::parse("H1A | | H1B")));
    CHECK(relative_class(ArcWord::parse("T2 | | T3")) ==
          relative_class(ArcWord::parse("H2A | | H2B")));
}
