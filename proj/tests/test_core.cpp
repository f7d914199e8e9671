#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pmb/snf.hpp"
#include "pmb/vec.hpp"

using namespace pmb;

TEST_CASE("rational arithmetic") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(Rat(-4, -8) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(7, 2).str() == "7/2");
    CHECK(Rat::parse("-3/9") == Rat(-1, 3));
    CHECK(Rat(5) > Rat(9, 2));
}

TEST_CASE("segment predicates") {
    Vec2 a{Rat(0), Rat(0)}, b{Rat(4), Rat(4)}, c{Rat(0), Rat(4)}, d{Rat(4), Rat(0)};
    CHECK(segments_intersect(a, b, c, d));
    CHECK(!segments_intersect(a, c, d, b));
    CHECK(on_segment(Vec2{Rat(2), Rat(2)}, a, b));
    CHECK(!on_segment(Vec2{Rat(2), Rat(3)}, a, b));
    auto p = line_intersect(a, b, c, d);
    REQUIRE(p.has_value());
    CHECK(*p == Vec2{Rat(2), Rat(2)});
}

TEST_CASE("polygon containment and triangulation") {
    Polygon sq{{{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(4), Rat(4)}, {Rat(0), Rat(4)}}};
    CHECK(sq.strictly_contains({Rat(1), Rat(1)}));
    CHECK(!sq.strictly_contains({Rat(4), Rat(2)}));
    CHECK(sq.contains({Rat(4), Rat(2)}));
    CHECK(!sq.contains({Rat(5), Rat(2)}));
    auto tris = triangulate_polygon(sq);
    CHECK(tris.size() == 2);
    Rat total(0);
    for (auto& t : tris) total += t.area2();
    CHECK(total == sq.area2());

    // non-convex
    Polygon l{{{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(4), Rat(2)},
               {Rat(2), Rat(2)}, {Rat(2), Rat(4)}, {Rat(0), Rat(4)}}};
    auto lt = triangulate_polygon(l);
    Rat la(0);
    for (auto& t : lt) la += t.area2();
    CHECK(la == l.area2());
}

TEST_CASE("triangle interior overlap") {
    Tri t1{{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(0), Rat(4)}};
    Tri t2{{Rat(4), Rat(4)}, {Rat(4), Rat(0)}, {Rat(0), Rat(4)}};  // shares an edge
    CHECK(!tri_interiors_meet(t1, t2));
    Tri t3{{Rat(1), Rat(1)}, {Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
    CHECK(tri_interiors_meet(t1, t3));
}

TEST_CASE("smith normal form") {
    IMat a = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    SmithResult s = smith(a);
    IMat lhs = imat_mul(imat_mul(s.u, a), s.v);
    CHECK(lhs == s.d);
    CHECK(imat_mul(s.v, s.vinv) == imat_identity(3));
    REQUIRE(s.diag.size() == 3);
    CHECK(s.diag[0] == 2);
    CHECK(s.diag[1] == 2);
    CHECK(s.diag[2] == 156);
    for (size_t i = 1; i < s.diag.size(); ++i) CHECK(s.diag[i] % s.diag[i - 1] == 0);
}

TEST_CASE("quotient group") {
    // Z^2 / <(2,0)> = Z + Z/2
    QuotientGroup q = quotient(2, {{2, 0}});
    CHECK(q.group.free_rank == 1);
    REQUIRE(q.group.torsion.size() == 1);
    CHECK(q.group.torsion[0] == 2);
    CHECK(q.coords({1, 0}) != q.coords({0, 0}));
    CHECK(q.coords({2, 0}) == q.coords({0, 0}));
    CHECK(q.coords({1, 5}) != q.coords({1, 4}));
}

TEST_CASE("homology of a circle cell structure") {
    // one vertex, one edge, no faces: H1 = Z
    IMat d1 = imat(1, 1);
    IMat d2 = imat(1, 0);
    HomologyGroup h = homology_of(d1, d2);
    CHECK(h.group.free_rank == 1);
    CHECK(h.group.torsion.empty());
    CHECK(h.coords({1}) != h.coords({0}));
    CHECK(h.coords({2}) != h.coords({1}));
}
