// Exact planar primitives used by the PL machinery: points, segments,
// orientation predicates, polygon area and containment.
#pragma once

#include <optional>
#include <vector>

#include "pmb/rat.hpp"

namespace pmb {

struct Vec2 {
    Rat x, y;
    Vec2() = default;
    Vec2(Rat x_, Rat y_) : x(x_), y(y_) {}
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
    friend bool operator<(const Vec2& a, const Vec2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// >0 left turn, <0 right turn, 0 collinear
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    return cross(b - a, c - a).sign();
}

inline bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (orient(a, b, p) != 0) return false;
    return dot(p - a, b - a).sign() >= 0 && dot(p - b, a - b).sign() >= 0;
}

inline Vec2 lerp(const Vec2& a, const Vec2& b, const Rat& t) {
    return a + t * (b - a);
}

// Proper or improper intersection of closed segments.
bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

// Intersection point of two non-parallel lines through (a,b) and (c,d).
std::optional<Vec2> line_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

struct Polygon {
    std::vector<Vec2> pts;  // ccw
    Rat area2() const {     // twice the signed area
        Rat s(0);
        for (size_t i = 0; i < pts.size(); ++i)
            s += cross(pts[i], pts[(i + 1) % pts.size()]);
        return s;
    }
    bool contains(const Vec2& p) const;          // closed containment, convex or not
    bool strictly_contains(const Vec2& p) const; // open interior
};

struct Tri {
    Vec2 a, b, c;
    Rat area2() const { return cross(b - a, c - a); }
    bool contains(const Vec2& p) const {
        int s = area2().sign();
        if (s == 0) return false;
        int o1 = orient(a, b, p), o2 = orient(b, c, p), o3 = orient(c, a, p);
        if (s < 0) { o1 = -o1; o2 = -o2; o3 = -o3; }
        return o1 >= 0 && o2 >= 0 && o3 >= 0;
    }
    bool strictly_contains(const Vec2& p) const {
        int s = area2().sign();
        if (s == 0) return false;
        int o1 = orient(a, b, p), o2 = orient(b, c, p), o3 = orient(c, a, p);
        if (s < 0) { o1 = -o1; o2 = -o2; o3 = -o3; }
        return o1 > 0 && o2 > 0 && o3 > 0;
    }
};

// True if the open interiors of the triangles meet.
bool tri_interiors_meet(const Tri& s, const Tri& t);

// Fan-triangulate a simple polygon (ear clipping; exact arithmetic).
std::vector<Tri> triangulate_polygon(const Polygon& poly);

}  // namespace pmb
