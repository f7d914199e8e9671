// Crossing-word encodings of simple closed curves and properly embedded
// arcs.  A closed word is a cyclic list of crossings with the attaching
// arcs, annotated with the complementary region entered after each
// crossing.  An arc word adds two boundary endpoints; the regions at the
// ends are implied by the endpoint segments.
//
// Text grammar (whitespace separated):
//   closed: "( c1 r1 c2 r2 ... ck rk )"      rk closes up to c1
//   arc:    "E1 | c1 r1 c2 ... rk-1 ck | E2"  zero crossings: "E1 | | E2"
// with crossings c in {1,2,3,4}, regions r in {D,H1,H2} and endpoints E in
// {T1,T2,T3,T4,H1A,H1B,H2A,H2B}.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pmb/surface.hpp"

namespace pmb {

struct WordError : std::runtime_error {
    explicit WordError(const std::string& what) : std::runtime_error(what) {}
};

struct CurveWord {
    std::vector<int> crossings;        // arc labels 1..4
    std::vector<Region> regions;       // regions[i] follows crossings[i]
    bool empty() const { return crossings.empty(); }
    size_t size() const { return crossings.size(); }

    void check_valid() const;          // throws WordError
    std::string str() const;
    static CurveWord parse(const std::string& s);
    // lexicographically least rotation/reflection, for dedup
    CurveWord canonical() const;
    friend bool operator==(const CurveWord& a, const CurveWord& b) {
        return a.crossings == b.crossings && a.regions == b.regions;
    }
    friend bool operator<(const CurveWord& a, const CurveWord& b);
};

struct ArcWord {
    Edge end1 = Edge::T1, end2 = Edge::T1;  // boundary segments
    std::vector<int> crossings;
    std::vector<Region> regions;  // size = crossings.size() - 1 (between crossings)

    size_t size() const { return crossings.size(); }
    Region region_before(size_t i) const;  // region of the segment entering crossing i
    Region region_after(size_t i) const;   // region of the segment leaving crossing i

    void check_valid() const;
    std::string str() const;
    static ArcWord parse(const std::string& s);
    ArcWord reversed() const;
    ArcWord canonical() const;  // min of self and reversal
    friend bool operator==(const ArcWord& a, const ArcWord& b) {
        return a.end1 == b.end1 && a.end2 == b.end2 && a.crossings == b.crossings &&
               a.regions == b.regions;
    }
    friend bool operator<(const ArcWord& a, const ArcWord& b);
};

std::string region_name(Region r);
Region region_from_name(const std::string& s);

// Types in the classification of essential curves and arcs.
struct CurveType {
    int r1 = 0, r2 = 0;  // components crossing H1, H2
    friend bool operator==(const CurveType& a, const CurveType& b) {
        return a.r1 == b.r1 && a.r2 == b.r2;
    }
    friend bool operator<(const CurveType& a, const CurveType& b) {
        return a.r1 != b.r1 ? a.r1 < b.r1 : a.r2 < b.r2;
    }
    std::string str() const;
};

// Valid closed types in minimal position
const std::vector<CurveType>& admissible_curve_types();

struct ArcType {
    // bracket [i,j]: isotopic to a segment between Ti and Tj;
    // brace {r1,r2}: handle crossing counts
    bool bracket = true;
    int i = 1, j = 2;
    friend bool operator==(const ArcType& a, const ArcType& b) {
        return a.bracket == b.bracket && a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const ArcType& a, const ArcType& b) {
        if (a.bracket != b.bracket) return a.bracket > b.bracket;
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
    std::string str() const;
    static ArcType parse(const std::string& s);
};

inline ArcType bracket_type(int i, int j) { return ArcType{true, i, j}; }
inline ArcType brace_type(int r1, int r2) { return ArcType{false, r1, r2}; }

// The eight admissible arc types
const std::vector<ArcType>& admissible_arc_types();

}  // namespace pmb
