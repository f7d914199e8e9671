// Combinatorial cell structure of the once-punctured Moebius band:
// a disc D with a twisted handle H1 attached along A1, A2 and an untwisted
// handle H2 attached along A3, A4.  The cyclic order of attaching arcs and
// free boundary arcs around dD and the handle attachment pairings are
// recovered by a constraint search over the finite candidate space.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pmb/snf.hpp"

namespace pmb {

enum class Cell { D, H1, H2 };
enum class Region { D, H1, H2 };  // complementary region between crossings

// 12 edges of the base complex
enum class Edge { A1, A2, A3, A4, T1, T2, T3, T4, S1A, S1B, S2A, S2B };

inline bool edge_is_A(Edge e) { return int(e) < 4; }
inline bool edge_is_T(Edge e) { return int(e) >= 4 && int(e) < 8; }
inline bool edge_is_side(Edge e) { return int(e) >= 8; }
inline int arc_label(Edge e) { return int(e) + 1; }           // A1..A4 -> 1..4
inline Edge arc_edge(int label) { return Edge(label - 1); }   // 1..4 -> A1..A4
inline Region handle_of_arc(int label) { return label <= 2 ? Region::H1 : Region::H2; }
std::string edge_name(Edge e);
std::optional<Edge> edge_from_name(const std::string& s);

// Region a boundary segment lies on
Region segment_region(Edge seg);

enum class BdComp { C1, C2 };
inline BdComp other_comp(BdComp c) { return c == BdComp::C1 ? BdComp::C2 : BdComp::C1; }
std::string comp_name(BdComp c);

enum class Marked { X1, X2 };
inline Marked other_marked(Marked m) { return m == Marked::X1 ? Marked::X2 : Marked::X1; }
inline BdComp comp_of_marked(Marked m) { return m == Marked::X1 ? BdComp::C1 : BdComp::C2; }
inline Marked marked_of_comp(BdComp c) { return c == BdComp::C1 ? Marked::X1 : Marked::X2; }
std::string marked_name(Marked m);

// Canonicalize a cyclic label sequence: lexicographically least rotation of
// the sequence or its reversal.
std::vector<int> canonical_cyclic(const std::vector<int>& seq);

struct BoundaryStep {
    Edge seg;        // T arc or handle side
    bool forward;    // traversed along the edge's own orientation
    int crossing;    // arc label 1..4 of the junction at the end of this step
};

struct Circuit {
    std::vector<BoundaryStep> steps;
    std::vector<int> pattern() const;  // crossing labels in order
    bool contains(Edge seg) const;
};

struct SurfaceModel {
    // dD as a ccw cyclic sequence of 8 edges (alternating T and A arcs)
    std::array<Edge, 8> d_order;
    // handle pairing: true = sides join start-start and end-end (w.r.t. the
    // direction each attaching arc is traversed by the dD cycle)
    bool pairing_ss[2];  // H1, H2

    // derived data
    // junction j sits between d_order[j] and d_order[(j+1)%8]
    struct JunctionInfo {
        int a_label;   // tip of which A arc
        Edge t_edge;   // which T arc ends here
        Edge side;     // which handle side ends here
    };
    std::array<JunctionInfo, 8> junctions;
    // endpoints (junction ids) of every edge, in the edge's own orientation
    std::array<std::pair<int, int>, 12> edge_ends;
    Circuit c1, c2;

    // region boundary cycles: pairs (edge, forward) around each 2-cell
    std::vector<std::pair<Edge, bool>> region_cycle(Region r) const;

    BdComp segment_component(Edge seg) const;
    Edge marked_segment(Marked m) const { return m == Marked::X1 ? Edge::T1 : Edge::T2; }

    int euler_characteristic() const { return 8 - 12 + 3; }

    std::string to_json() const;
};

// Searches cyclic orders and attachment flips for the unique model (up to
// relabeling) whose two boundary circuits cross the attaching arcs in the
// patterns (121234) and (34), with H1 twisted and H2 not.
const SurfaceModel& build_surface();

// Number of raw solutions the constraint search finds (before pinning the
// canonical representative); exposed for tests.
int surface_search_solution_count();

struct ChainComplex {
    IMat d1;  // 8 x 12
    IMat d2;  // 12 x 3
    // relative variant: A-edge rows only, all boundary cells collapsed
    IMat d2_rel;  // 4 x 3
};

ChainComplex base_chain_complex(const SurfaceModel& m);

struct HomologyPresentation {
    AbelianGroup group;
    HomologyGroup abs;    // valid when relative == false
    QuotientGroup rel;    // valid when relative == true
    bool relative = false;
};

HomologyPresentation homology(const SurfaceModel& m, bool relative);

}  // namespace pmb
