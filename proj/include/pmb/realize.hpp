// Embedded realizations of curve/arc systems.  A system is realized by
// choosing the order of its crossing points along each attaching arc and of
// its endpoints along each boundary segment; the pieces between crossings
// are chords of the three disc regions, and embeddedness is exactly
// pairwise non-crossing of the chords in every region.
//
// Minimal position is decided through two move families on realizations:
// removing a chord with both ends on one attaching arc (an innermost such
// chord bounds an empty bigon) and sliding an arc endpoint across an
// attaching-arc tip on the boundary (an empty half-bigon).
#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "pmb/words.hpp"

namespace pmb {

enum class CurveErrorKind {
    Malformed,
    Unrealizable,
    EmptyWord,
    TypeNotRealizable,
    Unclassifiable,
    Inessential,
};

struct CurveError : std::runtime_error {
    CurveErrorKind kind;
    CurveError(CurveErrorKind k, const std::string& what)
        : std::runtime_error(what), kind(k) {}
};

struct SystemComponent {
    bool closed = true;
    CurveWord curve;
    ArcWord arc;
    static SystemComponent closed_curve(CurveWord w) {
        SystemComponent c; c.closed = true; c.curve = std::move(w); return c;
    }
    static SystemComponent open_arc(ArcWord w) {
        SystemComponent c; c.closed = false; c.arc = std::move(w); return c;
    }
    size_t crossing_count() const { return closed ? curve.size() : arc.size(); }
};

struct Realization {
    struct SiteInfo {
        int comp;   // component index
        int pos;    // crossing index, or -1 (start endpoint) / -2 (end endpoint)
        Edge edge;  // carrier edge
    };
    struct Chord {
        int a, b;       // site ids
        Region region;
        int comp;
    };
    std::vector<SystemComponent> comps;
    std::vector<SiteInfo> sites;
    std::vector<Chord> chords;
    std::array<std::vector<int>, 12> edge_order;  // site ids along each edge

    int site_of(int comp, int pos) const;
};

// Deterministic skeleton (sites and chords, no ordering yet).
Realization system_skeleton(const std::vector<SystemComponent>& comps);

// Enumerate embedded orderings; `pinned` fixes the site order along chosen
// edges.  The visitor returns true to stop early; the function reports
// whether it was stopped.
bool for_each_realization(const Realization& skeleton,
                          const std::map<Edge, std::vector<int>>& pinned,
                          const std::function<bool(const Realization&)>& visit);

std::optional<Realization> realize_system(const std::vector<SystemComponent>& comps,
                                          const std::map<Edge, std::vector<int>>& pinned = {});

bool is_realizable(const CurveWord& w);
bool is_realizable(const ArcWord& w);

struct SlideMove {
    int comp;
    bool at_start;      // which arc endpoint slides
    Edge to_segment;    // segment on the far side of the tip
};
std::vector<SlideMove> available_slides(const Realization& r);

// Rewrites to minimal position (bigon removals, then endpoint slides on the
// canonical realization); idempotent and strictly crossing-decreasing.
CurveWord minimize(const CurveWord& w);
ArcWord minimize(const ArcWord& w);

bool is_minimal(const CurveWord& w);
bool is_minimal(const ArcWord& w);

bool is_essential(const CurveWord& w);
bool is_essential(const ArcWord& w);

CurveType scc_type(const CurveWord& w);  // pre: minimal, nonempty
ArcType classify_arc(const ArcWord& w);  // pre: minimal, essential

// Handle pass counts (components of the intersection with H1 and H2),
// counting partial passes at side endpoints.
std::pair<int, int> handle_passes(const ArcWord& w);

// All well-formed words up to the crossing bound, canonicalized and deduped.
std::vector<CurveWord> enumerate_wellformed_closed(int max_crossings, bool skip_bigon_pairs);
std::vector<ArcWord> enumerate_wellformed_arcs(int max_crossings, bool skip_bigon_pairs);

// Realizable words in minimal position (the inputs of the type-law checks).
std::vector<CurveWord> enumerate_minimal_closed(int max_crossings);
std::vector<ArcWord> enumerate_minimal_arcs(int max_crossings);

}  // namespace pmb
