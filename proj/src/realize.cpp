#include "pmb/realize.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace pmb {

namespace {

const SurfaceModel& model() { return build_surface(); }

const std::vector<std::pair<Edge, bool>>& region_cycle(Region r) {
    static const auto d = model().region_cycle(Region::D);
    static const auto h1 = model().region_cycle(Region::H1);
    static const auto h2 = model().region_cycle(Region::H2);
    switch (r) {
        case Region::D: return d;
        case Region::H1: return h1;
        default: return h2;
    }
}

}  // namespace

int Realization::site_of(int comp, int pos) const {
    for (size_t i = 0; i < sites.size(); ++i)
        if (sites[i].comp == comp && sites[i].pos == pos) return int(i);
    throw std::logic_error("site_of: no such site");
}

Realization system_skeleton(const std::vector<SystemComponent>& comps) {
    Realization r;
    r.comps = comps;
    for (int ci = 0; ci < int(comps.size()); ++ci) {
        const auto& c = comps[ci];
        if (c.closed) {
            c.curve.check_valid();
            int n = int(c.curve.size());
            if (n == 0) continue;  // empty closed word has no sites
            int base = int(r.sites.size());
            for (int k = 0; k < n; ++k)
                r.sites.push_back({ci, k, arc_edge(c.curve.crossings[k])});
            for (int k = 0; k < n; ++k)
                r.chords.push_back({base + k, base + (k + 1) % n, c.curve.regions[k], ci});
        } else {
            c.arc.check_valid();
            int n = int(c.arc.size());
            int s1 = int(r.sites.size());
            r.sites.push_back({ci, -1, c.arc.end1});
            for (int k = 0; k < n; ++k)
                r.sites.push_back({ci, k, arc_edge(c.arc.crossings[k])});
            int s2 = int(r.sites.size());
            r.sites.push_back({ci, -2, c.arc.end2});
            int prev = s1;
            for (int k = 0; k < n; ++k) {
                r.chords.push_back({prev, s1 + 1 + k, c.arc.region_before(k), ci});
                prev = s1 + 1 + k;
            }
            r.chords.push_back({prev, s2, n == 0 ? segment_region(c.arc.end1)
                                                 : c.arc.region_after(n - 1), ci});
        }
    }
    return r;
}

namespace {

// Linear order of all sites around a region boundary, for the current edge
// orders in `r`.
std::vector<int> region_site_cycle(const Realization& r, Region reg) {
    std::vector<int> out;
    for (auto [e, fwd] : region_cycle(reg)) {
        const auto& lst = r.edge_order[int(e)];
        if (fwd)
            out.insert(out.end(), lst.begin(), lst.end());
        else
            out.insert(out.end(), lst.rbegin(), lst.rend());
    }
    return out;
}

bool chords_cross(int n, int pa, int pb, int pc, int pd) {
    auto inside = [&](int x) {
        // strictly inside the cyclic interval (pa, pb)
        if (pa < pb) return x > pa && x < pb;
        return x > pa || x < pb;
    };
    return inside(pc) != inside(pd);
}

struct OrderSearch {
    const Realization& skel;
    const std::map<Edge, std::vector<int>>& pinned;
    const std::function<bool(const Realization&)>& visit;
    Realization work;
    // edges to permute, most-constrained (largest) first
    std::vector<Edge> free_edges;
    bool stopped = false;

    bool region_ok(Region reg) {
        // check all chords of the region whose sites are already placed
        auto cyc = region_site_cycle(work, reg);
        std::vector<int> pos(skel.sites.size(), -1);
        for (size_t i = 0; i < cyc.size(); ++i) pos[cyc[i]] = int(i);
        std::vector<const Realization::Chord*> cs;
        for (const auto& ch : skel.chords)
            if (ch.region == reg && pos[ch.a] >= 0 && pos[ch.b] >= 0) cs.push_back(&ch);
        int n = int(cyc.size());
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = i + 1; j < cs.size(); ++j)
                if (chords_cross(n, pos[cs[i]->a], pos[cs[i]->b], pos[cs[j]->a], pos[cs[j]->b]))
                    return false;
        return true;
    }

    bool all_regions_ok() {
        for (Region reg : {Region::D, Region::H1, Region::H2})
            if (!region_ok(reg)) return false;
        return true;
    }

    void rec(size_t k) {
        if (stopped) return;
        if (k == free_edges.size()) {
            if (all_regions_ok() && visit(work)) stopped = true;
            return;
        }
        Edge e = free_edges[k];
        auto& lst = work.edge_order[int(e)];
        std::sort(lst.begin(), lst.end());
        // try every permutation of the sites on this edge
        std::vector<int> perm = lst;
        do {
            lst = perm;
            // partial pruning: regions adjacent to this edge, restricted to
            // chords whose four sites are all on already-ordered edges, are
            // re-checked in full at the leaf; a light check here keeps the
            // search small
            if (all_partial_ok(k)) rec(k + 1);
            if (stopped) return;
        } while (std::next_permutation(perm.begin(), perm.end()));
        lst.clear();
        std::sort(perm.begin(), perm.end());
        lst = perm;
    }

    bool all_partial_ok(size_t k) {
        // chords with both sites on edges ordered so far must be non-crossing
        std::set<int> ready;
        for (size_t i = 0; i <= k; ++i) ready.insert(int(free_edges[i]));
        for (const auto& [e, v] : pinned) ready.insert(int(e));
        for (Region reg : {Region::D, Region::H1, Region::H2}) {
            auto cyc = region_site_cycle(work, reg);
            std::vector<int> pos(skel.sites.size(), -1);
            for (size_t i = 0; i < cyc.size(); ++i) pos[cyc[i]] = int(i);
            std::vector<const Realization::Chord*> cs;
            for (const auto& ch : skel.chords) {
                if (ch.region != reg) continue;
                if (ready.count(int(skel.sites[ch.a].edge)) &&
                    ready.count(int(skel.sites[ch.b].edge)) && pos[ch.a] >= 0 && pos[ch.b] >= 0)
                    cs.push_back(&ch);
            }
            int n = int(cyc.size());
            for (size_t i = 0; i < cs.size(); ++i)
                for (size_t j = i + 1; j < cs.size(); ++j)
                    if (chords_cross(n, pos[cs[i]->a], pos[cs[i]->b], pos[cs[j]->a], pos[cs[j]->b]))
                        return false;
        }
        return true;
    }
};

}  // namespace

bool for_each_realization(const Realization& skeleton,
                          const std::map<Edge, std::vector<int>>& pinned,
                          const std::function<bool(const Realization&)>& visit) {
    Realization work = skeleton;
    for (auto& v : work.edge_order) v.clear();
    std::array<std::vector<int>, 12> on_edge;
    for (size_t i = 0; i < skeleton.sites.size(); ++i)
        on_edge[int(skeleton.sites[i].edge)].push_back(int(i));
    for (const auto& [e, order] : pinned) {
        work.edge_order[int(e)] = order;
    }
    OrderSearch s{skeleton, pinned, visit, work, {}, false};
    for (int e = 0; e < 12; ++e) {
        if (pinned.count(Edge(e))) continue;
        if (on_edge[e].empty()) continue;
        s.work.edge_order[e] = on_edge[e];
        s.free_edges.push_back(Edge(e));
    }
    std::sort(s.free_edges.begin(), s.free_edges.end(), [&](Edge a, Edge b) {
        return on_edge[int(a)].size() > on_edge[int(b)].size();
    });
    s.rec(0);
    return s.stopped;
}

std::optional<Realization> realize_system(const std::vector<SystemComponent>& comps,
                                          const std::map<Edge, std::vector<int>>& pinned) {
    Realization skel = system_skeleton(comps);
    std::optional<Realization> found;
    for_each_realization(skel, pinned, [&](const Realization& r) {
        found = r;
        return true;
    });
    return found;
}

bool is_realizable(const CurveWord& w) {
    if (w.empty()) return true;
    return realize_system({SystemComponent::closed_curve(w)}).has_value();
}

bool is_realizable(const ArcWord& w) {
    return realize_system({SystemComponent::open_arc(w)}).has_value();
}

std::vector<SlideMove> available_slides(const Realization& r) {
    std::vector<SlideMove> out;
    const SurfaceModel& m = model();
    for (size_t si = 0; si < r.sites.size(); ++si) {
        const auto& s = r.sites[si];
        if (s.pos >= 0) continue;  // endpoints only
        const auto& comp = r.comps[s.comp];
        if (comp.closed || comp.arc.size() == 0) continue;
        bool at_start = s.pos == -1;
        // the chord at this endpoint and its crossing site
        int c_site = -1;
        Region reg{};
        for (const auto& ch : r.chords) {
            if (ch.comp != s.comp) continue;
            if (ch.a == int(si)) { c_site = ch.b; reg = ch.region; break; }
            if (ch.b == int(si)) { c_site = ch.a; reg = ch.region; break; }
        }
        if (c_site < 0 || r.sites[c_site].pos < 0) continue;  // chord to the other endpoint
        Edge seg = s.edge;
        Edge cedge = r.sites[c_site].edge;
        const auto& cyc = region_cycle(reg);
        int n = int(cyc.size());
        for (int k = 0; k < n; ++k) {
            if (cyc[k].first != seg) continue;
            for (int dir : {+1, -1}) {
                int k2 = (k + dir + n) % n;
                if (cyc[k2].first != cedge) continue;
                // corner between occurrence k and k2; endpoint must be the
                // extreme site on seg toward the corner, the crossing the
                // extreme site on cedge from the corner
                const auto& seg_sites = r.edge_order[int(seg)];
                const auto& arc_sites = r.edge_order[int(cedge)];
                bool fwd_seg = cyc[k].second, fwd_arc = cyc[k2].second;
                // traversal order within the region cycle
                auto extreme = [&](const std::vector<int>& lst, bool fwd, bool want_last) {
                    return want_last ? (fwd ? lst.back() : lst.front())
                                     : (fwd ? lst.front() : lst.back());
                };
                bool seg_last = dir == +1;   // corner at the end of seg's traversal
                if (extreme(seg_sites, fwd_seg, seg_last) != int(si)) continue;
                if (extreme(arc_sites, fwd_arc, !seg_last) != c_site) continue;
                // the junction at the corner: shared endpoint of the two edges
                int j = -1;
                auto [s0, s1] = m.edge_ends[int(seg)];
                auto [a0, a1] = m.edge_ends[int(cedge)];
                for (int cand : {s0, s1})
                    if (cand == a0 || cand == a1) {
                        // must be the corner between these occurrences: the
                        // junction reached at the end of seg's traversal
                        int corner = seg_last ? (fwd_seg ? s1 : s0) : (fwd_seg ? s0 : s1);
                        if (cand == corner) j = cand;
                    }
                if (j < 0) continue;
                Edge to = m.junctions[j].t_edge == seg ? m.junctions[j].side
                                                       : m.junctions[j].t_edge;
                out.push_back({s.comp, at_start, to});
            }
        }
    }
    return out;
}

namespace {

// remove adjacent same-arc crossing pairs, lowest label then leftmost first
bool bigon_step(CurveWord& w) {
    size_t n = w.size();
    if (n < 2) return false;
    int best = -1, best_label = 5;
    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        if (w.crossings[i] == w.crossings[j] && w.crossings[i] < best_label) {
            best = int(i);
            best_label = w.crossings[i];
        }
    }
    if (best < 0) return false;
    size_t i = size_t(best), j = (i + 1) % n;
    if (n == 2) { w.crossings.clear(); w.regions.clear(); return true; }
    // erase the (crossing, region) entries i and j; the region kept before
    // entry i equals the one dropped after entry j, so alignment survives
    CurveWord out;
    for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        out.crossings.push_back(w.crossings[k]);
        out.regions.push_back(w.regions[k]);
    }
    w = out;
    return true;
}

bool bigon_step(ArcWord& w) {
    size_t n = w.size();
    if (n < 2) return false;
    int best = -1, best_label = 5;
    for (size_t i = 0; i + 1 < n; ++i) {
        if (w.crossings[i] == w.crossings[i + 1] && w.crossings[i] < best_label) {
            best = int(i);
            best_label = w.crossings[i];
        }
    }
    if (best < 0) return false;
    size_t i = size_t(best);
    ArcWord out;
    out.end1 = w.end1;
    out.end2 = w.end2;
    std::vector<size_t> keep;
    for (size_t k = 0; k < n; ++k)
        if (k != i && k != i + 1) keep.push_back(k);
    for (size_t k : keep) out.crossings.push_back(w.crossings[k]);
    // region slot between kept crossings p < q: r_p when adjacent, else the
    // merged slot r_{i-1} (equal to r_{i+1}) spanning the removed pair
    for (size_t t = 0; t + 1 < keep.size(); ++t) {
        size_t p = keep[t], q = keep[t + 1];
        out.regions.push_back(q == p + 1 ? w.regions[p] : w.regions[i - 1]);
    }
    out.check_valid();
    w = out;
    return true;
}

bool slide_step(ArcWord& w) {
    // a word counts as minimal when some embedding admits no slide; only
    // words whose every embedding has one get reduced further
    Realization skel = system_skeleton({SystemComponent::open_arc(w)});
    bool slide_free = for_each_realization(skel, {}, [&](const Realization& r) {
        return available_slides(r).empty();
    });
    if (slide_free) return false;
    auto real = realize_system({SystemComponent::open_arc(w)});
    if (!real) return false;
    auto moves = available_slides(*real);
    if (moves.empty()) return false;
    // deterministic: prefer the start endpoint
    std::sort(moves.begin(), moves.end(), [](const SlideMove& a, const SlideMove& b) {
        if (a.at_start != b.at_start) return a.at_start > b.at_start;
        return int(a.to_segment) < int(b.to_segment);
    });
    const auto& mv = moves.front();
    ArcWord out;
    if (mv.at_start) {
        out.end1 = mv.to_segment;
        out.end2 = w.end2;
        out.crossings.assign(w.crossings.begin() + 1, w.crossings.end());
        if (!w.regions.empty())
            out.regions.assign(w.regions.begin() + 1, w.regions.end());
    } else {
        out.end1 = w.end1;
        out.end2 = mv.to_segment;
        out.crossings.assign(w.crossings.begin(), w.crossings.end() - 1);
        if (!w.regions.empty())
            out.regions.assign(w.regions.begin(), w.regions.end() - 1);
    }
    out.check_valid();
    w = out;
    return true;
}

}  // namespace

CurveWord minimize(const CurveWord& w) {
    w.check_valid();
    CurveWord cur = w;
    while (bigon_step(cur)) {}
    return cur;
}

ArcWord minimize(const ArcWord& w) {
    w.check_valid();
    ArcWord cur = w;
    for (;;) {
        if (bigon_step(cur)) continue;
        if (slide_step(cur)) continue;
        break;
    }
    return cur;
}

bool is_minimal(const CurveWord& w) {
    if (w.empty()) return false;
    size_t n = w.size();
    for (size_t i = 0; i < n; ++i)
        if (w.crossings[i] == w.crossings[(i + 1) % n]) return false;
    return is_realizable(w);
}

bool is_minimal(const ArcWord& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w.crossings[i] == w.crossings[i + 1]) return false;
    Realization skel = system_skeleton({SystemComponent::open_arc(w)});
    bool found = for_each_realization(skel, {}, [&](const Realization& r) {
        return available_slides(r).empty();  // stop on a slide-free embedding
    });
    return found;
}

bool is_essential(const CurveWord& w) { return !minimize(w).empty(); }

bool is_essential(const ArcWord& w) {
    ArcWord m = minimize(w);
    return m.size() > 0 || m.end1 != m.end2;
}

CurveType scc_type(const CurveWord& w) {
    if (w.empty()) throw CurveError(CurveErrorKind::EmptyWord, "inessential curve");
    int r1 = 0, r2 = 0;
    for (Region r : w.regions) {
        if (r == Region::H1) ++r1;
        if (r == Region::H2) ++r2;
    }
    CurveType t{r1, r2};
    const auto& ok = admissible_curve_types();
    if (std::find(ok.begin(), ok.end(), t) == ok.end())
        throw CurveError(CurveErrorKind::TypeNotRealizable,
                         "type " + t.str() + " is not realizable in minimal position");
    return t;
}

std::pair<int, int> handle_passes(const ArcWord& w) {
    int r1 = 0, r2 = 0;
    for (Region r : w.regions) {
        if (r == Region::H1) ++r1;
        if (r == Region::H2) ++r2;
    }
    // partial passes at side endpoints
    for (Edge e : {w.end1, w.end2}) {
        Region r = segment_region(e);
        if (w.size() == 0) continue;  // single-region arc handled by caller
        if (r == Region::H1) ++r1;
        if (r == Region::H2) ++r2;
    }
    return {r1, r2};
}

ArcType classify_arc(const ArcWord& w) {
    if (!is_minimal(w))
        throw CurveError(CurveErrorKind::Unclassifiable, "word not in minimal position");
    BdComp b1 = model().segment_component(w.end1);
    BdComp b2 = model().segment_component(w.end2);
    if (w.size() == 0) {
        if (w.end1 == w.end2)
            throw CurveError(CurveErrorKind::Inessential, "boundary-parallel arc");
        Region r = segment_region(w.end1);
        if (b1 != b2) {
            if (r == Region::H2) return bracket_type(2, 3);  // S2A - S2B
            // segment in D between T2 and one of T1, T3, T4
            Edge t = w.end1 == Edge::T2 ? w.end2 : w.end1;
            if (t == Edge::T1) return bracket_type(1, 2);
            if (t == Edge::T3 || t == Edge::T4) return bracket_type(2, 3);
            throw CurveError(CurveErrorKind::Unclassifiable, "unexpected segment pair");
        }
        if (r == Region::H1) return bracket_type(1, 3);  // S1A - S1B
        if (r == Region::D) {
            Edge lo = Edge(std::min(int(w.end1), int(w.end2)));
            Edge hi = Edge(std::max(int(w.end1), int(w.end2)));
            if (lo == Edge::T1 && (hi == Edge::T3 || hi == Edge::T4)) return bracket_type(1, 3);
            if (lo == Edge::T3 && hi == Edge::T4) return bracket_type(3, 4);
        }
        throw CurveError(CurveErrorKind::Unclassifiable, "unexpected zero-crossing arc");
    }
    auto [r1, r2] = handle_passes(w);
    if (b1 != b2)
        throw CurveError(CurveErrorKind::Unclassifiable,
                         "arc joining both boundary circles is not in minimal position");
    if (b1 == BdComp::C2) {
        if (r1 == 1 && r2 == 0) return brace_type(1, 0);
        if (r1 == 2 && r2 == 0) return brace_type(2, 0);
        if (r1 == 2 && r2 == 1) return brace_type(2, 1);
        throw CurveError(CurveErrorKind::Unclassifiable,
                         "arc with both endpoints in C2 of handle pass counts (" +
                             std::to_string(r1) + "," + std::to_string(r2) + ")");
    }
    if (r1 == 0 && r2 == 1) return brace_type(0, 1);
    throw CurveError(CurveErrorKind::Unclassifiable,
                     "arc with both endpoints in C1 of handle pass counts (" +
                         std::to_string(r1) + "," + std::to_string(r2) + ")");
}

namespace {

void gen_closed(int max_crossings, bool skip_bigon_pairs, std::set<CurveWord>& out) {
    // regions alternate between D and a handle, so words have even length
    std::vector<int> cs;
    std::vector<Region> rs;
    std::function<void(int)> rec = [&](int n) {
        if (int(cs.size()) >= 2) {
            // try to close up
            bool ok = true;
            size_t last = cs.size() - 1;
            if (skip_bigon_pairs && cs[last] == cs[0]) ok = false;
            Region rlast = rs[last];
            if (ok && !(rlast == Region::D || rlast == handle_of_arc(cs[0]))) ok = false;
            if (ok && rs[0] == rlast) ok = false;  // crossing 0 must separate
            if (ok) {
                CurveWord w;
                w.crossings = cs;
                w.regions = rs;
                try {
                    w.check_valid();
                    out.insert(w.canonical());
                } catch (const WordError&) {}
            }
        }
        if (int(cs.size()) >= n) return;
        int prev = cs.empty() ? 0 : cs.back();
        Region prev_r = rs.empty() ? Region::D : rs.back();
        for (int c = 1; c <= 4; ++c) {
            if (!cs.empty()) {
                if (skip_bigon_pairs && c == prev) continue;
                if (!(prev_r == Region::D || prev_r == handle_of_arc(c))) continue;
            }
            for (Region r : {Region::D, Region::H1, Region::H2}) {
                if (!(r == Region::D || r == handle_of_arc(c))) continue;
                if (!cs.empty() && r == prev_r) continue;
                cs.push_back(c);
                rs.push_back(r);
                rec(n);
                cs.pop_back();
                rs.pop_back();
            }
        }
    };
    rec(max_crossings);
}

const std::vector<Edge>& boundary_segments() {
    static const std::vector<Edge> segs = {Edge::T1, Edge::T2, Edge::T3, Edge::T4,
                                           Edge::S1A, Edge::S1B, Edge::S2A, Edge::S2B};
    return segs;
}

void gen_arcs(int max_crossings, bool skip_bigon_pairs, std::set<ArcWord>& out) {
    for (Edge e1 : boundary_segments()) {
        // zero-crossing arcs: both endpoints on segments of one region
        for (Edge e2 : boundary_segments()) {
            if (segment_region(e1) != segment_region(e2)) continue;
            ArcWord w;
            w.end1 = e1;
            w.end2 = e2;
            out.insert(w.canonical());
        }
        std::vector<int> cs;
        std::vector<Region> rs;  // between crossings; size cs.size()-1
        // region entering the next crossing
        auto incoming = [&]() { return cs.empty() ? segment_region(e1)
                                                  : (rs.empty() ? segment_region(e1) : rs.back()); };
        std::function<void()> rec = [&]() {
            if (!cs.empty()) {
                Region before_last = cs.size() == 1 ? segment_region(e1) : rs.back();
                for (Edge e2 : boundary_segments()) {
                    Region r2 = segment_region(e2);
                    if (r2 == before_last) continue;                       // must separate
                    if (!(r2 == Region::D || r2 == handle_of_arc(cs.back()))) continue;
                    ArcWord w;
                    w.end1 = e1;
                    w.end2 = e2;
                    w.crossings = cs;
                    w.regions = rs;
                    out.insert(w.canonical());
                }
            }
            if (int(cs.size()) >= max_crossings) return;
            if (cs.empty()) {
                Region r0 = segment_region(e1);
                for (int c = 1; c <= 4; ++c) {
                    if (!(r0 == Region::D || r0 == handle_of_arc(c))) continue;
                    cs.push_back(c);
                    rec();
                    cs.pop_back();
                }
                return;
            }
            Region before = cs.size() == 1 ? segment_region(e1) : rs.back();
            for (int c = 1; c <= 4; ++c) {
                if (skip_bigon_pairs && c == cs.back()) continue;
                for (Region r : {Region::D, Region::H1, Region::H2}) {
                    // r sits between cs.back() and c: borders both, and
                    // separates at cs.back()
                    if (!(r == Region::D || r == handle_of_arc(cs.back()))) continue;
                    if (!(r == Region::D || r == handle_of_arc(c))) continue;
                    if (r == before) continue;
                    rs.push_back(r);
                    cs.push_back(c);
                    rec();
                    cs.pop_back();
                    rs.pop_back();
                }
            }
        };
        (void)incoming;
        rec();
    }
}

}  // namespace

std::vector<CurveWord> enumerate_wellformed_closed(int max_crossings, bool skip_bigon_pairs) {
    std::set<CurveWord> out;
    gen_closed(max_crossings, skip_bigon_pairs, out);
    return {out.begin(), out.end()};
}

std::vector<ArcWord> enumerate_wellformed_arcs(int max_crossings, bool skip_bigon_pairs) {
    std::set<ArcWord> out;
    gen_arcs(max_crossings, skip_bigon_pairs, out);
    return {out.begin(), out.end()};
}

std::vector<CurveWord> enumerate_minimal_closed(int max_crossings) {
    std::vector<CurveWord> out;
    for (const auto& w : enumerate_wellformed_closed(max_crossings, true))
        if (!w.empty() && is_minimal(w)) out.push_back(w);
    return out;
}

std::vector<ArcWord> enumerate_minimal_arcs(int max_crossings) {
    std::vector<ArcWord> out;
    for (const auto& w : enumerate_wellformed_arcs(max_crossings, true))
        if (is_minimal(w)) out.push_back(w);
    return out;
}

}  // namespace pmb
