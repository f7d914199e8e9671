#include "pmb/homclass.hpp"

#include <sstream>

namespace pmb {

std::string HomClass::str() const {
    std::ostringstream os;
    os << (relative ? "rel[" : "abs[");
    for (size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << "]";
    return os.str();
}

namespace {

struct BoundaryWalk {
    // subdivided boundary walk of one region: parallel lists of sub-edges
    // and the points between them
    struct SubEdge { Edge e; int idx; int sign; };
    std::vector<SubEdge> subs;
    std::vector<int> point_after;  // site id reached after subs[k], or -1 for a junction
};

BoundaryWalk region_walk(const SurfaceModel& m, const Realization& r, Region reg) {
    BoundaryWalk w;
    for (auto [e, fwd] : m.region_cycle(reg)) {
        const auto& sites = r.edge_order[int(e)];
        int k = int(sites.size());
        if (fwd) {
            for (int t = 0; t <= k; ++t) {
                w.subs.push_back({e, t, +1});
                w.point_after.push_back(t < k ? sites[t] : -1);
            }
        } else {
            for (int t = k; t >= 0; --t) {
                w.subs.push_back({e, t, -1});
                w.point_after.push_back(t > 0 ? sites[t - 1] : -1);
            }
        }
    }
    return w;
}

}  // namespace

IVec skeleton_chain(const Realization& r) {
    const SurfaceModel& m = build_surface();
    // coefficients on sub-edges: map (edge, idx) -> coeff; idx ranges over
    // 0..(#sites on edge)
    std::map<std::pair<int, int>, i64> chain;
    std::map<Region, BoundaryWalk> walks;
    for (Region reg : {Region::D, Region::H1, Region::H2})
        walks.emplace(reg, region_walk(m, r, reg));

    for (const auto& ch : r.chords) {
        const auto& w = walks.at(ch.region);
        size_t n = w.subs.size();
        // find positions of the chord endpoints among the walk points
        int pa = -1, pb = -1;
        for (size_t k = 0; k < n; ++k) {
            if (w.point_after[k] == ch.a) pa = int(k);
            if (w.point_after[k] == ch.b) pb = int(k);
        }
        if (pa < 0 || pb < 0) throw std::logic_error("chord site not on region boundary");
        // path forward along the walk from a to b
        for (size_t k = (pa + 1) % n; ; k = (k + 1) % n) {
            chain[{int(w.subs[k].e), w.subs[k].idx}] += w.subs[k].sign;
            if (int(k) == pb) break;
        }
    }

    // collapse: the last sub-edge of each base edge carries the class
    IVec out(12, 0);
    for (const auto& [key, coeff] : chain) {
        auto [e, idx] = key;
        int k = int(r.edge_order[e].size());
        if (idx == k) out[e] = narrow128(i128(out[e]) + coeff);
    }
    return out;
}

HomClass relative_class(const CurveWord& w) {
    w.check_valid();
    HomClass out;
    out.relative = false;
    static const HomologyPresentation h = homology(build_surface(), false);
    if (w.empty()) {
        out.coords = h.abs.coords(IVec(12, 0));
        return out;
    }
    auto real = realize_system({SystemComponent::closed_curve(w)});
    if (!real)
        throw CurveError(CurveErrorKind::Unrealizable, "closed word is not embeddable");
    out.coords = h.abs.coords(skeleton_chain(*real));
    return out;
}

HomClass relative_class(const ArcWord& w) {
    w.check_valid();
    auto real = realize_system({SystemComponent::open_arc(w)});
    if (!real) throw CurveError(CurveErrorKind::Unrealizable, "arc word is not embeddable");
    IVec full = skeleton_chain(*real);
    IVec acoords(full.begin(), full.begin() + 4);
    static const HomologyPresentation h = homology(build_surface(), true);
    HomClass out;
    out.relative = true;
    out.coords = h.rel.coords(acoords);
    return out;
}

}  // namespace pmb
