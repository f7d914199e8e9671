#include <stdexcept>

#include "pmb/surface.hpp"

namespace pmb {

ChainComplex base_chain_complex(const SurfaceModel& m) {
    ChainComplex cc;
    cc.d1 = imat(8, 12);
    for (int e = 0; e < 12; ++e) {
        auto [s, t] = m.edge_ends[e];
        cc.d1[t][e] += 1;
        cc.d1[s][e] -= 1;
    }
    cc.d2 = imat(12, 3);
    Region regions[3] = {Region::D, Region::H1, Region::H2};
    for (int f = 0; f < 3; ++f) {
        for (auto [e, fwd] : m.region_cycle(regions[f]))
            cc.d2[int(e)][f] += fwd ? 1 : -1;
    }
    // d1 * d2 must vanish
    IMat z = imat_mul(cc.d1, cc.d2);
    for (auto& row : z)
        for (i64 v : row)
            if (v != 0) throw std::logic_error("chain complex: d1*d2 != 0");
    // relative complex: drop T and side edges (boundary), keep A rows
    cc.d2_rel = imat(4, 3);
    for (int a = 0; a < 4; ++a)
        for (int f = 0; f < 3; ++f) cc.d2_rel[a][f] = cc.d2[a][f];
    return cc;
}

HomologyPresentation homology(const SurfaceModel& m, bool relative) {
    ChainComplex cc = base_chain_complex(m);
    HomologyPresentation h;
    h.relative = relative;
    if (!relative) {
        h.abs = homology_of(cc.d1, cc.d2);
        h.group = h.abs.group;
    } else {
        // all vertices lie on the boundary, so relative 1-chains have zero
        // boundary automatically; the group is Z^4 modulo the face images
        IMat rel = imat(3, 4);
        for (int f = 0; f < 3; ++f)
            for (int a = 0; a < 4; ++a) rel[f][a] = cc.d2_rel[a][f];
        h.rel = quotient(4, rel);
        h.group = h.rel.group;
    }
    return h;
}

}  // namespace pmb
