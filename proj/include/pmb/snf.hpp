// Integer matrices and Smith normal form with unimodular transforms,
// plus finitely generated abelian group presentations derived from them.
#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "pmb/rat.hpp"

namespace pmb {

using IMat = std::vector<std::vector<i64>>;
using IVec = std::vector<i64>;

inline IMat imat(size_t rows, size_t cols) { return IMat(rows, IVec(cols, 0)); }

inline size_t nrows(const IMat& m) { return m.size(); }
inline size_t ncols(const IMat& m) { return m.empty() ? 0 : m[0].size(); }

IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_apply(const IMat& a, const IVec& v);   // a * v
IMat imat_identity(size_t n);

struct SmithResult {
    IMat d;      // diagonal form, d = u * a * v
    IMat u;      // unimodular row transform
    IMat v;      // unimodular column transform
    IMat vinv;   // inverse of v
    std::vector<i64> diag;  // nonzero diagonal entries d1 | d2 | ...
    size_t rank() const { return diag.size(); }
};

SmithResult smith(const IMat& a);

// Presentation of a f.g. abelian group as Z^free_rank + sum Z/torsion[i],
// with torsion entries > 1 and each dividing the next.
struct AbelianGroup {
    size_t free_rank = 0;
    std::vector<i64> torsion;
    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

// The quotient Z^n / rowspan(rel), with a coordinate map for elements.
struct QuotientGroup {
    size_t n = 0;
    AbelianGroup group;
    // internals for coords()
    IMat v;                 // column transform from smith(rel)
    std::vector<i64> diag;  // full diagonal including 1s, padded with 0s to n
    // Coordinates of v in the quotient: torsion coords (mod d_i for d_i > 1)
    // followed by free coords.  Equal vectors <=> equal classes.
    IVec coords(const IVec& x) const;
};

QuotientGroup quotient(size_t n, const IMat& relations);

// ker(d1) / im(d2) for integer matrices acting on column vectors,
// with coordinates for cycles.
struct HomologyGroup {
    AbelianGroup group;
    // internals
    IMat kernel_basis;      // columns span ker(d1) as a direct summand
    IMat kernel_coords;     // left inverse: kernel_coords * kernel_basis = I
    QuotientGroup quot;     // quotient of Z^k by image coordinates
    IVec coords(const IVec& cycle) const;  // cycle must lie in ker(d1)
    bool in_kernel(const IVec& chain) const;
};

HomologyGroup homology_of(const IMat& d1, const IMat& d2);

}  // namespace pmb
