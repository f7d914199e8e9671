// Homology classes of realized words.  The curve is pushed off the discs
// onto the 1-skeleton of the base complex (each chord is homotopic rel
// endpoints to a boundary path of its region), the resulting cellular chain
// is collapsed from the crossing-subdivided complex back to the base one,
// and coordinates are read off the homology presentation.
#pragma once

#include "pmb/realize.hpp"

namespace pmb {

struct HomClass {
    bool relative = false;
    IVec coords;
    friend bool operator==(const HomClass& a, const HomClass& b) {
        return a.relative == b.relative && a.coords == b.coords;
    }
    friend bool operator!=(const HomClass& a, const HomClass& b) { return !(a == b); }
    friend bool operator<(const HomClass& a, const HomClass& b) {
        if (a.relative != b.relative) return a.relative < b.relative;
        return a.coords < b.coords;
    }
    std::string str() const;
};

// Class of a closed word in H1(X); throws on unrealizable words.
HomClass relative_class(const CurveWord& w);
// Class of an arc word in H1(X, dX).
HomClass relative_class(const ArcWord& w);

// The chain in the base complex underlying the class computation (12 edge
// coefficients); exposed for tests.
IVec skeleton_chain(const Realization& r);

}  // namespace pmb
