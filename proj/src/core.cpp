#include <algorithm>
#include <cassert>

#include "pmb/snf.hpp"
#include "pmb/vec.hpp"

namespace pmb {

// ---------------------------------------------------------------- geometry

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(c, a, b)) return true;
    if (o2 == 0 && on_segment(d, a, b)) return true;
    if (o3 == 0 && on_segment(a, c, d)) return true;
    if (o4 == 0 && on_segment(b, c, d)) return true;
    return false;
}

std::optional<Vec2> line_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    Vec2 r = b - a, s = d - c;
    Rat denom = cross(r, s);
    if (denom.sign() == 0) return std::nullopt;
    Rat t = cross(c - a, s) / denom;
    return a + t * r;
}

bool Polygon::contains(const Vec2& p) const {
    // boundary counts as inside
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        if (on_segment(p, pts[i], pts[(i + 1) % n])) return true;
    return strictly_contains(p);
}

bool Polygon::strictly_contains(const Vec2& p) const {
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        if (on_segment(p, pts[i], pts[(i + 1) % n])) return false;
    // ray cast toward +x with exact handling of vertex hits: count crossings
    // of the horizontal line y = p.y, edges half-open in y
    int crossings = 0;
    for (size_t i = 0; i < n; ++i) {
        Vec2 u = pts[i], v = pts[(i + 1) % n];
        if (u.y == v.y) continue;
        bool up = u.y < v.y;
        Rat ylo = up ? u.y : v.y, yhi = up ? v.y : u.y;
        if (!(p.y >= ylo && p.y < yhi)) continue;
        // x coordinate of the edge at height p.y
        Rat t = (p.y - u.y) / (v.y - u.y);
        Rat xhit = u.x + t * (v.x - u.x);
        if (xhit > p.x) ++crossings;
    }
    return (crossings % 2) == 1;
}

bool tri_interiors_meet(const Tri& s, const Tri& t) {
    if (s.area2().sign() == 0 || t.area2().sign() == 0) return false;
    const Vec2 sv[3] = {s.a, s.b, s.c};
    const Vec2 tv[3] = {t.a, t.b, t.c};
    // separating axis over the 6 edges; touching along an edge or vertex is
    // not an interior intersection
    auto axes_separate = [&](const Vec2 p[3], const Vec2 q[3]) {
        for (int i = 0; i < 3; ++i) {
            Vec2 e = p[(i + 1) % 3] - p[i];
            Vec2 nrm{-e.y, e.x};
            Rat pmin, pmax, qmin, qmax;
            for (int j = 0; j < 3; ++j) {
                Rat d = dot(nrm, p[j]);
                if (j == 0) { pmin = pmax = d; } else { pmin = rat_min(pmin, d); pmax = rat_max(pmax, d); }
            }
            for (int j = 0; j < 3; ++j) {
                Rat d = dot(nrm, q[j]);
                if (j == 0) { qmin = qmax = d; } else { qmin = rat_min(qmin, d); qmax = rat_max(qmax, d); }
            }
            if (qmin >= pmax || pmin >= qmax) return true;  // touching allowed
        }
        return false;
    };
    return !axes_separate(sv, tv) && !axes_separate(tv, sv);
}

std::vector<Tri> triangulate_polygon(const Polygon& poly) {
    std::vector<Vec2> v = poly.pts;
    if (poly.area2().sign() < 0) std::reverse(v.begin(), v.end());
    std::vector<Tri> out;
    while (v.size() > 3) {
        size_t n = v.size();
        bool clipped = false;
        for (size_t i = 0; i < n; ++i) {
            const Vec2 &prev = v[(i + n - 1) % n], &cur = v[i], &next = v[(i + 1) % n];
            if (orient(prev, cur, next) <= 0) continue;
            Tri ear{prev, cur, next};
            bool ok = true;
            for (size_t j = 0; j < n && ok; ++j) {
                if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
                if (ear.contains(v[j])) ok = false;
            }
            if (!ok) continue;
            out.push_back(ear);
            v.erase(v.begin() + i);
            clipped = true;
            break;
        }
        if (!clipped) throw std::runtime_error("ear clipping failed (degenerate polygon)");
    }
    if (v.size() == 3) out.push_back(Tri{v[0], v[1], v[2]});
    return out;
}

// ------------------------------------------------------------ integer SNF

IMat imat_identity(size_t n) {
    IMat m = imat(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    size_t n = nrows(a), k = ncols(a), m = ncols(b);
    if (k != nrows(b)) throw std::invalid_argument("imat_mul shape");
    IMat c = imat(n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            i128 s = 0;
            for (size_t t = 0; t < k; ++t) s += i128(a[i][t]) * b[t][j];
            c[i][j] = narrow128(s);
        }
    return c;
}

IVec imat_apply(const IMat& a, const IVec& v) {
    size_t n = nrows(a), k = ncols(a);
    if (k != v.size()) throw std::invalid_argument("imat_apply shape");
    IVec r(n, 0);
    for (size_t i = 0; i < n; ++i) {
        i128 s = 0;
        for (size_t t = 0; t < k; ++t) s += i128(a[i][t]) * v[t];
        r[i] = narrow128(s);
    }
    return r;
}

namespace {

void row_swap(IMat& m, size_t i, size_t j) { std::swap(m[i], m[j]); }
void col_swap(IMat& m, size_t i, size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}
// row i += c * row j
void row_add(IMat& m, size_t i, size_t j, i64 c) {
    for (size_t t = 0; t < ncols(m); ++t)
        m[i][t] = narrow128(i128(m[i][t]) + i128(c) * m[j][t]);
}
// col i += c * col j
void col_add(IMat& m, size_t i, size_t j, i64 c) {
    for (auto& row : m) row[i] = narrow128(i128(row[i]) + i128(c) * row[j]);
}
void row_neg(IMat& m, size_t i) { for (auto& x : m[i]) x = -x; }
void col_neg(IMat& m, size_t i) { for (auto& row : m) row[i] = -row[i]; }

}  // namespace

SmithResult smith(const IMat& a) {
    size_t n = nrows(a), m = ncols(a);
    SmithResult r;
    r.d = a;
    r.u = imat_identity(n);
    r.v = imat_identity(m);
    r.vinv = imat_identity(m);
    IMat& d = r.d;

    size_t t = 0;
    while (t < n && t < m) {
        // find pivot: smallest nonzero |entry| in the lower-right block
        size_t pi = t, pj = t;
        i64 best = 0;
        for (size_t i = t; i < n; ++i)
            for (size_t j = t; j < m; ++j) {
                i64 v = std::abs(d[i][j]);
                if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (best == 0) break;
        if (pi != t) { row_swap(d, t, pi); row_swap(r.u, t, pi); }
        if (pj != t) {
            col_swap(d, t, pj); col_swap(r.v, t, pj);
            row_swap(r.vinv, t, pj);
        }
        bool clean = true;
        for (size_t i = t + 1; i < n; ++i) {
            if (d[i][t] == 0) continue;
            i64 q = d[i][t] / d[t][t];
            row_add(d, i, t, -q); row_add(r.u, i, t, -q);
            if (d[i][t] != 0) clean = false;
        }
        for (size_t j = t + 1; j < m; ++j) {
            if (d[t][j] == 0) continue;
            i64 q = d[t][j] / d[t][t];
            col_add(d, j, t, -q); col_add(r.v, j, t, -q);
            row_add(r.vinv, t, j, q);  // inverse op on vinv rows
            if (d[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; re-pivot
        // divisibility: make d[t][t] divide everything below-right
        bool redo = false;
        for (size_t i = t + 1; i < n && !redo; ++i)
            for (size_t j = t + 1; j < m && !redo; ++j)
                if (d[i][j] % d[t][t] != 0) {
                    row_add(d, t, i, 1); row_add(r.u, t, i, 1);
                    redo = true;
                }
        if (redo) continue;
        if (d[t][t] < 0) {
            row_neg(d, t); row_neg(r.u, t);
        }
        ++t;
    }
    for (size_t i = 0; i < std::min(n, m); ++i)
        if (d[i][i] != 0) r.diag.push_back(d[i][i]);
    return r;
}

QuotientGroup quotient(size_t n, const IMat& relations) {
    QuotientGroup q;
    q.n = n;
    IMat rel = relations;
    if (rel.empty()) rel = imat(1, n);  // zero relation row keeps shapes sane
    if (ncols(rel) != n) throw std::invalid_argument("quotient shape");
    SmithResult s = smith(rel);
    q.v = s.v;
    q.diag.assign(n, 0);
    for (size_t i = 0; i < s.diag.size(); ++i) q.diag[i] = s.diag[i];
    q.group.free_rank = n - s.rank();
    for (i64 dv : s.diag)
        if (dv > 1) q.group.torsion.push_back(dv);
    return q;
}

IVec QuotientGroup::coords(const IVec& x) const {
    if (x.size() != n) throw std::invalid_argument("coords shape");
    // w = x * V (row vector times V); rowspan(rel * V) = diag lattice
    IVec w(n, 0);
    for (size_t j = 0; j < n; ++j) {
        i128 s = 0;
        for (size_t i = 0; i < n; ++i) s += i128(x[i]) * v[i][j];
        w[j] = narrow128(s);
    }
    IVec out;
    for (size_t j = 0; j < n; ++j) {
        if (diag[j] > 1) {
            i64 d = diag[j];
            i64 r = w[j] % d;
            if (r < 0) r += d;
            out.push_back(r);
        } else if (diag[j] == 0) {
            out.push_back(w[j]);  // free coordinate
        }
        // diag[j] == 1: coordinate dies
    }
    return out;
}

HomologyGroup homology_of(const IMat& d1, const IMat& d2) {
    size_t n1 = ncols(d1);
    if (nrows(d2) != n1) throw std::invalid_argument("homology_of shapes");
    SmithResult s1 = smith(d1);
    size_t r = s1.rank();
    size_t k = n1 - r;
    HomologyGroup h;
    // kernel basis: columns r..n1-1 of V
    h.kernel_basis = imat(n1, k);
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < k; ++j) h.kernel_basis[i][j] = s1.v[i][r + j];
    // coordinates: rows r..n1-1 of Vinv
    h.kernel_coords = imat(k, n1);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n1; ++j) h.kernel_coords[i][j] = s1.vinv[r + i][j];
    // image of d2 expressed in kernel coordinates
    size_t n2 = ncols(d2);
    IMat rel = imat(n2, k);
    for (size_t c = 0; c < n2; ++c) {
        IVec col(n1);
        for (size_t i = 0; i < n1; ++i) col[i] = d2[i][c];
        IVec kc = imat_apply(h.kernel_coords, col);
        for (size_t j = 0; j < k; ++j) rel[c][j] = kc[j];
    }
    h.quot = quotient(k, rel);
    h.group = h.quot.group;
    return h;
}

bool HomologyGroup::in_kernel(const IVec& chain) const {
    // chain is in ker iff kernel_basis * (kernel_coords * chain) == chain
    IVec kc = imat_apply(kernel_coords, chain);
    IVec back = imat_apply(kernel_basis, kc);
    return back == chain;
}

IVec HomologyGroup::coords(const IVec& cycle) const {
    if (!in_kernel(cycle)) throw std::invalid_argument("chain is not a cycle");
    return quot.coords(imat_apply(kernel_coords, cycle));
}

}  // namespace pmb
