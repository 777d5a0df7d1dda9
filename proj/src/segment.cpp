#include "polysurf/segment.hpp"

#include "polysurf/predicates.hpp"

#include <algorithm>

namespace polysurf {

Seg2Hit seg2_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    Seg2Hit hit;
    Vec2 u = b - a, v = d - c;
    Rat denom = cross2(u, v);
    if (sign(denom) != 0) {
        Rat s = cross2(c - a, v) / denom;
        if (s < 0 || s > 1) return hit;
        Vec2 p = a + u * s;
        if (!on_segment2(p, c, d)) return hit;
        hit.kind = Seg2Hit::Kind::Point;
        hit.p = p;
        hit.proper = (p != a && p != b && p != c && p != d);
        return hit;
    }
    // Parallel. Distinct lines: no intersection.
    if (orient2d(a, b, c) != 0) return hit;
    // Collinear: overlap interval via projection on u (or v if u degenerate).
    Vec2 axis = (u == Vec2{Rat(0), Rat(0)}) ? v : u;
    if (axis == Vec2{Rat(0), Rat(0)}) {
        if (a == c) {
            hit.kind = Seg2Hit::Kind::Point;
            hit.p = a;
        }
        return hit;
    }
    auto key = [&](const Vec2& p) { return dot(p - a, axis); };
    Rat a0 = key(a), a1 = key(b), c0 = key(c), c1 = key(d);
    if (a0 > a1) std::swap(a0, a1);
    if (c0 > c1) std::swap(c0, c1);
    Rat lo = rat_max(a0, c0), hi = rat_min(a1, c1);
    int cmp_ = cmp(lo, hi);
    if (cmp_ > 0) return hit;
    Rat n2 = dot(axis, axis);
    Vec2 plo = a + axis * (lo / n2), phi = a + axis * (hi / n2);
    if (cmp_ == 0) {
        hit.kind = Seg2Hit::Kind::Point;
        hit.p = plo;
    } else {
        hit.kind = Seg2Hit::Kind::Overlap;
        hit.p = plo;
        hit.q = phi;
    }
    return hit;
}

}  // namespace polysurf
