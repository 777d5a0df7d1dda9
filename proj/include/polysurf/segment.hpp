#pragma once

#include "polysurf/point.hpp"

namespace polysurf {

// Exact intersection of closed 2D segments [a,b] and [c,d].
struct Seg2Hit {
    enum class Kind { None, Point, Overlap };
    Kind kind = Kind::None;
    Vec2 p, q;           // Point: p; Overlap: [p, q]
    bool proper = false; // transversal crossing strictly interior to both
};

Seg2Hit seg2_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

}  // namespace polysurf
