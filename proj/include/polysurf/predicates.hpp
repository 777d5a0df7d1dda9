#pragma once

#include "polysurf/point.hpp"

namespace polysurf {

// Sign of det(q-p, r-p, s-p). Positive for a right-handed tetrahedron,
// zero iff the four points are coplanar.
int orient3d(const Point3& p, const Point3& q, const Point3& r, const Point3& s);

// Sign of cross2(b-a, c-a): +1 left turn, -1 right turn, 0 collinear.
int orient2d(const Vec2& a, const Vec2& b, const Vec2& c);

bool collinear3(const Point3& a, const Point3& b, const Point3& c);

// True iff p lies on the closed segment [a, b] (degenerate segments allowed).
bool on_segment3(const Point3& p, const Point3& a, const Point3& b);
bool on_segment2(const Vec2& p, const Vec2& a, const Vec2& b);

}  // namespace polysurf
