#pragma once

#include "polysurf/point.hpp"

#include <span>
#include <string>
#include <vector>

namespace polysurf {

// Oriented plane a*x + b*y + c*z + d = 0 stored in canonical form:
// integer coefficients, gcd 1, first nonzero of (a, b, c) positive.
// Canonical form makes equality of supporting planes a memberwise test.
struct Plane {
    Int a, b, c, d;

    Plane() : a(0), b(0), c(0), d(0) {}

    static Plane from_normal_point(const Vec3& n, const Point3& p);
    static Plane from_points(const Point3& p, const Point3& q, const Point3& r);

    Vec3 normal() const { return {Rat(a), Rat(b), Rat(c)}; }

    Rat eval(const Point3& p) const { return Rat(a) * p.x + Rat(b) * p.y + Rat(c) * p.z + Rat(d); }
    int side(const Point3& p) const { return sign(eval(p)); }
    bool contains(const Point3& p) const { return side(p) == 0; }

    bool operator==(const Plane& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Plane& o) const { return !(*this == o); }

    // Same normal direction up to scaling (i.e. equal or parallel planes).
    bool parallel_to(const Plane& o) const;

    std::string str() const;
};

// Canonical supporting plane through a coplanar corner list.
// Throws Degenerate if all points are collinear, NotCoplanar otherwise on failure.
Plane supporting_plane(std::span<const Point3> corners);

struct Line3 {
    Point3 origin;
    Vec3 dir;  // nonzero

    Rat param_of(const Point3& p) const { return dot(p - origin, dir) / dot(dir, dir); }
    Point3 at(const Rat& t) const { return origin + dir * t; }
    bool contains(const Point3& p) const { return cross(p - origin, dir).is_zero(); }
};

// Intersection line of two non-parallel planes.
Line3 plane_intersection(const Plane& p, const Plane& q);

}  // namespace polysurf
