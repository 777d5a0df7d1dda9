#include "polysurf/predicates.hpp"

namespace polysurf {

int orient3d(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
    Vec3 u = q - p, v = r - p, w = s - p;
    Rat det = u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) +
              u.z * (v.x * w.y - v.y * w.x);
    return sign(det);
}

int orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
    return sign(cross2(b - a, c - a));
}

bool collinear3(const Point3& a, const Point3& b, const Point3& c) {
    return cross(b - a, c - a).is_zero();
}

bool on_segment3(const Point3& p, const Point3& a, const Point3& b) {
    if (!collinear3(p, a, b)) return false;
    return sign(dot(a - p, b - p)) <= 0;
}

bool on_segment2(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (sign(cross2(b - a, p - a)) != 0) return false;
    return sign(dot(a - p, b - p)) <= 0;
}

}  // namespace polysurf
