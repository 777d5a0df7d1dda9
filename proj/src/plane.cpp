#include "polysurf/plane.hpp"

#include "polysurf/error.hpp"
#include "polysurf/predicates.hpp"

#include <sstream>

namespace polysurf {

namespace {

// Clears denominators and divides by the gcd; flips sign so the first
// nonzero of (a, b, c) is positive.
Plane canonicalize(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    Int lcm = 1;
    for (const Rat* r : {&a, &b, &c, &d}) {
        Int den = r->get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    Int ia = Int(Rat(a * lcm).get_num());
    Int ib = Int(Rat(b * lcm).get_num());
    Int ic = Int(Rat(c * lcm).get_num());
    Int id = Int(Rat(d * lcm).get_num());
    Int g = 0;
    for (const Int* z : {&ia, &ib, &ic, &id}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z->get_mpz_t());
    if (sign(g) != 0) {
        ia /= g;
        ib /= g;
        ic /= g;
        id /= g;
    }
    int lead = sign(ia) != 0 ? sign(ia) : (sign(ib) != 0 ? sign(ib) : sign(ic));
    if (lead < 0) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
        id = -id;
    }
    Plane p;
    p.a = ia;
    p.b = ib;
    p.c = ic;
    p.d = id;
    return p;
}

}  // namespace

Plane Plane::from_normal_point(const Vec3& n, const Point3& p) {
    if (n.is_zero()) fail(ErrorCode::Degenerate, "plane: zero normal");
    return canonicalize(n.x, n.y, n.z, -dot(n, p));
}

Plane Plane::from_points(const Point3& p, const Point3& q, const Point3& r) {
    Vec3 n = cross(q - p, r - p);
    if (n.is_zero()) fail(ErrorCode::Degenerate, "plane: collinear points");
    return from_normal_point(n, p);
}

bool Plane::parallel_to(const Plane& o) const {
    return cross(normal(), o.normal()).is_zero();
}

std::string Plane::str() const {
    std::ostringstream os;
    os << a.get_str() << "x + " << b.get_str() << "y + " << c.get_str() << "z + " << d.get_str()
       << " = 0";
    return os.str();
}

Plane supporting_plane(std::span<const Point3> corners) {
    if (corners.size() < 3) fail(ErrorCode::Degenerate, "supporting_plane: fewer than 3 points");
    const Point3& p0 = corners[0];
    std::size_t i1 = 1;
    while (i1 < corners.size() && corners[i1] == p0) ++i1;
    if (i1 == corners.size()) fail(ErrorCode::Degenerate, "supporting_plane: all points equal");
    std::size_t i2 = i1 + 1;
    while (i2 < corners.size() && collinear3(p0, corners[i1], corners[i2])) ++i2;
    if (i2 == corners.size()) fail(ErrorCode::Degenerate, "supporting_plane: all points collinear");
    Plane plane = Plane::from_points(p0, corners[i1], corners[i2]);
    for (const Point3& p : corners)
        if (!plane.contains(p)) fail(ErrorCode::NotCoplanar, "supporting_plane: corners not coplanar");
    return plane;
}

Line3 plane_intersection(const Plane& p, const Plane& q) {
    Vec3 dir = cross(p.normal(), q.normal());
    if (dir.is_zero()) fail(ErrorCode::Degenerate, "plane_intersection: parallel planes");
    // Solve for a point with the largest |dir| coordinate pinned to zero.
    Rat ax = rat_abs(dir.x), ay = rat_abs(dir.y), az = rat_abs(dir.z);
    int drop = (ax >= ay && ax >= az) ? 0 : (ay >= az ? 1 : 2);
    Rat pa(p.a), pb(p.b), pc(p.c), pd(p.d);
    Rat qa(q.a), qb(q.b), qc(q.c), qd(q.d);
    Point3 origin;
    if (drop == 0) {
        Rat det = pb * qc - pc * qb;
        origin = {Rat(0), (-pd * qc + pc * qd) / det, (-pb * qd + pd * qb) / det};
    } else if (drop == 1) {
        Rat det = pa * qc - pc * qa;
        origin = {(-pd * qc + pc * qd) / det, Rat(0), (-pa * qd + pd * qa) / det};
    } else {
        Rat det = pa * qb - pb * qa;
        origin = {(-pd * qb + pb * qd) / det, (-pa * qd + pd * qa) / det, Rat(0)};
    }
    return Line3{origin, dir};
}

}  // namespace polysurf
