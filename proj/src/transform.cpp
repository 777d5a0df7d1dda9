#include "polysurf/transform.hpp"

#include "polysurf/error.hpp"
#include "polysurf/predicates.hpp"

namespace polysurf {

Rat Mat4::det() const {
    // Expansion by 2x2 complements.
    auto d2 = [&](int r0, int r1, int c0, int c1) -> Rat {
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    Rat det = 0;
    int signrow = 1;
    for (int r = 0; r < 4; ++r) {
        int rows[3], n = 0;
        for (int i = 0; i < 4; ++i)
            if (i != r) rows[n++] = i;
        Rat minor = m[rows[0]][1] * d2(rows[1], rows[2], 2, 3) -
                    m[rows[1]][1] * d2(rows[0], rows[2], 2, 3) +
                    m[rows[2]][1] * d2(rows[0], rows[1], 2, 3);
        det += Rat(signrow) * m[r][0] * minor;
        signrow = -signrow;
    }
    return det;
}

std::optional<Polygon> cut_polygon_by_halfspace(const Polygon& poly, const Plane& h, int keep) {
    const auto& corners = poly.corners();
    const std::size_t k = corners.size();
    std::vector<int> side(k);
    bool any_strict = false;
    for (std::size_t i = 0; i < k; ++i) {
        side[i] = keep * h.side(corners[i]);
        if (side[i] > 0) any_strict = true;
    }
    if (!any_strict) return std::nullopt;  // at most a segment on h

    std::vector<Point3> out;
    for (std::size_t i = 0; i < k; ++i) {
        const Point3 &a = corners[i], &b = corners[(i + 1) % k];
        int sa = side[i], sb = side[(i + 1) % k];
        if (sa >= 0) out.push_back(a);
        if ((sa > 0 && sb < 0) || (sa < 0 && sb > 0)) {
            Rat fa = h.eval(a), fb = h.eval(b);
            Rat s = fa / (fa - fb);
            out.push_back(a + (b - a) * s);
        }
    }
    // Drop consecutive duplicates introduced by corners exactly on h.
    std::vector<Point3> dedup;
    for (const Point3& p : out)
        if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
    if (dedup.size() >= 2 && dedup.front() == dedup.back()) dedup.pop_back();
    if (dedup.size() < 3) return std::nullopt;
    bool flat = true;
    for (std::size_t i = 2; i < dedup.size() && flat; ++i)
        if (!collinear3(dedup[0], dedup[1], dedup[i])) flat = false;
    if (flat) return std::nullopt;
    return Polygon(poly.id(), std::move(dedup));
}

Polygon apply_projective(const Mat4& t, const Polygon& poly) {
    if (sign(t.det()) == 0) fail(ErrorCode::SingularTransform, "apply_projective: singular matrix");
    std::vector<Point3> out;
    out.reserve(poly.size());
    for (const Point3& p : poly.corners()) {
        auto h = t.apply_homogeneous(p);
        if (sign(h[3]) == 0)
            fail(ErrorCode::MapsToInfinity,
                 "apply_projective: corner (" + rat_str(p.x) + "," + rat_str(p.y) + "," +
                     rat_str(p.z) + ") maps to infinity");
        out.push_back({h[0] / h[3], h[1] / h[3], h[2] / h[3]});
    }
    return Polygon(poly.id(), std::move(out));
}

std::pair<Rat, Rat> circle_direction(const Rat& t) {
    Rat t2 = t * t;
    Rat den = 1 + t2;
    return {(1 - t2) / den, 2 * t / den};
}

}  // namespace polysurf
