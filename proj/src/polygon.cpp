#include "polysurf/polygon.hpp"

#include "polysurf/error.hpp"
#include "polysurf/predicates.hpp"
#include "polysurf/segment.hpp"

#include <algorithm>

namespace polysurf {

namespace {

int pick_drop_axis(const Plane& plane) {
    Int ax = abs(plane.a), ay = abs(plane.b), az = abs(plane.c);
    if (ax >= ay && ax >= az) return 0;
    return ay >= az ? 1 : 2;
}

Vec2 project_drop(const Point3& p, int drop) {
    switch (drop) {
        case 0: return {p.y, p.z};
        case 1: return {p.x, p.z};
        default: return {p.x, p.y};
    }
}

}  // namespace

Polygon::Polygon(std::string id, std::vector<Point3> corners)
    : id_(std::move(id)), corners_(std::move(corners)) {
    const std::size_t k = corners_.size();
    if (k < 3) fail(ErrorCode::Degenerate, "polygon " + id_ + ": fewer than 3 corners");
    for (std::size_t i = 0; i < k; ++i)
        if (corners_[i] == corners_[(i + 1) % k])
            fail(ErrorCode::Degenerate, "polygon " + id_ + ": repeated consecutive corner");
    plane_ = supporting_plane(corners_);
    drop_axis_ = pick_drop_axis(plane_);

    // Simplicity: adjacent sides meet exactly in the shared corner,
    // non-adjacent sides are disjoint.
    std::vector<Vec2> proj = projected_corners();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const Vec2 &a = proj[i], &b = proj[(i + 1) % k];
            const Vec2 &c = proj[j], &d = proj[(j + 1) % k];
            Seg2Hit hit = seg2_intersect(a, b, c, d);
            bool adj_fwd = (j == i + 1);
            bool adj_wrap = (i == 0 && j == k - 1);
            if (adj_fwd || adj_wrap) {
                const Vec2& shared = adj_fwd ? b : a;
                if (hit.kind != Seg2Hit::Kind::Point || hit.p != shared)
                    fail(ErrorCode::NotSimple, "polygon " + id_ + ": adjacent sides overlap");
            } else if (hit.kind != Seg2Hit::Kind::None) {
                fail(ErrorCode::NotSimple, "polygon " + id_ + ": self-intersecting boundary");
            }
        }
    }

    bbox_min_ = bbox_max_ = corners_[0];
    for (const Point3& p : corners_)
        for (int axis = 0; axis < 3; ++axis) {
            if (p[axis] < bbox_min_[axis]) bbox_min_[axis] = p[axis];
            if (p[axis] > bbox_max_[axis]) bbox_max_[axis] = p[axis];
        }
}

Vec2 Polygon::project(const Point3& p) const { return project_drop(p, drop_axis_); }

std::vector<Vec2> Polygon::projected_corners() const {
    std::vector<Vec2> out;
    out.reserve(corners_.size());
    for (const Point3& p : corners_) out.push_back(project(p));
    return out;
}

bool Polygon::has_corner(const Point3& p) const {
    return std::find(corners_.begin(), corners_.end(), p) != corners_.end();
}

bool Polygon::has_side(const Point3& a, const Point3& b) const {
    const std::size_t k = corners_.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Point3 &u = corners_[i], &v = corners_[(i + 1) % k];
        if ((u == a && v == b) || (u == b && v == a)) return true;
    }
    return false;
}

bool is_strictly_convex(const Polygon& poly) {
    std::vector<Vec2> proj = poly.projected_corners();
    const std::size_t k = proj.size();
    int turn = 0;
    for (std::size_t i = 0; i < k; ++i) {
        int s = orient2d(proj[i], proj[(i + 1) % k], proj[(i + 2) % k]);
        if (s == 0) return false;
        if (turn == 0) turn = s;
        else if (s != turn) return false;
    }
    return true;
}

Region point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly) {
    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i)
        if (on_segment2(p, poly[i], poly[(i + 1) % k])) return Region::Boundary;
    // Half-open crossing rule; exact, and p is off the boundary here.
    bool inside = false;
    for (std::size_t i = 0; i < k; ++i) {
        const Vec2 &a = poly[i], &b = poly[(i + 1) % k];
        if ((a.y > p.y) != (b.y > p.y)) {
            Rat xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside ? Region::Inside : Region::Outside;
}

std::vector<LinePiece> polygon_line_slice(const Polygon& poly, const Line3& line) {
    const auto& corners = poly.corners();
    const std::size_t k = corners.size();
    std::vector<LinePiece> events;
    for (std::size_t i = 0; i < k; ++i) {
        const Point3 &a = corners[i], &b = corners[(i + 1) % k];
        Vec3 u = b - a;
        Vec3 w = cross(u, line.dir);
        if (w.is_zero()) {
            if (line.contains(a)) {
                Rat t0 = line.param_of(a), t1 = line.param_of(b);
                if (t0 > t1) std::swap(t0, t1);
                events.push_back({t0, t1});
            }
            continue;
        }
        Vec3 rhs = cross(a - line.origin, line.dir);
        Rat s = -dot(rhs, w) / dot(w, w);
        if (s < 0 || s > 1) continue;
        Point3 p = a + u * s;
        if (!line.contains(p)) continue;  // side crosses the line's plane off the line
        Rat t = line.param_of(p);
        events.push_back({t, t});
    }
    if (events.empty()) return {};
    std::sort(events.begin(), events.end(),
              [](const LinePiece& x, const LinePiece& y) { return x.t0 < y.t0; });
    // Merge touching boundary events.
    std::vector<LinePiece> comps;
    for (const LinePiece& e : events) {
        if (!comps.empty() && e.t0 <= comps.back().t1) {
            if (e.t1 > comps.back().t1) comps.back().t1 = e.t1;
        } else {
            comps.push_back(e);
        }
    }
    // Fill gaps whose midpoints lie inside the polygon.
    std::vector<Vec2> proj = poly.projected_corners();
    std::vector<LinePiece> out;
    out.push_back(comps[0]);
    for (std::size_t i = 1; i < comps.size(); ++i) {
        Rat mid = (out.back().t1 + comps[i].t0) / 2;
        Region r = point_in_polygon(poly.project(line.at(mid)), proj);
        if (r == Region::Inside) {
            out.back().t1 = comps[i].t1;
        } else {
            out.push_back(comps[i]);
        }
    }
    return out;
}

}  // namespace polysurf
