#include "polysurf/contact.hpp"

#include "polysurf/predicates.hpp"
#include "polysurf/segment.hpp"

#include <algorithm>
#include <vector>

namespace polysurf {

namespace {

bool bbox_disjoint(const Polygon& p, const Polygon& q) {
    for (int axis = 0; axis < 3; ++axis) {
        if (p.bbox_max()[axis] < q.bbox_min()[axis]) return true;
        if (q.bbox_max()[axis] < p.bbox_min()[axis]) return true;
    }
    return false;
}

// All corners of `poly` strictly on one side of `plane`.
bool strictly_one_side(const Polygon& poly, const Plane& plane) {
    int first = 0;
    for (const Point3& c : poly.corners()) {
        int s = plane.side(c);
        if (s == 0) return false;
        if (first == 0) first = s;
        else if (s != first) return false;
    }
    return true;
}

Contact violation(std::string detail, std::optional<Point3> pt = std::nullopt,
                  std::optional<std::pair<Point3, Point3>> seg = std::nullopt) {
    Contact c;
    c.tag = ContactTag::Violation;
    c.detail = std::move(detail);
    c.point = std::move(pt);
    c.segment = std::move(seg);
    return c;
}

Contact classify_components(const Polygon& p, const Polygon& q,
                            const std::vector<std::pair<Point3, Point3>>& comps) {
    if (comps.empty()) return Contact{};
    if (comps.size() > 1) {
        return violation("intersection has " + std::to_string(comps.size()) + " components",
                         std::nullopt, comps[0]);
    }
    const auto& [x, y] = comps[0];
    if (x == y) {
        if (p.has_corner(x) && q.has_corner(x)) {
            Contact c;
            c.tag = ContactTag::SingleCorner;
            c.point = x;
            return c;
        }
        return violation("touch point is not a corner of both polygons", x);
    }
    if (p.has_side(x, y) && q.has_side(x, y)) {
        Contact c;
        c.tag = ContactTag::SharedSide;
        c.segment = std::make_pair(x, y);
        return c;
    }
    return violation("shared segment is not a complete side of both polygons", std::nullopt,
                     comps[0]);
}

// ---- Non-coplanar pair: everything happens on the planes' common line ----

Contact classify_on_line(const Polygon& p, const Polygon& q) {
    Line3 line = plane_intersection(p.plane(), q.plane());
    std::vector<LinePiece> sp = polygon_line_slice(p, line);
    if (sp.empty()) return Contact{};
    std::vector<LinePiece> sq = polygon_line_slice(q, line);
    if (sq.empty()) return Contact{};
    std::vector<std::pair<Point3, Point3>> comps;
    std::size_t i = 0, j = 0;
    while (i < sp.size() && j < sq.size()) {
        Rat lo = rat_max(sp[i].t0, sq[j].t0);
        Rat hi = rat_min(sp[i].t1, sq[j].t1);
        if (lo <= hi) comps.emplace_back(line.at(lo), line.at(hi));
        if (sp[i].t1 < sq[j].t1) ++i;
        else ++j;
    }
    return classify_components(p, q, comps);
}

// ---- Coplanar pair: exact 2D boundary arrangement in the shared plane ----

struct PlanarHits {
    // Boundary-boundary intersection pieces, in 2D.
    std::vector<std::pair<Vec2, Vec2>> pieces;
    std::optional<Vec2> crossing;  // witness of a proper edge crossing
    // Parameters of boundary hits per side of p and of q (squared-length scale).
    std::vector<std::vector<std::pair<Rat, Rat>>> on_p, on_q;
};

PlanarHits collect_hits(const std::vector<Vec2>& pp, const std::vector<Vec2>& qq) {
    PlanarHits h;
    h.on_p.resize(pp.size());
    h.on_q.resize(qq.size());
    auto param = [](const Vec2& origin, const Vec2& axis, const Vec2& pt) {
        return dot(pt - origin, axis);
    };
    for (std::size_t i = 0; i < pp.size(); ++i) {
        const Vec2 &a = pp[i], &b = pp[(i + 1) % pp.size()];
        Vec2 u = b - a;
        for (std::size_t j = 0; j < qq.size(); ++j) {
            const Vec2 &c = qq[j], &d = qq[(j + 1) % qq.size()];
            Seg2Hit hit = seg2_intersect(a, b, c, d);
            if (hit.kind == Seg2Hit::Kind::None) continue;
            if (hit.proper && !h.crossing) h.crossing = hit.p;
            Vec2 v = d - c;
            if (hit.kind == Seg2Hit::Kind::Point) {
                h.pieces.emplace_back(hit.p, hit.p);
                Rat tp = param(a, u, hit.p);
                h.on_p[i].emplace_back(tp, tp);
                Rat tq = param(c, v, hit.p);
                h.on_q[j].emplace_back(tq, tq);
            } else {
                h.pieces.emplace_back(hit.p, hit.q);
                Rat tp0 = param(a, u, hit.p), tp1 = param(a, u, hit.q);
                if (tp0 > tp1) std::swap(tp0, tp1);
                h.on_p[i].emplace_back(tp0, tp1);
                Rat tq0 = param(c, v, hit.p), tq1 = param(c, v, hit.q);
                if (tq0 > tq1) std::swap(tq0, tq1);
                h.on_q[j].emplace_back(tq0, tq1);
            }
        }
    }
    return h;
}

// Tests whether any part of the boundary (corners + open gaps between
// recorded hits on each side) lies strictly inside the other polygon.
std::optional<Vec2> boundary_inside(const std::vector<Vec2>& poly,
                                    std::vector<std::vector<std::pair<Rat, Rat>>>& hits,
                                    const std::vector<Vec2>& other) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 &a = poly[i], &b = poly[(i + 1) % poly.size()];
        Vec2 u = b - a;
        Rat len2 = dot(u, u);
        auto& hv = hits[i];
        std::sort(hv.begin(), hv.end());
        // Merge into disjoint intervals clipped to [0, len2].
        std::vector<std::pair<Rat, Rat>> merged;
        for (auto& [lo, hi] : hv) {
            Rat l = rat_max(lo, Rat(0)), h2 = rat_min(hi, len2);
            if (l > h2) continue;
            if (!merged.empty() && l <= merged.back().second)
                merged.back().second = rat_max(merged.back().second, h2);
            else
                merged.emplace_back(l, h2);
        }
        std::vector<Rat> gaps;  // midpoints of uncovered stretches
        Rat cur = 0;
        for (auto& [lo, hi] : merged) {
            if (cur < lo) gaps.push_back((cur + lo) / 2);
            if (hi > cur) cur = hi;
        }
        if (cur < len2) gaps.push_back((cur + len2) / 2);
        for (const Rat& g : gaps) {
            Vec2 pt = a + u * (g / len2);
            if (point_in_polygon(pt, other) == Region::Inside) return pt;
        }
    }
    return std::nullopt;
}

std::string vec2_str(const Vec2& v) { return "(" + rat_str(v.x) + "," + rat_str(v.y) + ")"; }

Contact classify_coplanar(const Polygon& p, const Polygon& q) {
    // Both polygons lie in p's plane; use p's projection for both.
    std::vector<Vec2> pp = p.projected_corners();
    std::vector<Vec2> qq;
    qq.reserve(q.size());
    for (const Point3& c : q.corners()) qq.push_back(p.project(c));

    PlanarHits hits = collect_hits(pp, qq);
    if (hits.crossing)
        return violation("boundaries cross at " + vec2_str(*hits.crossing));

    if (auto w = boundary_inside(pp, hits.on_p, qq))
        return violation("boundary point " + vec2_str(*w) + " lies in the other interior");
    if (auto w = boundary_inside(qq, hits.on_q, pp))
        return violation("boundary point " + vec2_str(*w) + " lies in the other interior");

    // Interiors are now disjoint; merge the boundary pieces into maximal
    // components (segments grouped per line, then isolated points).
    struct LineKey {
        Rat a, b, c;  // a*x + b*y = c, normalized
        bool operator<(const LineKey& o) const {
            int s = cmp(a, o.a);
            if (s != 0) return s < 0;
            s = cmp(b, o.b);
            if (s != 0) return s < 0;
            return cmp(c, o.c) < 0;
        }
    };
    auto line_of = [](const Vec2& x, const Vec2& y) {
        Vec2 d = y - x;
        Rat a = -d.y, b = d.x;
        Rat c = a * x.x + b * x.y;
        // normalize by first nonzero coefficient
        Rat lead = sign(a) != 0 ? a : b;
        return LineKey{a / lead, b / lead, c / lead};
    };
    std::vector<std::pair<Vec2, Vec2>> segs;
    std::vector<Vec2> points;
    for (auto& [x, y] : hits.pieces) {
        if (x == y) points.push_back(x);
        else segs.emplace_back(x, y);
    }
    // Merge overlapping collinear segments.
    std::vector<std::pair<Vec2, Vec2>> merged_segs;
    {
        std::vector<std::pair<LineKey, std::pair<Vec2, Vec2>>> keyed;
        for (auto& s : segs) keyed.emplace_back(line_of(s.first, s.second), s);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& l, const auto& r) { return l.first < r.first; });
        std::size_t i = 0;
        while (i < keyed.size()) {
            std::size_t j = i;
            while (j < keyed.size() && !(keyed[i].first < keyed[j].first) &&
                   !(keyed[j].first < keyed[i].first))
                ++j;
            // same supporting line: merge by parameter
            Vec2 origin = keyed[i].second.first;
            Vec2 axis = keyed[i].second.second - keyed[i].second.first;
            std::vector<std::pair<Rat, Rat>> iv;
            for (std::size_t k = i; k < j; ++k) {
                Rat t0 = dot(keyed[k].second.first - origin, axis);
                Rat t1 = dot(keyed[k].second.second - origin, axis);
                if (t0 > t1) std::swap(t0, t1);
                iv.emplace_back(t0, t1);
            }
            std::sort(iv.begin(), iv.end());
            Rat n2 = dot(axis, axis);
            std::vector<std::pair<Rat, Rat>> out;
            for (auto& [lo, hi] : iv) {
                if (!out.empty() && lo <= out.back().second)
                    out.back().second = rat_max(out.back().second, hi);
                else
                    out.emplace_back(lo, hi);
            }
            for (auto& [lo, hi] : out)
                merged_segs.emplace_back(origin + axis * (lo / n2), origin + axis * (hi / n2));
            i = j;
        }
    }
    // Points not already covered by a segment, deduplicated.
    std::vector<Vec2> lone;
    for (const Vec2& pt : points) {
        bool covered = false;
        for (auto& [x, y] : merged_segs)
            if (on_segment2(pt, x, y)) {
                covered = true;
                break;
            }
        if (!covered && std::find(lone.begin(), lone.end(), pt) == lone.end()) lone.push_back(pt);
    }
    // Two merged segments sharing an endpoint form a bent component.
    for (std::size_t i = 0; i < merged_segs.size(); ++i)
        for (std::size_t j = i + 1; j < merged_segs.size(); ++j) {
            const auto& [a, b] = merged_segs[i];
            const auto& [c, d] = merged_segs[j];
            if (a == c || a == d || b == c || b == d)
                return violation("intersection contains a bent polyline");
        }

    // Back to 3D: un-project via the plane equation.
    auto unproject = [&](const Vec2& v) -> Point3 {
        const Plane& pl = p.plane();
        Rat pa(pl.a), pb(pl.b), pc(pl.c), pd(pl.d);
        switch (p.drop_axis()) {
            case 0: return {(-pd - pb * v.x - pc * v.y) / pa, v.x, v.y};
            case 1: return {v.x, (-pd - pa * v.x - pc * v.y) / pb, v.y};
            default: return {v.x, v.y, (-pd - pa * v.x - pb * v.y) / pc};
        }
    };
    std::vector<std::pair<Point3, Point3>> comps;
    for (auto& [x, y] : merged_segs) comps.emplace_back(unproject(x), unproject(y));
    for (const Vec2& pt : lone) comps.emplace_back(unproject(pt), unproject(pt));
    return classify_components(p, q, comps);
}

}  // namespace

const char* contact_tag_name(ContactTag tag) {
    switch (tag) {
        case ContactTag::Disjoint: return "disjoint";
        case ContactTag::SingleCorner: return "single-corner";
        case ContactTag::SharedSide: return "shared-side";
        default: return "violation";
    }
}

Contact classify_contact(const Polygon& p, const Polygon& q) {
    if (bbox_disjoint(p, q)) return Contact{};
    if (p.plane() == q.plane()) return classify_coplanar(p, q);
    if (p.plane().parallel_to(q.plane())) return Contact{};
    if (strictly_one_side(q, p.plane()) || strictly_one_side(p, q.plane())) return Contact{};
    return classify_on_line(p, q);
}

}  // namespace polysurf
