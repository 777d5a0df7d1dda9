#include "polysurf/surface.hpp"

#include "polysurf/error.hpp"
#include "polysurf/predicates.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <thread>

namespace polysurf {

Surface::Surface(std::vector<Polygon> polygons, SurfaceMode mode)
    : polygons_(std::move(polygons)), mode_(mode) {
    std::set<std::string> ids;
    for (const Polygon& p : polygons_)
        if (!ids.insert(p.id()).second)
            fail(ErrorCode::BadInput, "surface: duplicate polygon id " + p.id());
}

std::optional<std::size_t> Surface::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < polygons_.size(); ++i)
        if (polygons_[i].id() == id) return i;
    return std::nullopt;
}

namespace {

int thread_budget(std::size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("POLYSURF_THREADS")) {
        long cap = std::atol(env);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    if (jobs < hw) hw = static_cast<unsigned>(jobs);
    return static_cast<int>(hw ? hw : 1);
}

// Does `piece` (point or segment) meet the open segment (w0, w1)?
bool meets_relative_interior(const Point3& p0, const Point3& p1, const Point3& w0,
                             const Point3& w1) {
    Vec3 axis = w1 - w0;
    Rat len2 = dot(axis, axis);
    auto param = [&](const Point3& p) { return dot(p - w0, axis); };
    if (p0 == p1) {
        if (!on_segment3(p0, w0, w1)) return false;
        Rat t = param(p0);
        return sign(t) > 0 && t < len2;
    }
    // Segment piece: if not collinear with w, they meet in at most a point.
    if (collinear3(w0, w1, p0) && collinear3(w0, w1, p1)) {
        Rat t0 = param(p0), t1 = param(p1);
        if (t0 > t1) std::swap(t0, t1);
        Rat lo = rat_max(t0, Rat(0)), hi = rat_min(t1, len2);
        if (lo > hi) return false;
        if (lo < hi) return true;             // positive-length overlap inside [w0,w1]
        return sign(lo) > 0 && lo < len2;     // single touch strictly inside
    }
    // General position: the pieces meet in at most one point. Test the
    // piece's endpoints, then a transversal segment-segment crossing.
    for (const Point3* p : {&p0, &p1}) {
        if (on_segment3(*p, w0, w1)) {
            Rat t = param(*p);
            if (sign(t) > 0 && t < len2) return true;
        }
    }
    Vec3 u = p1 - p0;
    Vec3 cr = cross(axis, u);
    if (cr.is_zero()) return false;
    if (sign(dot(p0 - w0, cr)) != 0) return false;  // skew lines
    Rat t = dot(cross(p0 - w0, u), cr) / dot(cr, cr);
    Point3 x = w0 + axis * t;
    if (!on_segment3(x, p0, p1) || !on_segment3(x, w0, w1)) return false;
    Rat tw = param(x);
    return sign(tw) > 0 && tw < len2;
}

}  // namespace

VerificationReport validate(const Surface& s) {
    VerificationReport report;
    const auto& polys = s.polygons();
    const std::size_t n = polys.size();
    report.adjacency = Graph(static_cast<int>(n));

    if (s.mode() == SurfaceMode::Convex) {
        for (const Polygon& p : polys)
            if (!is_strictly_convex(p))
                report.violations.push_back({{p.id()}, "polygon is not strictly convex"});
    }

    // Pairwise classification, deterministic merge by pair index.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Contact> results(pairs.size());
    int workers = thread_budget(pairs.size());
    if (workers <= 1) {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            results[k] = classify_contact(polys[pairs[k].first], polys[pairs[k].second]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= pairs.size()) return;
                    results[k] = classify_contact(polys[pairs[k].first], polys[pairs[k].second]);
                }
            });
        for (auto& t : pool) t.join();
    }

    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const Contact& c = results[k];
        auto [i, j] = pairs[k];
        if (c.tag == ContactTag::Disjoint) continue;
        report.contacts.emplace(std::make_pair(i, j), c);
        if (c.tag == ContactTag::SharedSide) {
            report.adjacency.add_edge(static_cast<int>(i), static_cast<int>(j));
        } else if (c.tag == ContactTag::Violation) {
            report.violations.push_back({{polys[i].id(), polys[j].id()}, c.detail});
        }
    }

    // A side is shared by at most two polygons; triple intersections must be
    // single corners. Equivalent check: no third polygon's contact piece may
    // meet the relative interior of any shared side.
    for (const auto& [pair, c] : report.contacts) {
        if (c.tag != ContactTag::SharedSide) continue;
        const auto& [w0, w1] = *c.segment;
        for (const auto& [other, oc] : report.contacts) {
            if (oc.tag == ContactTag::Violation) continue;
            if (other == pair) continue;
            std::size_t shared;
            if (other.first == pair.first || other.first == pair.second) shared = other.second;
            else if (other.second == pair.first || other.second == pair.second) shared = other.first;
            else continue;
            bool meets = false;
            if (oc.tag == ContactTag::SingleCorner)
                meets = meets_relative_interior(*oc.point, *oc.point, w0, w1);
            else
                meets = meets_relative_interior(oc.segment->first, oc.segment->second, w0, w1);
            if (meets) {
                report.violations.push_back(
                    {{polys[pair.first].id(), polys[pair.second].id(), polys[shared].id()},
                     "side shared by more than two polygons or triple contact inside a side"});
            }
        }
    }

    report.valid = report.violations.empty();
    return report;
}

Graph adjacency_graph(const Surface& s) {
    VerificationReport report = validate(s);
    if (!report.valid)
        fail(ErrorCode::InvalidSurface,
             "adjacency_graph: surface invalid (" + report.violations.front().description + ")");
    return report.adjacency;
}

std::optional<Realization> realizes(const Surface& s, const Graph& g) {
    Graph adj = adjacency_graph(s);
    auto iso = find_isomorphism(g, adj);
    if (!iso) return std::nullopt;
    Realization r;
    r.vertex_to_polygon.assign(iso->begin(), iso->end());
    return r;
}

// ---- Closure operations ----

Surface surface_from_lists(const Surface& proto, std::vector<std::vector<Point3>> lists) {
    std::vector<Polygon> out;
    out.reserve(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i)
        out.emplace_back(proto[i].id(), std::move(lists[i]));
    return Surface(std::move(out), proto.mode());
}

std::vector<std::vector<Point3>> corner_lists(const Surface& s) {
    std::vector<std::vector<Point3>> lists;
    lists.reserve(s.size());
    for (const Polygon& p : s.polygons()) lists.push_back(p.corners());
    return lists;
}

void trim_corners_in_lists(std::vector<std::vector<Point3>>& lists,
                           const std::vector<Point3>& corners_to_trim, const Rat& eps) {
    auto trims = [&](const Point3& p) {
        return std::find(corners_to_trim.begin(), corners_to_trim.end(), p) !=
               corners_to_trim.end();
    };
    for (auto& corners : lists) {
        std::vector<Point3> out;
        const std::size_t k = corners.size();
        for (std::size_t i = 0; i < k; ++i) {
            const Point3& c = corners[i];
            if (!trims(c)) {
                out.push_back(c);
                continue;
            }
            const Point3& prev = corners[(i + k - 1) % k];
            const Point3& next = corners[(i + 1) % k];
            out.push_back(c + (prev - c) * eps);
            out.push_back(c + (next - c) * eps);
        }
        corners = std::move(out);
    }
}

void erase_corners_on_side(std::vector<Point3>& corners, const Point3& a, const Point3& b) {
    corners.erase(std::remove_if(corners.begin(), corners.end(),
                                 [&](const Point3& c) {
                                     return c != a && c != b && on_segment3(c, a, b);
                                 }),
                  corners.end());
}

namespace {

bool same_edge_set(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

}  // namespace

Surface corner_trim(const Surface& s, const Point3& corner, const Rat& eps) {
    if (!(eps > 0) || !(eps < rat(1, 2)))
        fail(ErrorCode::EpsTooLarge, "corner_trim: eps must lie in (0, 1/2)");
    bool found = false;
    for (const Polygon& p : s.polygons())
        if (p.has_corner(corner)) found = true;
    if (!found) fail(ErrorCode::NotACorner, "corner_trim: point is not a corner of any polygon");
    auto lists = corner_lists(s);
    trim_corners_in_lists(lists, {corner}, eps);
    Surface out = surface_from_lists(s, std::move(lists));
    VerificationReport before = validate(s);
    VerificationReport after = validate(out);
    if (!after.valid || !same_edge_set(before.adjacency, after.adjacency))
        fail(ErrorCode::EpsTooLarge, "corner_trim: trim would change contacts");
    return out;
}

Surface side_trim(const Surface& s, const Point3& a, const Point3& b) {
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i].has_side(a, b)) incident.push_back(i);
    if (incident.empty()) fail(ErrorCode::NotASide, "side_trim: not a side of any polygon");

    VerificationReport before = validate(s);
    for (Rat eps = rat(1, 4); ; eps /= 2) {
        if (rat_bits(eps) > 70)
            fail(ErrorCode::EpsTooLarge, "side_trim: no feasible trim found");
        auto lists = corner_lists(s);
        trim_corners_in_lists(lists, {a, b}, eps);
        for (std::size_t idx : incident) erase_corners_on_side(lists[idx], a, b);
        Surface out = surface_from_lists(s, std::move(lists));
        VerificationReport after = validate(out);
        if (!after.valid) continue;
        Graph expected = before.adjacency;
        if (incident.size() == 2)
            expected.remove_edge(static_cast<int>(incident[0]), static_cast<int>(incident[1]));
        if (same_edge_set(expected, after.adjacency)) return out;
    }
}

Surface subdivide_side(const Surface& s, const Point3& a, const Point3& b,
                       const std::string& new_id) {
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i].has_side(a, b)) incident.push_back(i);
    if (incident.empty()) fail(ErrorCode::NotASide, "subdivide_side: not a side of any polygon");
    if (incident.size() != 2)
        fail(ErrorCode::NoSecondPolygon, "subdivide_side: side must be shared by two polygons");

    VerificationReport before = validate(s);
    Point3 mid = (a + b) * rat(1, 2);

    Rat eps = rat(1, 4);
    for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
        auto lists = corner_lists(s);
        trim_corners_in_lists(lists, {a, b}, eps);
        Point3 cut_a = a + (b - a) * eps;
        Point3 cut_b = b + (a - b) * eps;

        std::vector<Point3> bridge_corners[2];  // notch side per incident polygon
        bool geometry_ok = true;
        for (int which = 0; which < 2 && geometry_ok; ++which) {
            auto& corners = lists[incident[which]];
            // Locate the two cuts on the old side; the notch replaces them.
            auto it_a = std::find(corners.begin(), corners.end(), cut_a);
            auto it_b = std::find(corners.begin(), corners.end(), cut_b);
            if (it_a == corners.end() || it_b == corners.end()) {
                geometry_ok = false;
                break;
            }
            std::size_t ia = static_cast<std::size_t>(it_a - corners.begin());
            std::size_t ib = static_cast<std::size_t>(it_b - corners.begin());
            // Neighbors away from the side: c1 next to cut_a, c2 next to cut_b.
            const std::size_t k = corners.size();
            Point3 c1 = corners[(ia + k - 1) % k] == cut_b ? corners[(ia + 1) % k]
                                                           : corners[(ia + k - 1) % k];
            Point3 c2 = corners[(ib + k - 1) % k] == cut_a ? corners[(ib + 1) % k]
                                                           : corners[(ib + k - 1) % k];
            // In-plane offset functional vanishing on line(a,b), positive on
            // the polygon side.
            const Polygon& poly = s[incident[which]];
            Vec3 n_in = cross(poly.plane().normal(), b - a);
            Rat o1 = dot(n_in, c1 - a), o2 = dot(n_in, c2 - a);
            if (sign(o1) < 0) {
                n_in = -n_in;
                o1 = -o1;
                o2 = -o2;
            }
            if (sign(o1) <= 0 || sign(o2) <= 0) {
                geometry_ok = false;
                break;
            }
            Rat delta = rat_min(o1, o2) / 2;
            for (int halvings = 0; halvings <= attempt; ++halvings) delta /= 2;
            Point3 p1 = mid + (c1 - mid) * (delta / o1);
            Point3 p2 = mid + (c2 - mid) * (delta / o2);
            // The notch: ..., c1, cut_a, cut_b, c2, ... becomes
            // ..., c1, p1, p2, c2, ... with [p1, p2] parallel to [a, b].
            std::vector<Point3> rebuilt = corners;
            for (auto& c : rebuilt) {
                if (c == cut_a) c = p1;
                else if (c == cut_b) c = p2;
            }
            bridge_corners[which] = {p1, p2};
            lists[incident[which]] = std::move(rebuilt);
        }
        if (!geometry_ok) continue;

        // New polygon: trapezoid spanned by the two notch sides (parallel to
        // the trimmed side, hence coplanar).
        Vec3 axis = b - a;
        auto key = [&](const Point3& p) { return dot(p - a, axis); };
        Point3 p_lo = bridge_corners[0][0], p_hi = bridge_corners[0][1];
        if (key(p_lo) > key(p_hi)) std::swap(p_lo, p_hi);
        Point3 q_lo = bridge_corners[1][0], q_hi = bridge_corners[1][1];
        if (key(q_lo) > key(q_hi)) std::swap(q_lo, q_hi);
        std::vector<Point3> quad = {p_lo, p_hi, q_hi, q_lo};

        std::vector<Polygon> polys;
        for (std::size_t i = 0; i < lists.size(); ++i)
            polys.emplace_back(s[i].id(), std::move(lists[i]));
        try {
            polys.emplace_back(new_id, std::move(quad));
        } catch (const Error&) {
            continue;
        }
        Surface out(std::move(polys), s.mode());
        VerificationReport after = validate(out);
        if (!after.valid) continue;
        Graph expected(static_cast<int>(s.size()) + 1);
        for (auto [u, v] : before.adjacency.edges()) expected.add_edge(u, v);
        expected.remove_edge(static_cast<int>(incident[0]), static_cast<int>(incident[1]));
        int nv = static_cast<int>(s.size());
        expected.add_edge(static_cast<int>(incident[0]), nv);
        expected.add_edge(static_cast<int>(incident[1]), nv);
        if (same_edge_set(expected, after.adjacency)) return out;
    }
    fail(ErrorCode::DeltaInfeasible, "subdivide_side: no feasible delta found");
}

}  // namespace polysurf
