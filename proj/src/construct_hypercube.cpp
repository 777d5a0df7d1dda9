#include "construct_internal.hpp"

#include "polysurf/transform.hpp"

#include <algorithm>

namespace polysurf {

namespace {

struct LabeledPolygon {
    unsigned label;  // bit string of the hypercube vertex
    std::vector<Point3> corners;
};

Surface to_surface(const std::vector<LabeledPolygon>& polys, int width) {
    std::vector<Polygon> out;
    for (const auto& lp : polys) {
        std::string bits;
        for (int b = width - 1; b >= 0; --b) bits += (lp.label >> b) & 1 ? '1' : '0';
        if (bits.empty()) bits = "0";
        out.emplace_back("q" + bits, lp.corners);
    }
    return Surface(std::move(out), SurfaceMode::Convex);
}

// Finds the shear z' = z + sigma*(x - pivot) that puts exactly the x = 1
// sides strictly below the xy-plane; sigma searched over -2^k.
Mat4 find_shear(const std::vector<LabeledPolygon>& polys) {
    Rat max_other(-1);
    for (const auto& lp : polys)
        for (const Point3& c : lp.corners) {
            if (c.x == 1) continue;
            if (c.x > 1) fail(ErrorCode::InvalidSurface, "hypercube step: corner beyond x=1");
            max_other = rat_max(max_other, c.x);
        }
    Rat pivot = (max_other + 1) / 2;
    for (Rat sigma(-1);; sigma *= 2) {
        if (rat_bits(sigma) > 4096)
            fail(ErrorCode::InvalidSurface, "hypercube step: shear search failed");
        bool ok = true;
        for (const auto& lp : polys) {
            for (const Point3& c : lp.corners) {
                Rat z = c.z + sigma * (c.x - pivot);
                int expect = c.x == 1 ? -1 : 1;
                if (sign(z) != expect) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (!ok) continue;
        Mat4 shear = Mat4::identity();
        shear.m[2][0] = sigma;
        shear.m[2][3] = -sigma * pivot;
        return shear;
    }
}

std::vector<Point3> apply_mat(const Mat4& t, const std::vector<Point3>& corners) {
    Polygon tmp("t", corners);
    return apply_projective(t, tmp).corners();
}

// One induction round: shear, cut with the xy-plane, glue the reflected
// copy, slice off the cut-side/top-side corner, and restore the projection
// shape projectively.
std::vector<LabeledPolygon> hypercube_step(const std::vector<LabeledPolygon>& input, int step) {
    Mat4 shear = find_shear(input);
    Plane xy = Plane::from_normal_point({Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(0)});

    std::vector<LabeledPolygon> halved;
    for (const auto& lp : input) {
        Polygon sheared("t", apply_mat(shear, lp.corners));
        auto cut = cut_polygon_by_halfspace(sheared, xy, +1);
        if (!cut || cut->size() != lp.corners.size())
            fail(ErrorCode::InvalidSurface, "hypercube step: cut changed the corner count");
        halved.push_back({lp.label, cut->corners()});
    }

    std::vector<LabeledPolygon> glued;
    for (const auto& lp : halved) {
        glued.push_back(lp);
        LabeledPolygon mirror;
        mirror.label = lp.label | (1u << step);
        mirror.corners = lp.corners;
        for (Point3& c : mirror.corners) c.z = -c.z;
        std::reverse(mirror.corners.begin(), mirror.corners.end());
        glued.push_back(std::move(mirror));
    }

    // The corner to slice: on the xy-plane and on the top side (y = 1).
    std::vector<Rat> peak_levels, other_base;  // levels at y = 1 resp. the rest
    for (const auto& lp : glued) {
        int peaks = 0;
        for (const Point3& c : lp.corners)
            if (sign(c.z) == 0 && c.y == 1) ++peaks;
        if (peaks != 1) fail(ErrorCode::InvalidSurface, "hypercube step: slice corner not unique");
    }
    for (Rat tilt(1);; tilt *= 2) {
        if (rat_bits(tilt) > 4096)
            fail(ErrorCode::InvalidSurface, "hypercube step: slice search failed");
        Rat min_peak, max_other;
        bool first_peak = true, first_other = true;
        for (const auto& lp : glued)
            for (const Point3& c : lp.corners) {
                Rat level = c.x + tilt * (c.y - 1);
                bool peak = sign(c.z) == 0 && c.y == 1;
                if (peak) {
                    if (first_peak || level < min_peak) min_peak = level;
                    first_peak = false;
                } else {
                    if (first_other || level > max_other) max_other = level;
                    first_other = false;
                }
            }
        if (!(max_other < min_peak)) continue;
        Rat split = (max_other + min_peak) / 2;

        std::vector<LabeledPolygon> sliced;
        Plane knife = Plane::from_normal_point({Rat(1), tilt, Rat(0)},
                                               {split, Rat(1), Rat(0)});
        bool ok = true;
        for (const auto& lp : glued) {
            Polygon poly("t", lp.corners);
            auto cut = cut_polygon_by_halfspace(poly, knife, -1);
            if (!cut || cut->size() != lp.corners.size() + 1) {
                ok = false;
                break;
            }
            sliced.push_back({lp.label, cut->corners()});
        }
        if (!ok) continue;

        // Restore: fix x=0, y=0, y=1; map the slice line x + tilt*(y-1) =
        // split back to x = 1. In homogeneous 2D coordinates:
        // (x, y, w) -> (x, split*y, (tilt+split)*w - tilt*y).
        Mat4 restore;
        restore.m[0][0] = 1;
        restore.m[1][1] = split;
        restore.m[2][2] = 1;
        restore.m[3][1] = -tilt;
        restore.m[3][3] = tilt + split;
        std::vector<LabeledPolygon> out;
        for (const auto& lp : sliced) out.push_back({lp.label, apply_mat(restore, lp.corners)});
        return out;
    }
}

}  // namespace

ConstructionResult realize_hypercube(int d) {
    if (d < 0) fail(ErrorCode::BadInput, "realize_hypercube: d must be >= 0");
    if (d > 12) fail(ErrorCode::BadInput, "realize_hypercube: d too large");
    std::vector<LabeledPolygon> polys = {
        {0u, {{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)},
              {Rat(0), Rat(1), Rat(0)}}}};
    for (int step = 0; step < d; ++step) {
        polys = hypercube_step(polys, step);
        // Each polygon must have gained exactly one corner per round.
        for (const auto& lp : polys)
            if (lp.corners.size() != static_cast<std::size_t>(step + 5))
                fail(ErrorCode::InvalidSurface, "hypercube step: corner count drifted");
        VerificationReport rep = validate(to_surface(polys, step + 1));
        if (!rep.valid)
            fail(ErrorCode::InvalidSurface,
                 "hypercube step " + std::to_string(step) + ": intermediate surface invalid: " +
                     rep.violations.front().description);
    }
    std::sort(polys.begin(), polys.end(),
              [](const LabeledPolygon& a, const LabeledPolygon& b) { return a.label < b.label; });
    Graph target = hypercube(d);
    std::vector<std::size_t> witness(target.vertex_count());
    for (std::size_t i = 0; i < polys.size(); ++i) witness[polys[i].label] = i;
    return detail::finish(to_surface(polys, d), std::move(target), std::move(witness),
                          "realize_hypercube");
}

}  // namespace polysurf
