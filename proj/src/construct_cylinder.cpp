#include "construct_internal.hpp"

#include "polysurf/transform.hpp"

namespace polysurf {

// Theorem-style cylinder placement: every vertex polygon is a congruent
// 2m-gon in its own rational halfplane through the z-axis, long side on
// the unit cylinder; the k-subdivision vertices of edge e become k
// trapezoid pieces spanned between the copies of e's short side.
ConstructionResult realize_subdivision_cylinder(const Graph& g, int k) {
    const int n = g.vertex_count();
    auto edge_list = g.edges();
    const int m = static_cast<int>(edge_list.size());
    if (m < 2) fail(ErrorCode::TooFewEdges, "realize_subdivision_cylinder: need at least 2 edges");
    if (k < 1) fail(ErrorCode::BadInput, "realize_subdivision_cylinder: k must be >= 1");

    // Profile corners (r_j, z_j): heights 0, 1, ..., 2m-2, B with the radii
    // on a parabola dipping inside the cylinder. B has a fractional part so
    // no short side is parallel to the long (vertical) side.
    const Rat big = rat(2 * m - 1) + rat(1, 7);
    std::vector<Rat> height(2 * m), radius(2 * m);
    for (int j = 0; j < 2 * m; ++j) {
        height[j] = (j == 2 * m - 1) ? big : rat(j);
        radius[j] = 1 - height[j] * (big - height[j]) / (big * big);
    }

    std::vector<std::pair<Rat, Rat>> dirs(n);
    for (int v = 0; v < n; ++v) dirs[v] = circle_direction(rat(v + 1, n + 1));
    auto place = [&](int v, int j) -> Point3 {
        return {radius[j] * dirs[v].first, radius[j] * dirs[v].second, height[j]};
    };

    std::vector<Polygon> polys;
    for (int v = 0; v < n; ++v) {
        std::vector<Point3> corners;
        for (int j = 0; j < 2 * m; ++j) corners.push_back(place(v, j));
        polys.emplace_back("v" + std::to_string(v), std::move(corners));
    }

    Graph target = subdivide_graph(g, k);
    std::vector<std::size_t> witness(target.vertex_count());
    for (int v = 0; v < n; ++v) witness[v] = static_cast<std::size_t>(v);

    for (int e = 0; e < m; ++e) {
        auto [a, b] = edge_list[e];
        Point3 lo_a = place(a, 2 * e), hi_a = place(a, 2 * e + 1);
        Point3 lo_b = place(b, 2 * e), hi_b = place(b, 2 * e + 1);
        for (int c = 0; c < k; ++c) {
            Rat t0 = rat(c, k), t1 = rat(c + 1, k);
            Point3 u0 = lo_a + (lo_b - lo_a) * t0, u1 = lo_a + (lo_b - lo_a) * t1;
            Point3 v0 = hi_a + (hi_b - hi_a) * t0, v1 = hi_a + (hi_b - hi_a) * t1;
            polys.emplace_back("e" + std::to_string(e) + "s" + std::to_string(c),
                               std::vector<Point3>{u0, v0, v1, u1});
            witness[n + e * k + c] = polys.size() - 1;
        }
    }

    return detail::finish(Surface(std::move(polys), SurfaceMode::Convex), std::move(target),
                          std::move(witness), "realize_subdivision_cylinder");
}

}  // namespace polysurf
