#include "construct_internal.hpp"

#include "polysurf/transform.hpp"

namespace polysurf {

namespace {

// 2D halfplane coordinates (x along the shared axis, u >= 0 outward).
Point3 embed(const std::pair<Rat, Rat>& dir, const Rat& x, const Rat& u) {
    return {x, u * dir.first, u * dir.second};
}

}  // namespace

// One comb per vertex, all teeth reaching the x-axis; the tooth of edge e
// occupies [4e+1, 4e+2] on the axis and is a complete side of both
// incident combs.
ConstructionResult realize_comb(const Graph& g) {
    const int n = g.vertex_count();
    auto edge_list = g.edges();
    const int m = static_cast<int>(edge_list.size());
    Rat length = m > 0 ? rat(4 * m - 1) : rat(1);

    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < m; ++e) {
        incident[edge_list[e].first].push_back(e);
        incident[edge_list[e].second].push_back(e);
    }

    std::vector<Polygon> polys;
    polys.reserve(n);
    for (int v = 0; v < n; ++v) {
        auto dir = circle_direction(rat(v + 1, n + 1));
        std::vector<Point3> corners;
        corners.push_back(embed(dir, rat(0), rat(1)));
        for (int e : incident[v]) {
            Rat lo = rat(4 * e + 1), hi = rat(4 * e + 2);
            corners.push_back(embed(dir, lo - rat(1, 2), rat(1)));
            corners.push_back(embed(dir, lo, rat(0)));
            corners.push_back(embed(dir, hi, rat(0)));
            corners.push_back(embed(dir, hi + rat(1, 2), rat(1)));
        }
        corners.push_back(embed(dir, length, rat(1)));
        corners.push_back(embed(dir, length, rat(2)));
        corners.push_back(embed(dir, rat(0), rat(2)));
        polys.emplace_back("v" + std::to_string(v), std::move(corners));
    }

    std::vector<std::size_t> witness(n);
    for (int v = 0; v < n; ++v) witness[v] = static_cast<std::size_t>(v);
    return detail::finish(Surface(std::move(polys), SurfaceMode::General), g, std::move(witness),
                          "realize_comb");
}

}  // namespace polysurf
