#include "construct_internal.hpp"

#include <algorithm>
#include <string>

namespace polysurf::detail {

ConstructionResult finish(Surface surface, Graph target,
                          std::vector<std::size_t> vertex_to_polygon, const char* what) {
    VerificationReport report = validate(surface);
    if (!report.valid) {
        std::string msg = std::string(what) + ": construction produced an invalid surface";
        for (std::size_t i = 0; i < report.violations.size() && i < 4; ++i) {
            msg += "; [";
            for (const auto& id : report.violations[i].ids) msg += id + " ";
            msg += "] " + report.violations[i].description;
        }
        fail(ErrorCode::InvalidSurface, msg);
    }
    if (vertex_to_polygon.size() != static_cast<std::size_t>(target.vertex_count()) ||
        vertex_to_polygon.size() != surface.size())
        fail(ErrorCode::InvalidSurface, std::string(what) + ": witness map has wrong size");
    std::vector<bool> seen(surface.size(), false);
    for (std::size_t p : vertex_to_polygon) {
        if (p >= surface.size() || seen[p])
            fail(ErrorCode::InvalidSurface, std::string(what) + ": witness map not a bijection");
        seen[p] = true;
    }
    if (report.adjacency.edge_count() != target.edge_count())
        fail(ErrorCode::InvalidSurface,
             std::string(what) + ": adjacency has " +
                 std::to_string(report.adjacency.edge_count()) + " edges, target has " +
                 std::to_string(target.edge_count()));
    for (auto [u, v] : target.edges()) {
        if (!report.adjacency.has_edge(static_cast<int>(vertex_to_polygon[u]),
                                       static_cast<int>(vertex_to_polygon[v])))
            fail(ErrorCode::InvalidSurface,
                 std::string(what) + ": witness map misses target edge " + std::to_string(u) +
                     "-" + std::to_string(v));
    }

    ConstructionResult result;
    result.stats.polygon_count = surface.size();
    for (const Polygon& p : surface.polygons()) {
        result.stats.max_corner_count = std::max(result.stats.max_corner_count, p.size());
        for (const Point3& c : p.corners())
            for (int axis = 0; axis < 3; ++axis)
                result.stats.max_coord_bits = std::max(result.stats.max_coord_bits,
                                                       rat_bits(c[axis]));
    }
    result.surface = std::move(surface);
    result.target = std::move(target);
    result.realization.vertex_to_polygon = std::move(vertex_to_polygon);
    return result;
}

}  // namespace polysurf::detail
