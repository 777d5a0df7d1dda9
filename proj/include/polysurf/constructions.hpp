#pragma once

#include "polysurf/graph.hpp"
#include "polysurf/surface.hpp"

#include <cstdint>
#include <string>

namespace polysurf {

struct ConstructionStats {
    std::size_t polygon_count = 0;
    std::size_t max_corner_count = 0;
    std::size_t max_coord_bits = 0;
};

// A surface together with the graph it realizes and the witness map.
// Constructions verify themselves before returning: the surface validates
// in its mode and vertex_to_polygon is an exact isomorphism witness.
struct ConstructionResult {
    Surface surface;
    Graph target;
    Realization realization;
    ConstructionStats stats;
};

// Any graph, by nonconvex comb-shaped polygons sharing teeth along a
// common segment (General mode).
ConstructionResult realize_comb(const Graph& g);

// Planar graphs as flat surfaces of strictly convex polygons in z = 0.
ConstructionResult realize_planar_flat(const Graph& g, std::uint64_t seed = 1);

// The k-subdivision of any graph with m >= 2 edges, with the vertex
// polygons placed in rational halfplanes through the z-axis.
ConstructionResult realize_subdivision_cylinder(const Graph& g, int k = 1);

// K_{4,4} from the published coordinate table; also exposes the raw
// polygons and the clipped-but-untrimmed stage for the verifier tests.
ConstructionResult realize_k44();
Surface k44_raw_surface();
Surface k44_clipped_untrimmed();

// K_{3,5} on a triangular prism; re-certifies the pairwise disjointness
// certificates of the colorful polygons.
ConstructionResult realize_k35();

// For the colorful pair (i, j): the segments in which the two polygons
// meet the common line of their supporting planes must not overlap.
struct DisjointnessCertificate {
    std::string id_a, id_b;
    bool disjoint = false;
    std::string detail;
};
DisjointnessCertificate k35_certificate(const Surface& s, const std::string& id_a,
                                        const std::string& id_b);

// Hypercube Q_d, every polygon a (d+4)-gon, by the inductive
// cut-mirror-slice-restore construction.
ConstructionResult realize_hypercube(int d);

// The constant-average-degree family: m = 2*ell^2 + 2*ell + 1 lifted
// octagon grids placed cyclically plus vertical and horizontal polygons.
ConstructionResult density_family(int ell);

// Number of grid cells with the full eight neighbors.
std::size_t density_inner_octagon_count(int ell);

}  // namespace polysurf
