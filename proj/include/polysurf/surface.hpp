#pragma once

#include "polysurf/contact.hpp"
#include "polysurf/graph.hpp"
#include "polysurf/polygon.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polysurf {

enum class SurfaceMode { Convex, General };

// Indexed collection of polygons with a validity mode. Immutable value;
// operations build new surfaces.
class Surface {
  public:
    Surface() = default;
    Surface(std::vector<Polygon> polygons, SurfaceMode mode);

    const std::vector<Polygon>& polygons() const { return polygons_; }
    std::size_t size() const { return polygons_.size(); }
    const Polygon& operator[](std::size_t i) const { return polygons_[i]; }
    SurfaceMode mode() const { return mode_; }

    std::optional<std::size_t> index_of(const std::string& id) const;

  private:
    std::vector<Polygon> polygons_;
    SurfaceMode mode_ = SurfaceMode::Convex;
};

struct SurfaceViolation {
    std::vector<std::string> ids;  // the offending pair or triple
    std::string description;
};

struct VerificationReport {
    bool valid = false;
    // Non-disjoint pairwise contacts, keyed by polygon index pair (i < j).
    std::map<std::pair<std::size_t, std::size_t>, Contact> contacts;
    std::vector<SurfaceViolation> violations;
    Graph adjacency;  // one vertex per polygon, edge per shared side
};

// Full model check: pairwise contact classification, the per-polygon
// convexity requirement in Convex mode, and the side-shared-by-two /
// triple-intersection conditions. Pairwise classification parallelizes;
// POLYSURF_THREADS caps the worker count.
VerificationReport validate(const Surface& s);

// Throws InvalidSurface when validation fails.
Graph adjacency_graph(const Surface& s);

struct Realization {
    // vertex_to_polygon[v] = index of the polygon representing graph vertex v
    std::vector<std::size_t> vertex_to_polygon;
};

// Isomorphism witness between the surface's adjacency graph and g, if any.
std::optional<Realization> realizes(const Surface& s, const Graph& g);

// ---- Closure operations (subgraphs and subdivisions) ----

// eps is the cut fraction along each incident side, in (0, 1/2); each
// incident side's cut point is corner + eps*(other_end - corner), so sides
// shared between two polygons are trimmed consistently. Adjacencies are
// unchanged (re-checked; EpsTooLarge otherwise).
Surface corner_trim(const Surface& s, const Point3& corner, const Rat& eps);

// Removes the side's contact (if shared) and nothing else.
Surface side_trim(const Surface& s, const Point3& a, const Point3& b);

// Replaces the shared side's adjacency edge u-v by a path u-x-v through a
// new polygon. new_id names the inserted polygon.
Surface subdivide_side(const Surface& s, const Point3& a, const Point3& b,
                       const std::string& new_id);

// Non-validating building blocks for batched edits inside constructions.
// All corners trim simultaneously: every cut point is computed from the
// original geometry, so sides shared between two polygons (and sides whose
// both endpoints trim) stay consistent. Callers re-validate.
std::vector<std::vector<Point3>> corner_lists(const Surface& s);
void trim_corners_in_lists(std::vector<std::vector<Point3>>& lists,
                           const std::vector<Point3>& corners, const Rat& eps);
// Removes corners lying strictly inside the open segment (a, b).
void erase_corners_on_side(std::vector<Point3>& corners, const Point3& a, const Point3& b);
Surface surface_from_lists(const Surface& proto, std::vector<std::vector<Point3>> lists);

}  // namespace polysurf
