#pragma once

#include "polysurf/plane.hpp"
#include "polysurf/point.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polysurf {

// Closed polygon in 3-space. Construction enforces the model invariants:
// at least three corners, all coplanar, consecutive corners distinct, and
// the boundary a simple cycle in the supporting plane. Convexity is a
// property to query, never an assumption.
class Polygon {
  public:
    Polygon(std::string id, std::vector<Point3> corners);

    const std::string& id() const { return id_; }
    const std::vector<Point3>& corners() const { return corners_; }
    std::size_t size() const { return corners_.size(); }
    const Point3& corner(std::size_t i) const { return corners_[i % corners_.size()]; }
    const Plane& plane() const { return plane_; }

    // Axis dropped when projecting into 2D (the one with the largest
    // absolute normal coefficient, so the projection is a bijection).
    int drop_axis() const { return drop_axis_; }
    Vec2 project(const Point3& p) const;
    std::vector<Vec2> projected_corners() const;

    bool has_corner(const Point3& p) const;
    // True iff {a, b} equals a side's endpoint pair.
    bool has_side(const Point3& a, const Point3& b) const;

    // Exact rational bounding box, used as a cheap disjointness prefilter.
    const Point3& bbox_min() const { return bbox_min_; }
    const Point3& bbox_max() const { return bbox_max_; }

    Polygon with_id(std::string id) const { return Polygon(std::move(id), corners_); }

  private:
    std::string id_;
    std::vector<Point3> corners_;
    Plane plane_;
    int drop_axis_ = 2;
    Point3 bbox_min_, bbox_max_;
};

// Every corner a strict extreme point: consistent strict turns, no three
// consecutive corners collinear.
bool is_strictly_convex(const Polygon& poly);

enum class Region { Outside, Boundary, Inside };

// Exact point location against a simple polygon given in 2D.
Region point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly);

// A maximal interval of a line inside a polygon (or a touch point when
// t0 == t1), in line parameters.
struct LinePiece {
    Rat t0, t1;
};

// The intersection of a polygon with a line lying in its supporting plane,
// as disjoint maximal pieces sorted by parameter. Handles simple nonconvex
// polygons (several pieces).
std::vector<LinePiece> polygon_line_slice(const Polygon& poly, const Line3& line);

}  // namespace polysurf
