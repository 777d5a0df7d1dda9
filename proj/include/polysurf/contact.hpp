#pragma once

#include "polysurf/polygon.hpp"

#include <optional>
#include <string>
#include <utility>

namespace polysurf {

enum class ContactTag { Disjoint, SingleCorner, SharedSide, Violation };

// Classification of how two polygons meet, with a geometric witness.
// Violation covers everything the surface model forbids: overlapping
// interiors, partial side overlap, corner-in-side touches, crossings,
// and intersections with several components.
struct Contact {
    ContactTag tag = ContactTag::Disjoint;
    std::optional<Point3> point;                        // SingleCorner / point witness
    std::optional<std::pair<Point3, Point3>> segment;   // SharedSide / segment witness
    std::string detail;                                 // human-readable for violations
};

const char* contact_tag_name(ContactTag tag);

// Exact classification; handles convex and simple nonconvex polygons,
// coplanar or not.
Contact classify_contact(const Polygon& p, const Polygon& q);

}  // namespace polysurf
