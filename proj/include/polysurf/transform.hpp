#pragma once

#include "polysurf/plane.hpp"
#include "polysurf/polygon.hpp"

#include <optional>
#include <utility>

namespace polysurf {

// Clips to the closed half-space h >= 0 (keep = +1) or h <= 0 (keep = -1).
// Returns nothing when the intersection has empty interior. New corners are
// introduced where sides cross the plane; corners on the plane are kept.
std::optional<Polygon> cut_polygon_by_halfspace(const Polygon& poly, const Plane& h, int keep);

// Homogeneous map by an invertible 4x4 rational matrix. Throws
// MapsToInfinity if a corner lands on the plane at infinity and
// SingularTransform if det(T) == 0.
Polygon apply_projective(const Mat4& t, const Polygon& poly);

// Rational point on the unit circle: ((1-t^2)/(1+t^2), 2t/(1+t^2)).
std::pair<Rat, Rat> circle_direction(const Rat& t);

}  // namespace polysurf
