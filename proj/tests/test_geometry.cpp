#include <doctest.h>

#include "polysurf/contact.hpp"
#include "polysurf/predicates.hpp"
#include "polysurf/transform.hpp"

using namespace polysurf;

static Point3 P(long x, long y, long z) { return {rat(x), rat(y), rat(z)}; }

TEST_CASE("orient3d basics") {
    CHECK(orient3d(P(0,0,0), P(1,0,0), P(0,1,0), P(1,1,0)) == 0);
    CHECK(orient3d(P(0,0,0), P(1,0,0), P(0,1,0), P(0,0,1)) == 1);
}

TEST_CASE("square clip") {
    Polygon sq("sq", {P(0,0,0), P(1,0,0), P(1,1,0), P(0,1,0)});
    Plane h = Plane::from_normal_point({rat(1), rat(0), rat(0)}, {rat(1,2), rat(0), rat(0)});
    auto cut = cut_polygon_by_halfspace(sq, h, -1);
    REQUIRE(cut.has_value());
    CHECK(cut->size() == 4);
    CHECK(cut->has_corner({rat(1,2), rat(0), rat(0)}));
}

TEST_CASE("shared side squares") {
    Polygon a("a", {P(0,0,0), P(1,0,0), P(1,1,0), P(0,1,0)});
    Polygon b("b", {P(1,0,0), P(2,0,0), P(2,1,0), P(1,1,0)});
    Contact c = classify_contact(a, b);
    CHECK(c.tag == ContactTag::SharedSide);
}
