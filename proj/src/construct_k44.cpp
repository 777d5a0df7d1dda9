#include "construct_internal.hpp"

#include "polysurf/transform.hpp"

#include <algorithm>

namespace polysurf {

namespace {

Point3 pt(const char* x, const char* y, const char* z) {
    return {rat_parse(x), rat_parse(y), rat_parse(z)};
}

std::vector<Polygon> table_polygons() {
    std::vector<Polygon> p;
    p.emplace_back("P_top", std::vector<Point3>{pt("-6", "0", "10"), pt("-5", "-1", "10"),
                                                pt("5", "-1", "10"), pt("6", "0", "10"),
                                                pt("5", "1", "10"), pt("-5", "1", "10")});
    p.emplace_back("P_bot", std::vector<Point3>{pt("-5", "1", "-10"), pt("-6", "0", "-10"),
                                                pt("-5", "-1", "-10"), pt("17", "-13", "-10"),
                                                pt("18", "-12", "-10"), pt("17", "-11", "-10")});
    p.emplace_back("P_vert1",
                   std::vector<Point3>{pt("-6", "0", "10"), pt("-5", "1", "10"),
                                       pt("-23/5", "7/5", "106/11"), pt("-23/5", "7/5", "-46/5"),
                                       pt("-5", "1", "-10"), pt("-6", "0", "-10")});
    p.emplace_back("P_vert2",
                   std::vector<Point3>{pt("-6", "0", "10"), pt("-5", "-1", "10"),
                                       pt("-23/5", "-7/5", "106/11"), pt("-23/5", "-7/5", "-46/5"),
                                       pt("-5", "-1", "-10"), pt("-6", "0", "-10")});
    p.emplace_back("P_vert3",
                   std::vector<Point3>{pt("6", "0", "10"), pt("5", "-1", "10"),
                                       pt("23/5", "-59/25", "46/5"),
                                       pt("82/5", "-712/55", "-104/11"), pt("17", "-13", "-10"),
                                       pt("18", "-12", "-10")});
    p.emplace_back("P_vert4",
                   std::vector<Point3>{pt("6", "0", "10"), pt("5", "1", "10"),
                                       pt("23/5", "7/5", "46/5"), pt("82/5", "-52/5", "-104/11"),
                                       pt("17", "-11", "-10"), pt("18", "-12", "-10")});
    p.emplace_back("P_diag1",
                   std::vector<Point3>{pt("-5", "1", "10"), pt("-23/5", "7/5", "106/11"),
                                       pt("82/5", "-52/5", "-104/11"), pt("17", "-11", "-10"),
                                       pt("17", "-13", "-10"), pt("82/5", "-712/55", "-104/11"),
                                       pt("-23/5", "-7/5", "106/11"), pt("-5", "-1", "10")});
    p.emplace_back("P_diag2",
                   std::vector<Point3>{pt("-5", "1", "-10"), pt("-23/5", "7/5", "-46/5"),
                                       pt("23/5", "7/5", "46/5"), pt("5", "1", "10"),
                                       pt("5", "-1", "10"), pt("23/5", "-59/25", "46/5"),
                                       pt("-23/5", "-7/5", "-46/5"), pt("-5", "-1", "-10")});
    return p;
}

// The eight box corners where a diagonal, a vertical, and the top or
// bottom hexagon meet. The published slab clip alone truncates the
// diagonal-vertical contact sides into partial overlaps; trimming these
// corners first (fraction 3/8, chosen so the trimmed contact sides end
// strictly inside the slab) makes the clip remove exactly the two chord
// sides of each diagonal.
std::vector<Point3> box_corners() {
    return {pt("-5", "1", "10"),   pt("-5", "-1", "10"),  pt("5", "1", "10"),
            pt("5", "-1", "10"),   pt("-5", "1", "-10"),  pt("-5", "-1", "-10"),
            pt("17", "-11", "-10"), pt("17", "-13", "-10")};
}

Surface clip_diagonals(const Surface& s) {
    Plane top_cap = Plane::from_normal_point({Rat(0), Rat(0), Rat(1)}, pt("0", "0", "99/10"));
    Plane bot_cap = Plane::from_normal_point({Rat(0), Rat(0), Rat(1)}, pt("0", "0", "-99/10"));
    std::vector<Polygon> out;
    for (const Polygon& p : s.polygons()) {
        if (p.id() == "P_diag1" || p.id() == "P_diag2") {
            auto clipped = cut_polygon_by_halfspace(p, top_cap, -1);
            clipped = cut_polygon_by_halfspace(*clipped, bot_cap, +1);
            out.push_back(*clipped);
        } else {
            out.push_back(p);
        }
    }
    return Surface(std::move(out), s.mode());
}

}  // namespace

Surface k44_raw_surface() { return Surface(table_polygons(), SurfaceMode::Convex); }

Surface k44_clipped_untrimmed() {
    Surface s = k44_raw_surface();
    auto lists = corner_lists(s);
    trim_corners_in_lists(lists, box_corners(), rat(3, 8));
    return clip_diagonals(surface_from_lists(s, std::move(lists)));
}

ConstructionResult realize_k44() {
    Surface s = k44_clipped_untrimmed();
    // Remove the two same-part contacts (P_vert1/P_vert2 and
    // P_vert3/P_vert4) by side trims.
    struct SideSpec {
        Point3 a, b;
        const char* left;
        const char* right;
    };
    std::vector<SideSpec> unwanted = {
        {pt("-6", "0", "10"), pt("-6", "0", "-10"), "P_vert1", "P_vert2"},
        {pt("6", "0", "10"), pt("18", "-12", "-10"), "P_vert3", "P_vert4"},
    };
    auto lists = corner_lists(s);
    Rat eps = rat(1, 8);
    std::vector<Point3> endpoints;
    for (const auto& spec : unwanted) {
        endpoints.push_back(spec.a);
        endpoints.push_back(spec.b);
    }
    trim_corners_in_lists(lists, endpoints, eps);
    for (const auto& spec : unwanted)
        for (const char* id : {spec.left, spec.right})
            erase_corners_on_side(lists[*s.index_of(id)], spec.a, spec.b);
    Surface trimmed = surface_from_lists(s, std::move(lists));

    Graph target = complete_bipartite(4, 4);
    // Part one: top, bot, diag1, diag2; part two: vert1..vert4.
    std::vector<std::size_t> witness = {
        *trimmed.index_of("P_top"),   *trimmed.index_of("P_bot"),
        *trimmed.index_of("P_diag1"), *trimmed.index_of("P_diag2"),
        *trimmed.index_of("P_vert1"), *trimmed.index_of("P_vert2"),
        *trimmed.index_of("P_vert3"), *trimmed.index_of("P_vert4")};
    return detail::finish(std::move(trimmed), std::move(target), std::move(witness),
                          "realize_k44");
}

}  // namespace polysurf
