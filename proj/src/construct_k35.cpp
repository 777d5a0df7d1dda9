#include "construct_internal.hpp"

#include <algorithm>
#include <array>

namespace polysurf {

namespace {

// Triangle cross-section of the prism (prism axis = z).
const char* kCorner[3][2] = {{"0", "0"}, {"1", "0"}, {"1/2", "1"}};

// Heights of the five colorful planes over the three prism edges. Derived
// once with the face-cell feasibility search and frozen; the construction
// below re-derives every polygon from these values and re-certifies.
const char* kPlaneHeight[5][3] = {
    {"1137/16", "100", "635/8"},
    {"1169/16", "62", "571/8"},
    {"100", "1169/16", "3047/32"},
    {"-479/16", "1193/16", "2935/32"},
    {"2949/32", "-100", "100"},
};

// Which side of each colorful line the gray cell occupies, per face.
const int kSide[5][3] = {
    {-1, -1, 1}, {1, 1, 1}, {-1, -1, -1}, {1, -1, 1}, {1, 1, -1}};

// Facet stations: where each colorful line supports the gray cell.
const char* kStation[3][5] = {
    {"1/2", "3/10", "7/10", "9/10", "1/10"},
    {"7/10", "3/10", "1/10", "1/2", "9/10"},
    {"7/10", "9/10", "3/10", "1/10", "1/2"},
};

struct FaceLine {
    Rat intercept, slope;  // z = intercept + slope * s along the face
    Rat at(const Rat& s) const { return intercept + slope * s; }
};

Point3 face_point(int face, const Rat& s, const Rat& z) {
    Rat ax = rat_parse(kCorner[face][0]), ay = rat_parse(kCorner[face][1]);
    Rat bx = rat_parse(kCorner[(face + 1) % 3][0]), by = rat_parse(kCorner[(face + 1) % 3][1]);
    return {ax + s * (bx - ax), ay + s * (by - ay), z};
}

// Exact cyclic comparison of directions by angle.
bool angle_less(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
    auto half = [](const std::pair<Rat, Rat>& v) {
        return sign(v.second) < 0 || (sign(v.second) == 0 && sign(v.first) < 0) ? 1 : 0;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return sign(a.first * b.second - a.second * b.first) > 0;
}

}  // namespace

ConstructionResult realize_k35() {
    FaceLine line[5][3];
    for (int c = 0; c < 5; ++c)
        for (int i = 0; i < 3; ++i) {
            Rat z0 = rat_parse(kPlaneHeight[c][i]);
            Rat z1 = rat_parse(kPlaneHeight[c][(i + 1) % 3]);
            line[c][i] = {z0, z1 - z0};
        }

    // Contact segment of plane c on face i: a tiny stretch of the line
    // around its station, kept away from every crossing with the other
    // lines (so no segment reaches a cell vertex).
    Rat contact[5][3][2];
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 5; ++c) {
            Rat s0 = rat_parse(kStation[i][c]);
            Rat lo(0), hi(1);
            for (int d = 0; d < 5; ++d) {
                if (d == c) continue;
                Rat gap = line[c][i].at(s0) - line[d][i].at(s0);
                if (sign(gap) * kSide[d][i] <= 0)
                    fail(ErrorCode::CoordinateDerivationFailed,
                         "realize_k35: station escapes the gray cell");
                if (line[c][i].slope == line[d][i].slope) continue;
                Rat cross = (line[d][i].intercept - line[c][i].intercept) /
                            (line[c][i].slope - line[d][i].slope);
                if (cross > s0 && cross < hi) hi = cross;
                if (cross < s0 && cross > lo) lo = cross;
            }
            Rat w = rat_min(s0 - lo, hi - s0) / 6;
            if (sign(w) <= 0)
                fail(ErrorCode::CoordinateDerivationFailed, "realize_k35: empty contact window");
            contact[c][i][0] = s0 - w;
            contact[c][i][1] = s0 + w;
        }

    std::vector<Polygon> polys;
    // Gray decagons: the ten contact endpoints of a face, ordered along the
    // cell boundary (facets sorted by outward-normal angle, each contact
    // oriented with the boundary direction).
    for (int i = 0; i < 3; ++i) {
        std::vector<int> facet_order = {0, 1, 2, 3, 4};
        auto normal = [&](int c) {
            return std::make_pair(Rat(kSide[c][i]) * line[c][i].slope, Rat(-kSide[c][i]));
        };
        std::sort(facet_order.begin(), facet_order.end(),
                  [&](int a, int b) { return angle_less(normal(a), normal(b)); });
        std::vector<Point3> corners;
        for (int c : facet_order) {
            Rat s_first = contact[c][i][0], s_second = contact[c][i][1];
            if (kSide[c][i] < 0) std::swap(s_first, s_second);
            corners.push_back(face_point(i, s_first, line[c][i].at(s_first)));
            corners.push_back(face_point(i, s_second, line[c][i].at(s_second)));
        }
        polys.emplace_back("gray" + std::to_string(i), std::move(corners));
    }
    // Colorful hexagons: the same contact endpoints, two per face.
    for (int c = 0; c < 5; ++c) {
        std::vector<Point3> corners;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 2; ++k) {
                const Rat& s = contact[c][i][k];
                corners.push_back(face_point(i, s, line[c][i].at(s)));
            }
        polys.emplace_back("P" + std::to_string(c), std::move(corners));
    }

    Surface surface(std::move(polys), SurfaceMode::Convex);
    // Re-certify the colorful pairwise disjointness the Fig-9 way before
    // the full validation.
    for (int c1 = 0; c1 < 5; ++c1)
        for (int c2 = c1 + 1; c2 < 5; ++c2) {
            auto cert = k35_certificate(surface, "P" + std::to_string(c1),
                                        "P" + std::to_string(c2));
            if (!cert.disjoint)
                fail(ErrorCode::CoordinateDerivationFailed,
                     "realize_k35: certificate failed for " + cert.id_a + "/" + cert.id_b + ": " +
                         cert.detail);
        }

    Graph target = complete_bipartite(3, 5);
    std::vector<std::size_t> witness;
    for (int i = 0; i < 3; ++i) witness.push_back(*surface.index_of("gray" + std::to_string(i)));
    for (int c = 0; c < 5; ++c) witness.push_back(*surface.index_of("P" + std::to_string(c)));
    return detail::finish(std::move(surface), std::move(target), std::move(witness),
                          "realize_k35");
}

DisjointnessCertificate k35_certificate(const Surface& s, const std::string& id_a,
                                        const std::string& id_b) {
    DisjointnessCertificate cert;
    cert.id_a = id_a;
    cert.id_b = id_b;
    auto ia = s.index_of(id_a), ib = s.index_of(id_b);
    if (!ia || !ib) {
        cert.detail = "polygon id not found";
        return cert;
    }
    const Polygon &pa = s[*ia], &pb = s[*ib];
    if (pa.plane() == pb.plane()) {
        cert.detail = "coplanar polygons, certificate does not apply";
        return cert;
    }
    if (pa.plane().parallel_to(pb.plane())) {
        cert.disjoint = true;
        cert.detail = "supporting planes are parallel and distinct";
        return cert;
    }
    Line3 common = plane_intersection(pa.plane(), pb.plane());
    auto sa = polygon_line_slice(pa, common);
    auto sb = polygon_line_slice(pb, common);
    if (sa.empty() || sb.empty()) {
        cert.disjoint = true;
        cert.detail = "a polygon misses the common supporting-plane line";
        return cert;
    }
    for (const auto& x : sa)
        for (const auto& y : sb)
            if (rat_max(x.t0, y.t0) <= rat_min(x.t1, y.t1)) {
                cert.detail = "segments on the common line overlap";
                return cert;
            }
    cert.disjoint = true;
    cert.detail = "segments on the common line are disjoint";
    return cert;
}

}  // namespace polysurf
