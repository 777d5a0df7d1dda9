#include "construct_internal.hpp"

#include "polysurf/planar_support.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <cstdlib>
#include <iostream>

namespace polysurf {

namespace {

struct Vec2d {
    double x = 0, y = 0;
};

// Dense Gaussian elimination with partial pivoting; sizes here stay small.
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        double d = a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = a[r][col] / d;
            if (f == 0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

Rat snap(double v, int bits) {
    double scaled = std::ldexp(v, bits);
    Rat q(static_cast<long>(std::llround(scaled)));
    Int den = 1;
    den <<= bits;
    q /= Rat(den);
    return q;
}

ConstructionResult trivial_flat(const Graph& g) {
    std::vector<Polygon> polys;
    auto square = [](const Rat& x0) -> std::vector<Point3> {
        return {{x0, Rat(0), Rat(0)},
                {x0 + 1, Rat(0), Rat(0)},
                {x0 + 1, Rat(1), Rat(0)},
                {x0, Rat(1), Rat(0)}};
    };
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        bool adjacent_to_prev = v > 0 && g.has_edge(v - 1, v);
        Rat x0 = adjacent_to_prev || v == 0 ? Rat(v) : Rat(v) + rat(1, 2);
        polys.emplace_back("v" + std::to_string(v), square(x0));
    }
    std::vector<std::size_t> witness(n);
    for (int v = 0; v < n; ++v) witness[v] = static_cast<std::size_t>(v);
    return detail::finish(Surface(std::move(polys), SurfaceMode::Convex), g, std::move(witness),
                          "realize_planar_flat");
}

}  // namespace

// Appendix pipeline: biconnected planar augmentation, triangulation by
// stacking a vertex in every face, a convex (Tutte) drawing of the cubic
// 3-connected dual with the face around one helper pinned outside, then
// side trims of the augmentation edges and deletion of the helper
// polygons. The drawing is solved numerically, snapped to dyadic rationals
// and accepted only after exact re-verification.
ConstructionResult realize_planar_flat(const Graph& g, std::uint64_t seed) {
    if (!is_planar(g)) fail(ErrorCode::NotPlanar, "realize_planar_flat: graph is not planar");
    const int n = g.vertex_count();
    if (n <= 2) return trivial_flat(g);

    Graph aug = biconnected_planar_augmentation(g);
    auto rot_aug = planar_embedding(aug);
    if (!rot_aug) fail(ErrorCode::NotPlanar, "realize_planar_flat: augmentation not planar");
    auto faces_aug = embedding_faces(aug, *rot_aug);

    // Triangulate by stacking one helper vertex per face.
    Graph tri = aug;
    const int first_helper = n;
    for (const auto& face : faces_aug) {
        int h = tri.add_vertex();
        for (int v : face) tri.add_edge(h, v);
    }
    auto rot = planar_embedding(tri);
    if (!rot) fail(ErrorCode::NotPlanar, "realize_planar_flat: triangulation not planar");
    auto triangles = embedding_faces(tri, *rot);
    const int face_count = static_cast<int>(triangles.size());

    // face_of[(u,v)] = index of the face traversed through directed edge u->v.
    std::map<std::pair<int, int>, int> face_of;
    for (int f = 0; f < face_count; ++f) {
        const auto& cyc = triangles[f];
        for (std::size_t i = 0; i < cyc.size(); ++i)
            face_of[{cyc[i], cyc[(i + 1) % cyc.size()]}] = f;
    }
    auto faces_around = [&](int v) {
        std::vector<int> out;
        for (int nb : (*rot)[v]) out.push_back(face_of.at({v, nb}));
        return out;
    };

    // Dual adjacency: faces sharing an undirected edge.
    std::vector<std::array<int, 3>> dual_nbrs(face_count, {-1, -1, -1});
    for (int f = 0; f < face_count; ++f) {
        const auto& cyc = triangles[f];
        if (cyc.size() != 3)
            fail(ErrorCode::NotPlanar, "realize_planar_flat: non-triangular face");
        for (int i = 0; i < 3; ++i)
            dual_nbrs[f][i] = face_of.at({cyc[(i + 1) % 3], cyc[i]});
    }

    const int r = first_helper;  // helper whose dual face becomes the outer boundary
    std::vector<int> outer = faces_around(r);
    const int k = static_cast<int>(outer.size());

    std::mt19937_64 rng(seed);
    const double jitter_base = std::uniform_real_distribution<double>(0.0, 1.0)(rng);

    for (int attempt = 0; attempt < 8; ++attempt) {
        // Pin the outer cycle on a circle, solve the barycentric system for
        // the interior face positions.
        std::vector<Vec2d> pos(face_count);
        std::vector<bool> pinned(face_count, false);
        for (int j = 0; j < k; ++j) {
            double ang = 2.0 * M_PI * (j + jitter_base + 0.37 * attempt) / k;
            pos[outer[j]] = {std::cos(ang), std::sin(ang)};
            pinned[outer[j]] = true;
        }
        std::vector<int> unknown;
        std::vector<int> index(face_count, -1);
        for (int f = 0; f < face_count; ++f)
            if (!pinned[f]) {
                index[f] = static_cast<int>(unknown.size());
                unknown.push_back(f);
            }
        const std::size_t u = unknown.size();
        for (int axis = 0; axis < 2; ++axis) {
            std::vector<std::vector<double>> a(u, std::vector<double>(u, 0.0));
            std::vector<double> b(u, 0.0);
            for (std::size_t i = 0; i < u; ++i) {
                a[i][i] = 3.0;
                for (int nb : dual_nbrs[unknown[i]]) {
                    if (pinned[nb]) b[i] += axis == 0 ? pos[nb].x : pos[nb].y;
                    else a[i][index[nb]] -= 1.0;
                }
            }
            std::vector<double> x = solve_dense(std::move(a), std::move(b));
            for (std::size_t i = 0; i < u; ++i)
                (axis == 0 ? pos[unknown[i]].x : pos[unknown[i]].y) = x[i];
        }

        for (int snap_bits : {34, 46}) {
            std::vector<Point3> face_pos(face_count);
            for (int f = 0; f < face_count; ++f)
                face_pos[f] = {snap(pos[f].x, snap_bits), snap(pos[f].y, snap_bits), Rat(0)};

            // Build one polygon per primal vertex except r.
            std::vector<Polygon> polys;
            std::vector<int> poly_of(tri.vertex_count(), -1);
            bool broken = false;
            for (int v = 0; v < tri.vertex_count() && !broken; ++v) {
                if (v == r) continue;
                std::vector<Point3> corners;
                for (int f : faces_around(v)) corners.push_back(face_pos[f]);
                try {
                    Polygon poly(v < n ? "v" + std::to_string(v) : "h" + std::to_string(v),
                                 std::move(corners));
                    if (!is_strictly_convex(poly)) {
                        broken = true;
                        break;
                    }
                    poly_of[v] = static_cast<int>(polys.size());
                    polys.push_back(std::move(poly));
                } catch (const Error&) {
                    broken = true;
                }
            }
            const bool debug = std::getenv("POLYSURF_DEBUG") != nullptr;
            if (broken) {
                if (debug) std::cerr << "[flat] snapped drawing broken (convexity)\n";
                continue;
            }
            Surface drawn(std::move(polys), SurfaceMode::Convex);
            {
                auto rep = validate(drawn);
                if (!rep.valid) {
                    if (debug) {
                        std::cerr << "[flat] drawn surface invalid:\n";
                        for (auto& v : rep.violations) {
                            std::cerr << "  [";
                            for (auto& id : v.ids) std::cerr << id << " ";
                            std::cerr << "] " << v.description << "\n";
                        }
                    }
                    continue;
                }
            }

            // Batched side trims of the augmentation-only edges, then drop
            // the helper polygons.
            std::vector<std::pair<int, int>> removed;
            for (auto [a, b] : aug.edges())
                if (!g.has_edge(a, b)) removed.emplace_back(a, b);

            Rat eps = rat(1, 4);
            for (int shrink = 0; shrink < 10; ++shrink, eps /= 2) {
                auto lists = corner_lists(drawn);
                bool geometry_ok = true;
                std::vector<std::pair<Point3, Point3>> sides;
                std::vector<Point3> trim_corners;
                for (auto [a, b] : removed) {
                    int fa = face_of.at({a, b}), fb = face_of.at({b, a});
                    sides.emplace_back(face_pos[fa], face_pos[fb]);
                }
                for (const auto& [sa, sb] : sides) {
                    for (const Point3* c : {&sa, &sb})
                        if (std::find(trim_corners.begin(), trim_corners.end(), *c) ==
                            trim_corners.end())
                            trim_corners.push_back(*c);
                }
                trim_corners_in_lists(lists, trim_corners, eps);
                for (std::size_t e = 0; e < removed.size(); ++e) {
                    const auto& [sa, sb] = sides[e];
                    for (int v : {removed[e].first, removed[e].second}) {
                        auto& corners = lists[poly_of[v]];
                        auto before = corners.size();
                        erase_corners_on_side(corners, sa, sb);
                        if (corners.size() + 2 != before) {
                            if (debug)
                                std::cerr << "[flat]   edge " << removed[e].first << "-"
                                          << removed[e].second << " poly v" << v << ": erased "
                                          << (before - corners.size()) << " corners (want 2), deg="
                                          << before << "\n";
                            geometry_ok = false;
                        }
                    }
                }
                if (!geometry_ok) {
                    if (debug) std::cerr << "[flat] trim cut points missing\n";
                    continue;
                }

                std::vector<Polygon> final_polys;
                std::vector<std::size_t> witness(n);
                try {
                    for (int v = 0; v < n; ++v) {
                        witness[v] = final_polys.size();
                        final_polys.emplace_back("v" + std::to_string(v),
                                                 std::move(lists[poly_of[v]]));
                    }
                    return detail::finish(Surface(std::move(final_polys), SurfaceMode::Convex), g,
                                          std::move(witness), "realize_planar_flat");
                } catch (const Error& e) {
                    if (debug) std::cerr << "[flat] finish failed: " << e.what() << "\n";
                    continue;  // smaller eps and retry
                }
            }
        }
    }
    fail(ErrorCode::CoordinateDerivationFailed,
         "realize_planar_flat: no verified drawing found");
}

}  // namespace polysurf
