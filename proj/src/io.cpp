#include "polysurf/io.hpp"

#include "polysurf/error.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace polysurf {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    long n = -1, m = -1;
    Graph g;
    long seen = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        if (n < 0) {
            if (!(ls >> n >> m)) {
                std::string rest;
                if (ls >> rest)
                    fail(ErrorCode::Io, "graph: bad header at line " + std::to_string(lineno));
                continue;  // blank line before header
            }
            if (n < 0 || m < 0) fail(ErrorCode::Io, "graph: negative header counts");
            g = Graph(static_cast<int>(n));
            continue;
        }
        long u, v;
        if (!(ls >> u >> v)) {
            std::string rest;
            if (ls >> rest)
                fail(ErrorCode::Io, "graph: bad edge at line " + std::to_string(lineno));
            continue;
        }
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorCode::Io, "graph: vertex out of range at line " + std::to_string(lineno));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (n < 0) fail(ErrorCode::Io, "graph: missing header");
    if (seen != m) fail(ErrorCode::Io, "graph: header announces " + std::to_string(m) +
                                           " edges, file has " + std::to_string(seen));
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::Io, "cannot open " + path + " for writing");
    write_graph(out, g);
}

Surface read_surface(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Io, std::string("surface: bad json: ") + e.what());
    }
    if (!j.contains("version") || j["version"] != 1)
        fail(ErrorCode::Io, "surface: missing or unsupported version");
    std::string mode_str = j.value("mode", "convex");
    SurfaceMode mode;
    if (mode_str == "convex") mode = SurfaceMode::Convex;
    else if (mode_str == "general") mode = SurfaceMode::General;
    else fail(ErrorCode::Io, "surface: unknown mode '" + mode_str + "'");
    if (!j.contains("polygons") || !j["polygons"].is_array())
        fail(ErrorCode::Io, "surface: missing polygons array");
    std::vector<Polygon> polys;
    std::size_t index = 0;
    for (const auto& jp : j["polygons"]) {
        std::vector<Point3> corners;
        for (const auto& jc : jp) {
            if (!jc.is_array() || jc.size() != 3)
                fail(ErrorCode::Io, "surface: corner must be a triple");
            Point3 p;
            for (int axis = 0; axis < 3; ++axis) {
                const auto& v = jc[axis];
                if (v.is_string()) p[axis] = rat_parse(v.get<std::string>());
                else if (v.is_number_integer()) p[axis] = rat(v.get<long>());
                else fail(ErrorCode::Io, "surface: coordinates must be exact strings or integers");
            }
            corners.push_back(std::move(p));
        }
        std::string id = "p" + std::to_string(index);
        if (j.contains("ids") && index < j["ids"].size()) id = j["ids"][index].get<std::string>();
        polys.emplace_back(std::move(id), std::move(corners));
        ++index;
    }
    return Surface(std::move(polys), mode);
}

void write_surface(std::ostream& out, const Surface& s) {
    nlohmann::json j;
    j["version"] = 1;
    j["mode"] = s.mode() == SurfaceMode::Convex ? "convex" : "general";
    nlohmann::json jpolys = nlohmann::json::array();
    nlohmann::json jids = nlohmann::json::array();
    for (const Polygon& p : s.polygons()) {
        nlohmann::json jp = nlohmann::json::array();
        for (const Point3& c : p.corners())
            jp.push_back({rat_str(c.x), rat_str(c.y), rat_str(c.z)});
        jpolys.push_back(std::move(jp));
        jids.push_back(p.id());
    }
    j["polygons"] = std::move(jpolys);
    j["ids"] = std::move(jids);
    out << j.dump(1) << "\n";
}

Surface load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    return read_surface(in);
}

void save_surface(const std::string& path, const Surface& s) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::Io, "cannot open " + path + " for writing");
    write_surface(out, s);
}

namespace {

struct MeshData {
    std::vector<std::string> vertices;                // formatted coordinates
    std::vector<std::vector<std::size_t>> faces;      // vertex indices
};

MeshData build_mesh(const Surface& s, int digits) {
    MeshData mesh;
    std::map<Point3, std::size_t, Vec3Less> index;
    for (const Polygon& p : s.polygons()) {
        std::vector<std::size_t> face;
        for (const Point3& c : p.corners()) {
            auto [it, inserted] = index.emplace(c, mesh.vertices.size());
            if (inserted)
                mesh.vertices.push_back(rat_decimal(c.x, digits) + " " + rat_decimal(c.y, digits) +
                                        " " + rat_decimal(c.z, digits));
            face.push_back(it->second);
        }
        mesh.faces.push_back(std::move(face));
    }
    return mesh;
}

}  // namespace

void export_off(std::ostream& out, const Surface& s, int digits) {
    MeshData mesh = build_mesh(s, digits);
    std::size_t edge_count = 0;
    for (const auto& f : mesh.faces) edge_count += f.size();
    out << "OFF\n" << mesh.vertices.size() << " " << mesh.faces.size() << " " << edge_count
        << "\n";
    for (const auto& v : mesh.vertices) out << v << "\n";
    for (const auto& f : mesh.faces) {
        out << f.size();
        for (std::size_t i : f) out << " " << i;
        out << "\n";
    }
}

void export_obj(std::ostream& out, const Surface& s, int digits) {
    MeshData mesh = build_mesh(s, digits);
    for (const auto& v : mesh.vertices) out << "v " << v << "\n";
    for (const auto& f : mesh.faces) {
        out << "f";
        for (std::size_t i : f) out << " " << (i + 1);
        out << "\n";
    }
}

}  // namespace polysurf
