#include "polysurf/planar_support.hpp"

#include "polysurf/error.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/property_map/property_map.hpp>

#include <map>

namespace polysurf {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.vertex_count());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    return bg;
}

void reindex_edges(BoostGraph& bg) {
    auto index = boost::get(boost::edge_index, bg);
    int next = 0;
    for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei) boost::put(index, *ei, next++);
}

using EmbeddingStorage =
    std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>>;

bool boost_embedding(BoostGraph& bg, EmbeddingStorage& storage) {
    reindex_edges(bg);
    storage.assign(boost::num_vertices(bg), {});
    auto map = boost::make_iterator_property_map(storage.begin(),
                                                 boost::get(boost::vertex_index, bg));
    return boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = map);
}

RotationSystem extract_rotation(const BoostGraph& bg, const EmbeddingStorage& storage) {
    RotationSystem rot(boost::num_vertices(bg));
    for (std::size_t v = 0; v < storage.size(); ++v)
        for (auto e : storage[v]) {
            auto s = boost::source(e, bg), t = boost::target(e, bg);
            rot[v].push_back(static_cast<int>(s == v ? t : s));
        }
    return rot;
}

}  // namespace

bool is_planar(const Graph& g) {
    BoostGraph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<RotationSystem> planar_embedding(const Graph& g) {
    BoostGraph bg = to_boost(g);
    EmbeddingStorage storage;
    if (!boost_embedding(bg, storage)) return std::nullopt;
    return extract_rotation(bg, storage);
}

Graph biconnected_planar_augmentation(const Graph& g) {
    BoostGraph bg = to_boost(g);
    boost::make_connected(bg);
    EmbeddingStorage storage;
    if (!boost_embedding(bg, storage))
        fail(ErrorCode::NotPlanar, "biconnected_planar_augmentation: graph is not planar");
    auto map = boost::make_iterator_property_map(storage.begin(),
                                                 boost::get(boost::vertex_index, bg));
    boost::make_biconnected_planar(bg, map);
    Graph out(g.vertex_count());
    for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei) {
        int u = static_cast<int>(boost::source(*ei, bg));
        int v = static_cast<int>(boost::target(*ei, bg));
        if (u != v) out.add_edge(u, v);
    }
    return out;
}

std::vector<std::vector<int>> embedding_faces(const Graph& g, const RotationSystem& rot) {
    // Walk directed edges: successor of (u -> v) is (v -> w) where w follows
    // u in the rotation at v.
    const int n = g.vertex_count();
    std::map<std::pair<int, int>, int> pos;
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rot[v].size(); ++i) pos[{v, rot[v][i]}] = static_cast<int>(i);
    std::map<std::pair<int, int>, bool> visited;
    std::vector<std::vector<int>> faces;
    for (int u = 0; u < n; ++u)
        for (int v : rot[u]) {
            if (visited[{u, v}]) continue;
            std::vector<int> face;
            int cu = u, cv = v;
            while (!visited[{cu, cv}]) {
                visited[{cu, cv}] = true;
                face.push_back(cu);
                int idx = pos.at({cv, cu});
                int next = rot[cv][(idx + 1) % rot[cv].size()];
                cu = cv;
                cv = next;
            }
            faces.push_back(std::move(face));
        }
    return faces;
}

}  // namespace polysurf
