#include "polysurf/graph.hpp"

#include "polysurf/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace polysurf {

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) fail(ErrorCode::BadInput, "add_edge: loop");
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        fail(ErrorCode::BadInput, "add_edge: vertex out of range");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edges_;
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    adj_[u].erase(std::find(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::find(adj_[v].begin(), adj_[v].end(), u));
    --edges_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complete(int n) {
    if (n < 1) fail(ErrorCode::BadInput, "complete: n must be >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) fail(ErrorCode::BadInput, "complete_bipartite: parts must be >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph hypercube(int d) {
    if (d < 0) fail(ErrorCode::BadInput, "hypercube: d must be >= 0");
    if (d > 30) fail(ErrorCode::BadInput, "hypercube: d too large");
    int n = 1 << d;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int bit = 0; bit < d; ++bit)
            if (!(v & (1 << bit))) g.add_edge(v, v | (1 << bit));
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);              // spokes
    }
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph subdivide_graph(const Graph& g, int k) {
    if (k < 1) fail(ErrorCode::BadInput, "subdivide_graph: k must be >= 1");
    Graph out(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        int prev = u;
        for (int i = 0; i < k; ++i) {
            int w = out.add_vertex();
            out.add_edge(prev, w);
            prev = w;
        }
        out.add_edge(prev, v);
    }
    return out;
}

Graph random_gnp(int n, long num, long den, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<long>(rng() % static_cast<std::uint64_t>(den)) < num) g.add_edge(i, j);
    return g;
}

Graph random_planar(int n, int m_target, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
    int budget = 4 * m_target + 64;
    while (static_cast<int>(g.edge_count()) < m_target && budget-- > 0) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        if (!is_planar(g)) g.remove_edge(u, v);
    }
    return g;
}

std::optional<std::vector<int>> contains_subgraph(const Graph& host, const Graph& pattern) {
    const int pn = pattern.vertex_count();
    if (pn > 10) fail(ErrorCode::PatternTooLarge, "contains_subgraph: pattern above 10 vertices");
    const int hn = host.vertex_count();
    if (pn > hn || pattern.edge_count() > host.edge_count()) return std::nullopt;

    // Order pattern vertices by descending degree, connected-first.
    std::vector<int> order;
    std::vector<bool> placed(pn, false);
    for (int step = 0; step < pn; ++step) {
        int best = -1, best_attached = -1, best_deg = -1;
        for (int v = 0; v < pn; ++v) {
            if (placed[v]) continue;
            int attached = 0;
            for (int u : pattern.neighbors(v))
                if (placed[u]) ++attached;
            if (attached > best_attached ||
                (attached == best_attached && pattern.degree(v) > best_deg)) {
                best = v;
                best_attached = attached;
                best_deg = pattern.degree(v);
            }
        }
        order.push_back(best);
        placed[best] = true;
    }

    std::vector<int> map(pn, -1);
    std::vector<bool> used(hn, false);
    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        int pv = order[depth];
        for (int hv = 0; hv < hn; ++hv) {
            if (used[hv] || host.degree(hv) < pattern.degree(pv)) continue;
            bool ok = true;
            for (int pu : pattern.neighbors(pv)) {
                if (map[pu] >= 0 && !host.has_edge(hv, map[pu])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[pv] = hv;
            used[hv] = true;
            if (self(self, depth + 1)) return true;
            map[pv] = -1;
            used[hv] = false;
        }
        return false;
    };
    if (dfs(dfs, 0)) return map;
    return std::nullopt;
}

std::optional<K5tWitness> contains_k5t(const Graph& host, int t) {
    if (t < 1) fail(ErrorCode::BadInput, "contains_k5t: t must be >= 1");
    const int n = host.vertex_count();
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (host.degree(v) >= t) cand.push_back(v);
    if (static_cast<int>(cand.size()) < 5) return std::nullopt;

    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> row(cand.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (int u : host.neighbors(cand[i])) row[i][u >> 6] |= 1ull << (u & 63);

    std::vector<std::uint64_t> common(words);
    std::vector<int> chosen;
    auto popcount_excluding = [&](const std::vector<std::uint64_t>& bits) {
        int c = 0;
        for (int w = 0; w < words; ++w) c += __builtin_popcountll(bits[w]);
        for (int v : chosen)
            if (bits[v >> 6] & (1ull << (v & 63))) --c;
        return c;
    };
    std::optional<K5tWitness> result;
    auto dfs = [&](auto&& self, std::size_t from, std::vector<std::uint64_t> bits) -> bool {
        if (chosen.size() == 5) {
            K5tWitness w;
            w.left = chosen;
            for (int v = 0; v < n && static_cast<int>(w.right.size()) < t; ++v) {
                bool in = bits[v >> 6] & (1ull << (v & 63));
                if (in && std::find(chosen.begin(), chosen.end(), v) == chosen.end())
                    w.right.push_back(v);
            }
            result = std::move(w);
            return true;
        }
        for (std::size_t i = from; i < cand.size(); ++i) {
            std::vector<std::uint64_t> next(words);
            if (chosen.empty()) next = row[i];
            else
                for (int w = 0; w < words; ++w) next[w] = bits[w] & row[i][w];
            chosen.push_back(cand[i]);
            if (popcount_excluding(next) >= t && self(self, i + 1, next)) return true;
            chosen.pop_back();
        }
        return false;
    };
    dfs(dfs, 0, {});
    return result;
}

namespace {

// Iterated neighbor-color refinement; returns stable color classes.
std::vector<int> wl_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    std::vector<int> ca = wl_colors(a), cb = wl_colors(b);
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;

    // Assign a-vertices in order of rarest color, most constrained first.
    std::vector<int> color_count(n + 1, 0);
    for (int c : ca) ++color_count[c];
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        if (color_count[ca[u]] != color_count[ca[v]]) return color_count[ca[u]] < color_count[ca[v]];
        if (a.degree(u) != a.degree(v)) return a.degree(u) > a.degree(v);
        return u < v;
    });

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        int av = order[depth];
        for (int bv = 0; bv < n; ++bv) {
            if (used[bv] || cb[bv] != ca[av] || b.degree(bv) != a.degree(av)) continue;
            bool ok = true;
            for (int au : a.neighbors(av)) {
                if (map[au] >= 0 && !b.has_edge(bv, map[au])) {
                    ok = false;
                    break;
                }
            }
            // Non-neighbors must stay non-neighbors (edge counts equal, but
            // check locally to prune early).
            if (ok) {
                for (int d2 = 0; d2 < depth; ++d2) {
                    int au = order[d2];
                    bool ae = a.has_edge(av, au);
                    bool be = b.has_edge(bv, map[au]);
                    if (ae != be) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            map[av] = bv;
            used[bv] = true;
            if (self(self, depth + 1)) return true;
            map[av] = -1;
            used[bv] = false;
        }
        return false;
    };
    if (dfs(dfs, 0)) return map;
    return std::nullopt;
}

Graph random_three_tree(int n, std::uint64_t seed) {
    if (n < 4) fail(ErrorCode::BadInput, "random_three_tree: n must be >= 4");
    std::mt19937_64 rng(seed);
    Graph g = complete(4);
    std::vector<std::array<int, 3>> triangles = {
        {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (int v = 4; v < n; ++v) {
        auto tri = triangles[rng() % triangles.size()];
        g.add_vertex();
        for (int u : tri) g.add_edge(v, u);
        triangles.push_back({tri[0], tri[1], v});
        triangles.push_back({tri[0], tri[2], v});
        triangles.push_back({tri[1], tri[2], v});
    }
    return g;
}

std::optional<std::vector<StackStep>> is_three_tree(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 4) return std::nullopt;
    // Work on a mutable copy encoded as adjacency sets.
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<bool> alive(n, true);
    auto connected = [&](int u, int v) {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    };
    std::vector<StackStep> reversed;
    int remaining = n;
    while (remaining > 4) {
        int pick = -1;
        std::array<int, 3> tri{};
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!alive[v] || adj[v].size() != 3) continue;
            int a = adj[v][0], b = adj[v][1], c = adj[v][2];
            if (connected(a, b) && connected(a, c) && connected(b, c)) {
                pick = v;
                tri = {a, b, c};
            }
        }
        if (pick < 0) return std::nullopt;
        alive[pick] = false;
        for (int u : adj[pick])
            adj[u].erase(std::find(adj[u].begin(), adj[u].end(), pick));
        adj[pick].clear();
        reversed.push_back({pick, tri[0], tri[1], tri[2]});
        --remaining;
    }
    // The four survivors must induce K4.
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (alive[v]) rest.push_back(v);
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            if (!connected(rest[i], rest[j])) return std::nullopt;
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

Graph triple_stacked_triangle() {
    // Vertices 0..2: the triangle (one K_{3,3} part); 3..5: the other part.
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    for (int c = 3; c < 6; ++c)
        for (int t = 0; t < 3; ++t) g.add_edge(c, t);
    return g;
}

const char* obstruction_kind_name(ObstructionKind kind) {
    switch (kind) {
        case ObstructionKind::K5: return "K5";
        case ObstructionKind::K5_81: return "K5_81";
        default: return "TripleStackedTriangle";
    }
}

std::vector<Obstruction> obstruction_scan(const Graph& g) {
    std::vector<Obstruction> found;
    if (auto w = contains_subgraph(g, complete(5)))
        found.push_back({ObstructionKind::K5, *w});
    if (auto w = contains_k5t(g, 81)) {
        Obstruction o{ObstructionKind::K5_81, {}};
        o.witness = w->left;
        o.witness.insert(o.witness.end(), w->right.begin(), w->right.end());
        found.push_back(std::move(o));
    }
    if (auto w = contains_subgraph(g, triple_stacked_triangle()))
        found.push_back({ObstructionKind::TripleStackedTriangle, *w});
    return found;
}

DensityStats density_stats(const Graph& g) {
    DensityStats s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    s.avg_degree = s.n > 0 ? 2.0 * static_cast<double>(s.m) / s.n : 0.0;
    s.kst_upper = s.n > 0 ? std::pow(static_cast<double>(s.n), 1.8) : 0.0;
    if (s.n > 0) {
        int d = 0;
        while ((1 << (d + 1)) <= s.n) ++d;
        // nearest power of two (ties toward the larger)
        if (s.n - (1 << d) > (1 << (d + 1)) - s.n) ++d;
        s.nearest_pow2_dim = d;
        s.hypercube_edges = static_cast<std::size_t>(1ull << d) * d / 2;
    }
    return s;
}

}  // namespace polysurf
